#include "fusion/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace fusion {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what, const std::string& field,
                       const std::string& reason) {
  throw std::runtime_error(what + " json: field '" + field + "' " + reason);
}

const json& require(const json& j, const char* field, const char* what) {
  if (!j.is_object()) throw std::runtime_error(std::string(what) + " json: expected an object");
  auto it = j.find(field);
  if (it == j.end()) fail(what, field, "is missing");
  return *it;
}

std::string require_string(const json& j, const char* what, const std::string& field) {
  if (!j.is_string()) fail(what, field, "must be a string");
  return j.get<std::string>();
}

long require_int(const json& j, const char* what, const std::string& field) {
  if (!j.is_number_integer()) fail(what, field, "must be an integer");
  return j.get<long>();
}

}  // namespace

ordered_json algebra_to_json(const FusionAlgebra& f) {
  ordered_json j;
  j["labels"] = f.labels();
  j["identity"] = f.label(f.identity());
  ordered_json conj = ordered_json::array();
  for (int i = 0; i < f.size(); ++i) conj.push_back(f.label(f.conjugate(i)));
  j["conjugation"] = std::move(conj);
  ordered_json triples = ordered_json::array();
  for (const auto& [t, n] : f.structure())
    triples.push_back({f.label(t[0]), f.label(t[1]), f.label(t[2]), n});
  j["triples"] = std::move(triples);
  return j;
}

FusionAlgebra algebra_from_json(const json& j) {
  const char* what = "algebra";
  const json& jlabels = require(j, "labels", what);
  if (!jlabels.is_array() || jlabels.empty()) fail(what, "labels", "must be a nonempty array");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& l : jlabels) {
    std::string s = require_string(l, what, "labels");
    if (!index.emplace(s, static_cast<int>(labels.size())).second)
      fail(what, "labels", "contains duplicate '" + s + "'");
    labels.push_back(std::move(s));
  }
  auto lookup = [&](const std::string& s, const std::string& field) {
    auto it = index.find(s);
    if (it == index.end()) fail(what, field, "references unknown label '" + s + "'");
    return it->second;
  };

  const int identity = lookup(require_string(require(j, "identity", what), what, "identity"), "identity");

  const json& jconj = require(j, "conjugation", what);
  if (!jconj.is_array() || jconj.size() != labels.size())
    fail(what, "conjugation", "must be an array aligned with labels");
  std::vector<int> conjugation;
  for (const auto& c : jconj)
    conjugation.push_back(lookup(require_string(c, what, "conjugation"), "conjugation"));

  const json& jtriples = require(j, "triples", what);
  if (!jtriples.is_array()) fail(what, "triples", "must be an array");
  std::map<Triple, long> structure;
  for (const auto& t : jtriples) {
    if (!t.is_array() || t.size() != 4) fail(what, "triples", "entries must be [a,b,c,n]");
    Triple key{lookup(require_string(t[0], what, "triples"), "triples"),
               lookup(require_string(t[1], what, "triples"), "triples"),
               lookup(require_string(t[2], what, "triples"), "triples")};
    long n = require_int(t[3], what, "triples");
    if (n < 1) fail(what, "triples", "must carry coefficients >= 1");
    if (!structure.emplace(key, n).second) fail(what, "triples", "lists a triple twice");
  }

  try {
    return FusionAlgebra(std::move(labels), identity, std::move(conjugation),
                         std::move(structure));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("algebra json: ") + e.what());
  }
}

ordered_json partition_to_json(const GroupPartition& p) {
  ordered_json j;
  j["modulus"] = p.modulus();
  j["length"] = p.length();
  ordered_json blocks = ordered_json::array();
  for (int i = 0; i < p.block_count(); ++i) {
    ordered_json block = ordered_json::array();
    for (const GroupVector& g : p.block(i)) block.push_back(g.entries());
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

GroupPartition partition_from_json(const json& j) {
  const char* what = "partition";
  const long modulus = require_int(require(j, "modulus", what), what, "modulus");
  const long length = require_int(require(j, "length", what), what, "length");
  if (modulus < 1) fail(what, "modulus", "must be positive");
  if (length < 1) fail(what, "length", "must be positive");
  const json& jblocks = require(j, "blocks", what);
  if (!jblocks.is_array()) fail(what, "blocks", "must be an array");
  std::vector<std::vector<GroupVector>> blocks;
  for (const auto& jb : jblocks) {
    if (!jb.is_array()) fail(what, "blocks", "must contain arrays of elements");
    std::vector<GroupVector> block;
    for (const auto& je : jb) {
      if (!je.is_array() || je.empty()) fail(what, "blocks", "elements must be nonempty arrays");
      std::vector<int> entries;
      for (const auto& v : je)
        entries.push_back(static_cast<int>(require_int(v, what, "blocks")));
      if (static_cast<long>(entries.size()) != length)
        fail(what, "blocks", "contains an element of the wrong length");
      for (int e : entries)
        if (e < 0 || e >= modulus) fail(what, "blocks", "contains an entry outside [0, N-1]");
      block.emplace_back(static_cast<int>(modulus), std::move(entries));
    }
    blocks.push_back(std::move(block));
  }
  try {
    return GroupPartition(static_cast<int>(modulus), static_cast<int>(length),
                          std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("partition json: ") + e.what());
  }
}

ordered_json cover_map_to_json(const std::map<std::string, int>& phi) {
  ordered_json j = ordered_json::object();
  for (const auto& [label, block] : phi) j[label] = block;
  return j;
}

std::map<std::string, int> cover_map_from_json(const json& j) {
  if (!j.is_object() || j.empty())
    throw std::runtime_error("cover map json: expected a nonempty object of label -> block index");
  std::map<std::string, int> phi;
  for (const auto& [label, block] : j.items()) {
    if (!block.is_number_integer())
      throw std::runtime_error("cover map json: field '" + label + "' must be an integer block index");
    phi[label] = block.get<int>();
  }
  return phi;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
}

}  // namespace fusion
