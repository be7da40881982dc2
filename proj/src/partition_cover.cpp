#include "fusion/partition_cover.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fusion/type_a.hpp"

namespace fusion {

namespace {

unsigned long long ipow(unsigned long long base, int exp) {
  unsigned long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1ULL << 40)) throw std::invalid_argument("group partition: group too large");
    r *= base;
  }
  return r;
}

std::string format_index_set(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

GroupPartition::GroupPartition(int modulus, int length,
                               std::vector<std::vector<GroupVector>> blocks)
    : modulus_(modulus), length_(length), blocks_(std::move(blocks)) {
  if (modulus_ < 1 || length_ < 1)
    throw std::invalid_argument("group partition: modulus and length must be positive");
  if (blocks_.empty()) throw std::invalid_argument("group partition: no blocks");

  unsigned long long covered = 0;
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    auto& block = blocks_[bi];
    if (block.empty()) throw std::invalid_argument("group partition: empty block");
    std::sort(block.begin(), block.end());
    for (const GroupVector& g : block) {
      if (g.modulus() != modulus_ || g.length() != length_)
        throw std::invalid_argument("group partition: element outside the group");
      if (!block_of_.emplace(g.entries(), static_cast<int>(bi)).second)
        throw std::invalid_argument("group partition: blocks are not disjoint");
      ++covered;
    }
  }
  if (covered != ipow(static_cast<unsigned long long>(modulus_), length_))
    throw std::invalid_argument("group partition: blocks do not cover the group");

  const GroupVector zero(modulus_, std::vector<int>(static_cast<size_t>(length_), 0));
  if (blocks_[0].size() != 1 || blocks_[0][0] != zero)
    throw std::invalid_argument("group partition: block 0 must be exactly {0}");
}

int GroupPartition::block_index_of(const GroupVector& g) const {
  auto it = block_of_.find(g.entries());
  if (it == block_of_.end() || g.modulus() != modulus_)
    throw std::out_of_range("group partition: element not in the group");
  return it->second;
}

std::set<int> partition_product(const GroupPartition& p, int i, int j) {
  if (i < 0 || i >= p.block_count() || j < 0 || j >= p.block_count())
    throw std::out_of_range("partition product: block index out of range");
  std::set<int> out;
  for (const GroupVector& x : p.block(i))
    for (const GroupVector& y : p.block(j)) out.insert(p.block_index_of(add(x, y)));
  return out;
}

AssociativityResult is_associative(const GroupPartition& p) {
  const int n = p.block_count();
  std::vector<std::vector<std::vector<char>>> t(
      static_cast<size_t>(n),
      std::vector<std::vector<char>>(static_cast<size_t>(n),
                                     std::vector<char>(static_cast<size_t>(n), 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int e : partition_product(p, i, j))
        t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(e)] = 1;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int f = 0; f < n; ++f) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(e)] *
                   t[static_cast<size_t>(e)][static_cast<size_t>(l)][static_cast<size_t>(f)];
            rhs += t[static_cast<size_t>(j)][static_cast<size_t>(l)][static_cast<size_t>(e)] *
                   t[static_cast<size_t>(i)][static_cast<size_t>(e)][static_cast<size_t>(f)];
          }
          if (lhs != rhs) return {false, {i, j, l}};
        }
  return {true, {-1, -1, -1}};
}

GroupPartition standard_partition(int n, int k) {
  std::vector<std::vector<GroupVector>> blocks;
  for (const OrbitLabel& label : modules_at_level(n, k))
    blocks.push_back(enumerate_orbit(label));
  return GroupPartition(n, k, std::move(blocks));
}

CoverReport verify_cover(const FusionAlgebra& f, const GroupPartition& p,
                         const std::map<std::string, int>& phi) {
  const int n = f.size();
  if (p.block_count() != n)
    throw std::invalid_argument("verify_cover: phi must be a bijection (block count differs from label count)");
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("verify_cover: phi must map every algebra label");
  std::vector<int> phi_of(static_cast<size_t>(n), -1);
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (const auto& [label, block] : phi) {
    const int a = f.index_of(label);
    if (block < 0 || block >= n || hit[static_cast<size_t>(block)])
      throw std::invalid_argument("verify_cover: phi must be a bijection onto the blocks");
    phi_of[static_cast<size_t>(a)] = block;
    hit[static_cast<size_t>(block)] = true;
  }
  if (phi_of[static_cast<size_t>(f.identity())] != 0)
    throw std::invalid_argument("verify_cover: phi must send the identity to block 0");

  CoverReport report;
  const AssociativityResult assoc = is_associative(p);
  report.associative = assoc.associative;
  report.associativity_witness = assoc.witness;
  if (!assoc.associative) {
    std::ostringstream os;
    os << "partition is not associative, witness (" << assoc.witness[0] << ','
       << assoc.witness[1] << ',' << assoc.witness[2] << ')';
    report.mismatches.push_back({"associativity", os.str()});
  }

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::set<int> mapped_support;
      for (const auto& [c, coeff] : f.product(a, b)) {
        if (coeff > 1) {
          std::ostringstream os;
          os << "N(" << f.label(a) << ',' << f.label(b) << " -> " << f.label(c)
             << ") = " << coeff << " exceeds 1; coverings are multiplicity-free";
          report.mismatches.push_back({"multiplicity", os.str()});
        }
        mapped_support.insert(phi_of[static_cast<size_t>(c)]);
      }
      const std::set<int> block_support =
          partition_product(p, phi_of[static_cast<size_t>(a)], phi_of[static_cast<size_t>(b)]);
      if (mapped_support != block_support) {
        std::ostringstream os;
        os << f.label(a) << " x " << f.label(b) << ": algebra support maps to "
           << format_index_set(mapped_support) << " but blocks give "
           << format_index_set(block_support);
        report.mismatches.push_back({"support", os.str()});
      }
    }

  report.covered = report.associative && report.mismatches.empty();
  return report;
}

}  // namespace fusion
