// Command line front end: fusion tables, orbit counts, cross-check sweeps and
// cover verification, in plain text, CSV or JSON. All output is
// byte-deterministic for fixed arguments.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusion/fusion_algebra.hpp"
#include "fusion/group_vector.hpp"
#include "fusion/orbit_count.hpp"
#include "fusion/partition_cover.hpp"
#include "fusion/serialize.hpp"
#include "fusion/type_a.hpp"

using namespace fusion;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

OrbitLabel parse_composition(const std::string& text, int rank, int level,
                             const std::string& name) {
  std::vector<int> counts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(part, &pos);
      if (pos != part.size()) throw std::invalid_argument(part);
      counts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": '" + part + "' is not an integer");
    }
  }
  if (static_cast<int>(counts.size()) != rank)
    throw UsageError("--" + name + ": expected " + std::to_string(rank) +
                     " comma-separated counts");
  long sum = 0;
  for (int v : counts) {
    if (v < 0) throw UsageError("--" + name + ": counts must be nonnegative");
    sum += v;
  }
  if (sum != level)
    throw UsageError("--" + name + ": counts must sum to the level " +
                     std::to_string(level));
  return OrbitLabel(rank, std::move(counts));
}

std::string short_name(int i) { return "[" + std::to_string(i) + "]"; }

std::string formal_sum(const std::map<int, long>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, n] : terms) {
    if (!out.empty()) out += '+';
    if (n != 1) out += std::to_string(n);
    out += short_name(c);
  }
  return out;
}

void require_rank23(int rank) {
  if (rank != 2 && rank != 3)
    throw UsageError("unsupported rank " + std::to_string(rank) +
                     " (closed forms exist for ranks 2 and 3)");
}

void require_level(int level) {
  if (level < 1) throw UsageError("level must be >= 1");
}

// ---- orbits ---------------------------------------------------------------

int cmd_orbits(int rank, int level, const std::string& format) {
  if (rank < 2) throw UsageError("rank must be >= 2");
  require_level(level);
  const auto modules = modules_at_level(rank, level);

  if (format == "json") {
    ordered_json j;
    j["modulus"] = rank;
    j["level"] = level;
    ordered_json orbits = ordered_json::array();
    for (size_t i = 0; i < modules.size(); ++i) {
      ordered_json o;
      o["index"] = i;
      o["counts"] = modules[i].counts();
      o["size"] = orbit_size(modules[i]);
      o["standard_form"] = standard_form(modules[i]).entries();
      orbits.push_back(std::move(o));
    }
    j["orbits"] = std::move(orbits);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "index,label,size,standard_form\n";
    for (size_t i = 0; i < modules.size(); ++i)
      std::cout << i << ',' << csv_quote(modules[i].to_string()) << ','
                << orbit_size(modules[i]) << ','
                << csv_quote(standard_form(modules[i]).to_string()) << "\n";
  } else {
    for (size_t i = 0; i < modules.size(); ++i)
      std::cout << short_name(static_cast<int>(i)) << " = " << modules[i].to_string()
                << "  size " << orbit_size(modules[i]) << "  standard "
                << standard_form(modules[i]).to_string() << "\n";
  }
  return 0;
}

// ---- table ----------------------------------------------------------------

int cmd_table(int rank, int level, const std::string& format) {
  require_rank23(rank);
  require_level(level);
  const FusionAlgebra f = build_fusion_algebra(rank, level);

  if (format == "json") {
    std::cout << algebra_to_json(f).dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "a,b,c,n\n";
    for (const auto& [t, n] : f.structure())
      std::cout << csv_quote(f.label(t[0])) << ',' << csv_quote(f.label(t[1])) << ','
                << csv_quote(f.label(t[2])) << ',' << n << "\n";
    return 0;
  }

  const int n = f.size();
  for (int i = 0; i < n; ++i)
    std::cout << short_name(i) << " = " << f.label(i) << "\n";
  std::cout << "\n";

  // upper triangle, columns sized to their widest cell
  std::vector<std::vector<std::string>> cells(
      static_cast<size_t>(n + 1), std::vector<std::string>(static_cast<size_t>(n + 1)));
  cells[0][0] = "[a]x[b]";
  for (int i = 0; i < n; ++i) {
    cells[0][static_cast<size_t>(i + 1)] = short_name(i);
    cells[static_cast<size_t>(i + 1)][0] = short_name(i);
    for (int j = i; j < n; ++j)
      cells[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)] =
          formal_sum(f.product(i, j));
  }
  std::vector<size_t> width(static_cast<size_t>(n + 1), 0);
  for (const auto& row : cells)
    for (size_t col = 0; col < row.size(); ++col)
      width[col] = std::max(width[col], row[col].size());
  for (const auto& row : cells) {
    std::string line;
    for (size_t col = 0; col < row.size(); ++col) {
      std::string cell = row[col];
      cell.resize(width[col], ' ');
      line += cell;
      if (col + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << "\n";
  }
  return 0;
}

// ---- count ----------------------------------------------------------------

int cmd_count(int rank, int level, const std::string& a_text, const std::string& b_text,
              const std::string& c_text, const std::string& method,
              const std::string& format) {
  require_rank23(rank);
  require_level(level);
  const OrbitLabel a = parse_composition(a_text, rank, level, "a");
  const OrbitLabel b = parse_composition(b_text, rank, level, "b");
  const OrbitLabel c = parse_composition(c_text, rank, level, "c");

  if (method != "all" && method != "brute" && method != "kmatrix" &&
      method != "closed" && method != "minsum")
    throw UsageError("--method must be one of all, brute, kmatrix, closed, minsum");
  if (method == "minsum" && rank != 3)
    throw UsageError("--method minsum applies to rank 3 only");

  std::vector<std::pair<std::string, unsigned long long>> methods;
  const bool all = method == "all";
  if (all || method == "brute")
    methods.emplace_back("brute", orbit_count_brute_force(a, b, c));
  if (all || method == "kmatrix")
    methods.emplace_back("kmatrix", count_k_matrices(a, b, c));
  if (all || method == "closed")
    methods.emplace_back(
        "closed", rank == 2 ? static_cast<unsigned long long>(orbit_count_rank2(a, b, c, level))
                            : orbit_count_rank3(a, b, c, level));
  if (rank == 3 && (all || method == "minsum"))
    methods.emplace_back("minsum", orbit_count_rank3_minsum(a, b, c, level));
  const long coeff = fusion_from_orbit_count(a, b, c, level);

  if (format == "json") {
    ordered_json j;
    j["rank"] = rank;
    j["level"] = level;
    j["a"] = a.counts();
    j["b"] = b.counts();
    j["c"] = c.counts();
    ordered_json m = ordered_json::object();
    for (const auto& [name, value] : methods) m[name] = value;
    j["orbit_count"] = std::move(m);
    j["fusion_coefficient"] = coeff;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "method,value\n";
    for (const auto& [name, value] : methods) std::cout << name << ',' << value << "\n";
    std::cout << "fusion," << coeff << "\n";
  } else {
    std::cout << "a = " << a.to_string() << "\nb = " << b.to_string()
              << "\nc = " << c.to_string() << "\n";
    for (const auto& [name, value] : methods)
      std::cout << name << " = " << value << "\n";
    std::cout << "fusion = " << coeff << "\n";
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct TripleRecord {
  int level = 0;
  std::string a, b, c;
  unsigned long long brute = 0, kmatrix = 0, closed = 0;
  unsigned long long minsum = 0;  // rank 3 only
  long coeff = 0;
  bool ok = false;
};

struct LevelSummary {
  int level;
  size_t triples;
  size_t failures;
  bool axioms_pass;
  bool cover_consistent;
};

int cmd_verify(int rank, int level_min, int level_max, const std::string& format) {
  require_rank23(rank);
  if (level_min < 1 || level_max < level_min)
    throw UsageError("need 1 <= --level-min <= --level-max");

  std::vector<TripleRecord> records;
  std::vector<LevelSummary> levels;
  size_t total_failures = 0;

  for (int k = level_min; k <= level_max; ++k) {
    const auto modules = modules_at_level(rank, k);
    size_t failures = 0;
    for (const OrbitLabel& a : modules)
      for (const OrbitLabel& b : modules)
        for (const OrbitLabel& c : modules) {
          TripleRecord r;
          r.level = k;
          r.a = a.to_string();
          r.b = b.to_string();
          r.c = c.to_string();
          r.brute = orbit_count_brute_force(a, b, c);
          r.kmatrix = count_k_matrices(a, b, c);
          if (rank == 2) {
            r.closed = static_cast<unsigned long long>(orbit_count_rank2(a, b, c, k));
            r.coeff = a1_fusion(spin_of(a), spin_of(b), spin_of(c), k);
            r.ok = r.brute == r.kmatrix && r.brute == r.closed &&
                   r.brute == static_cast<unsigned long long>(r.coeff);
          } else {
            r.closed = orbit_count_rank3(a, b, c, k);
            r.minsum = orbit_count_rank3_minsum(a, b, c, k);
            r.coeff = a2_fusion_symmetric(weight_of(a), weight_of(b), weight_of(c), k);
            r.ok = r.brute == r.kmatrix && r.brute == r.closed && r.brute == r.minsum &&
                   r.brute == binomial(r.coeff + 1, 2) &&
                   fusion_from_orbit_count(a, b, c, k) == r.coeff;
          }
          if (!r.ok) ++failures;
          records.push_back(std::move(r));
        }

    const FusionAlgebra f = build_fusion_algebra(rank, k);
    const bool axioms_pass = check_axioms(f).all_passed();

    // a covering must exist exactly when the table is multiplicity-free
    bool multiplicity_free = true;
    for (const auto& [t, n] : f.structure())
      if (n > 1) multiplicity_free = false;
    std::map<std::string, int> phi;
    for (int i = 0; i < f.size(); ++i) phi[f.label(i)] = i;
    const CoverReport cover = verify_cover(f, standard_partition(rank, k), phi);
    const bool cover_consistent =
        cover.covered == multiplicity_free && (rank != 2 || cover.covered);

    if (!axioms_pass) ++failures;
    if (!cover_consistent) ++failures;
    levels.push_back({k,
                      modules.size() * modules.size() * modules.size(),
                      failures, axioms_pass, cover_consistent});
    total_failures += failures;
  }

  const bool pass = total_failures == 0;

  if (format == "json") {
    ordered_json j;
    j["rank"] = rank;
    j["level_min"] = level_min;
    j["level_max"] = level_max;
    ordered_json jl = ordered_json::array();
    for (const auto& l : levels) {
      ordered_json e;
      e["level"] = l.level;
      e["triples"] = l.triples;
      e["failures"] = l.failures;
      e["axioms_pass"] = l.axioms_pass;
      e["cover_consistent"] = l.cover_consistent;
      jl.push_back(std::move(e));
    }
    j["levels"] = std::move(jl);
    ordered_json jr = ordered_json::array();
    for (const auto& r : records) {
      ordered_json e;
      e["level"] = r.level;
      e["a"] = r.a;
      e["b"] = r.b;
      e["c"] = r.c;
      e["brute"] = r.brute;
      e["kmatrix"] = r.kmatrix;
      e["closed"] = r.closed;
      if (rank == 3) e["minsum"] = r.minsum;
      e["fusion"] = r.coeff;
      e["ok"] = r.ok;
      jr.push_back(std::move(e));
    }
    j["records"] = std::move(jr);
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "level,a,b,c,brute,kmatrix,closed,minsum,fusion,ok\n";
    for (const auto& r : records) {
      std::cout << r.level << ',' << csv_quote(r.a) << ',' << csv_quote(r.b) << ','
                << csv_quote(r.c) << ',' << r.brute << ',' << r.kmatrix << ','
                << r.closed << ',';
      if (rank == 3) std::cout << r.minsum;
      std::cout << ',' << r.coeff << ',' << (r.ok ? 1 : 0) << "\n";
    }
  } else {
    for (const auto& l : levels)
      std::cout << "level " << l.level << ": " << l.triples << " triples, "
                << l.failures << " failures, axioms "
                << (l.axioms_pass ? "pass" : "FAIL") << ", cover "
                << (l.cover_consistent ? "consistent" : "INCONSISTENT") << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << ": rank " << rank << ", levels "
              << level_min << ".." << level_max << ", " << records.size()
              << " triples checked\n";
  }
  return pass ? 0 : 1;
}

// ---- cover ----------------------------------------------------------------

int cmd_cover(const std::string& algebra_path, const std::string& partition_path,
              const std::string& map_path, const std::string& format) {
  const FusionAlgebra f = algebra_from_json(load_json_file(algebra_path));
  const GroupPartition p = partition_from_json(load_json_file(partition_path));
  const std::map<std::string, int> phi = cover_map_from_json(load_json_file(map_path));

  const CoverReport r = verify_cover(f, p, phi);

  if (format == "json") {
    ordered_json j;
    j["associative"] = r.associative;
    if (!r.associative) j["associativity_witness"] = r.associativity_witness;
    j["covered"] = r.covered;
    ordered_json m = ordered_json::array();
    for (const auto& mm : r.mismatches)
      m.push_back({{"kind", mm.kind}, {"detail", mm.detail}});
    j["mismatches"] = std::move(m);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "kind,detail\n";
    for (const auto& mm : r.mismatches)
      std::cout << mm.kind << ',' << csv_quote(mm.detail) << "\n";
  } else {
    if (r.associative) {
      std::cout << "partition: associative\n";
    } else {
      std::cout << "partition: NOT associative, witness ("
                << r.associativity_witness[0] << ',' << r.associativity_witness[1]
                << ',' << r.associativity_witness[2] << ")\n";
    }
    std::cout << "cover: " << (r.covered ? "verified" : "NOT a cover") << "\n";
    for (const auto& mm : r.mismatches)
      std::cout << "  " << mm.kind << ": " << mm.detail << "\n";
  }
  return r.covered ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fusion tables, orbit counts and group covers for affine type A"};
  app.require_subcommand(1);

  std::string format = "plain";
  int rank = 0;
  int level = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--rank", rank, "group rank parameter N");
  app.add_option("--level", level, "level k");

  CLI::App* orbits = app.add_subcommand("orbits", "list the level-k orbit labels");
  orbits->fallthrough();

  CLI::App* table = app.add_subcommand("table", "emit the level-k fusion table");
  table->fallthrough();

  CLI::App* count = app.add_subcommand("count", "count zero-sum orbit triples");
  count->fallthrough();
  std::string a_text, b_text, c_text, method = "all";
  count->add_option("--a", a_text, "first orbit label, e.g. 1,1,1")->required();
  count->add_option("--b", b_text, "second orbit label")->required();
  count->add_option("--c", c_text, "third orbit label")->required();
  count->add_option("--method", method, "all, brute, kmatrix, closed or minsum");

  CLI::App* verify =
      app.add_subcommand("verify", "sweep all triples and cross-check every route");
  verify->fallthrough();
  int level_min = 1, level_max = 0;
  verify->add_option("--level-min", level_min, "first level to sweep");
  verify->add_option("--level-max", level_max, "last level to sweep");

  CLI::App* cover = app.add_subcommand("cover", "verify a partition cover of an algebra");
  cover->fallthrough();
  std::string algebra_path, partition_path, map_path;
  cover->add_option("--algebra", algebra_path, "algebra JSON file")->required();
  cover->add_option("--partition", partition_path, "partition JSON file")->required();
  cover->add_option("--map", map_path, "cover map JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(orbits)) return cmd_orbits(rank, level, format);
    if (app.got_subcommand(table)) return cmd_table(rank, level, format);
    if (app.got_subcommand(count))
      return cmd_count(rank, level, a_text, b_text, c_text, method, format);
    if (app.got_subcommand(verify)) {
      if (level_max == 0) level_max = level;
      return cmd_verify(rank, level_min, level_max, format);
    }
    if (app.got_subcommand(cover))
      return cmd_cover(algebra_path, partition_path, map_path, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
