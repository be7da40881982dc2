// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its runtime budget; exceeding the budget is
// a failure even when the values agree.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/fixtures.hpp"
#include "fusion/fusion_algebra.hpp"
#include "fusion/group_vector.hpp"
#include "fusion/orbit_count.hpp"
#include "fusion/partition_cover.hpp"
#include "fusion/serialize.hpp"
#include "fusion/type_a.hpp"

using namespace fusion;

namespace {

const std::string kFixtureDir = FUSION_FIXTURE_DIR;

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 = no stated budget
  bool (*check)(std::string& detail);
};

struct TableFixture {
  FusionAlgebra algebra;
  std::vector<OrbitLabel> mapped;  // fixture index -> orbit label
  bool partial;
  int rank;
  int level;
};

TableFixture load_table_fixture(const std::string& file) {
  const nlohmann::json j = load_json_file(kFixtureDir + "/" + file);
  FusionAlgebra algebra = algebra_from_json(j);
  std::vector<OrbitLabel> mapped;
  int rank = 0, level = 0;
  for (int i = 0; i < algebra.size(); ++i) {
    const auto counts = j.at("label_map").at(algebra.label(i)).get<std::vector<int>>();
    OrbitLabel label(static_cast<int>(counts.size()), counts);
    rank = label.modulus();
    level = label.level();
    mapped.push_back(std::move(label));
  }
  return {std::move(algebra), std::move(mapped), j.value("partial", false), rank, level};
}

bool check_table_fixture(const std::string& file, std::string& detail) {
  const TableFixture fx = load_table_fixture(file);
  const FusionAlgebra built = build_fusion_algebra(fx.rank, fx.level);
  if (!fx.partial && built.size() != fx.algebra.size()) {
    detail = file + ": label count differs";
    return false;
  }
  std::vector<int> to_built(static_cast<size_t>(fx.algebra.size()));
  for (int i = 0; i < fx.algebra.size(); ++i)
    to_built[static_cast<size_t>(i)] = built.index_of(fx.mapped[static_cast<size_t>(i)].to_string());

  if (to_built[static_cast<size_t>(fx.algebra.identity())] != built.identity()) {
    detail = file + ": identity maps to the wrong module";
    return false;
  }
  for (int a = 0; a < fx.algebra.size(); ++a) {
    if (built.conjugate(to_built[static_cast<size_t>(a)]) !=
        to_built[static_cast<size_t>(fx.algebra.conjugate(a))]) {
      detail = file + ": conjugation mismatch at " + fx.algebra.label(a);
      return false;
    }
  }
  for (int a = 0; a < fx.algebra.size(); ++a)
    for (int b = 0; b < fx.algebra.size(); ++b) {
      std::map<int, long> want;
      for (const auto& [c, n] : fx.algebra.product(a, b))
        want[to_built[static_cast<size_t>(c)]] = n;
      const std::map<int, long> got =
          built.product(to_built[static_cast<size_t>(a)], to_built[static_cast<size_t>(b)]);
      if (want != got) {
        detail = file + ": cell " + fx.algebra.label(a) + " x " + fx.algebra.label(b) +
                 " differs";
        return false;
      }
    }
  return true;
}

// 1. Tables 4, 6, 8 and the shown part of table 10, cell for cell.
bool criterion_tables(std::string& detail) {
  for (const char* file : {"table4_a1_k2.json", "table6_a1_k3.json", "table8_a2_k2.json",
                           "table10_a2_k3_partial.json"})
    if (!check_table_fixture(file, detail)) return false;

  // the multiplicity-two cell must really carry coefficient 2
  const TableFixture t10 = load_table_fixture("table10_a2_k3_partial.json");
  const int i9 = t10.algebra.index_of("[9]");
  if (t10.algebra.coefficient(i9, i9, i9) != 2) {
    detail = "table 10 fixture lost the coefficient-2 entry";
    return false;
  }
  return true;
}

// 2. The Z_5 partition is nonassociative with the two stated triple products.
bool criterion_z5(std::string& detail) {
  const GroupPartition p = fixtures::z5_partition();
  if (is_associative(p).associative) {
    detail = "Z_5 partition reported associative";
    return false;
  }
  auto left = [&](int i, int j, int l) {
    std::map<int, long> out;
    for (int e : partition_product(p, i, j))
      for (int f : partition_product(p, e, l)) ++out[f];
    return out;
  };
  auto right = [&](int i, int j, int l) {
    std::map<int, long> out;
    for (int e : partition_product(p, j, l))
      for (int f : partition_product(p, i, e)) ++out[f];
    return out;
  };
  const std::map<int, long> want_left = {{0, 1}, {1, 2}, {2, 3}};   // P0+2P1+3P2
  const std::map<int, long> want_right = {{0, 1}, {1, 2}, {2, 2}};  // P0+2P1+2P2
  if (left(1, 2, 2) != want_left || right(1, 2, 2) != want_right) {
    detail = "triple products of the Z_5 partition are wrong";
    return false;
  }
  return true;
}

// 3. Covering checks: Z_2^k for k = 1..6, Z_3^2 at level 2, W3(1,1).
bool criterion_covers(std::string& detail) {
  for (int k = 1; k <= 6; ++k) {
    const FusionAlgebra f = build_fusion_algebra(2, k);
    std::map<std::string, int> phi;
    for (int i = 0; i < f.size(); ++i) phi[f.label(i)] = i;
    if (!verify_cover(f, standard_partition(2, k), phi).covered) {
      detail = "Z_2^" + std::to_string(k) + " does not cover the level-" +
               std::to_string(k) + " rank-2 algebra";
      return false;
    }
  }
  {
    const FusionAlgebra f = build_fusion_algebra(3, 2);
    std::map<std::string, int> phi;
    for (int i = 0; i < f.size(); ++i) phi[f.label(i)] = i;
    if (!verify_cover(f, standard_partition(3, 2), phi).covered) {
      detail = "Z_3^2 does not cover the level-2 rank-3 algebra";
      return false;
    }
  }
  {
    const FusionAlgebra f = algebra_from_json(load_json_file(kFixtureDir + "/w3_11.json"));
    const GroupPartition p =
        partition_from_json(load_json_file(kFixtureDir + "/z3sq_w3_partition.json"));
    const auto phi = cover_map_from_json(load_json_file(kFixtureDir + "/w3_11_cover_map.json"));
    if (!verify_cover(f, p, phi).covered) {
      detail = "Z_3^2 does not cover the W3(1,1) fixture";
      return false;
    }
  }
  return true;
}

// 4. Rank 2, k = 1..8: brute force = matrix count = closed form = a1 fusion.
bool criterion_rank2(std::string& detail) {
  for (int k = 1; k <= 8; ++k) {
    const auto modules = modules_at_level(2, k);
    for (const OrbitLabel& a : modules)
      for (const OrbitLabel& b : modules)
        for (const OrbitLabel& c : modules) {
          const unsigned long long brute = orbit_count_brute_force(a, b, c);
          const unsigned long long matrices = count_k_matrices(a, b, c);
          const unsigned long long closed =
              static_cast<unsigned long long>(orbit_count_rank2(a, b, c, k));
          const unsigned long long coeff = static_cast<unsigned long long>(
              a1_fusion(spin_of(a), spin_of(b), spin_of(c), k));
          if (brute != matrices || brute != closed || brute != coeff) {
            std::ostringstream os;
            os << "k=" << k << " " << a.to_string() << "," << b.to_string() << ","
               << c.to_string() << ": brute=" << brute << " kmatrix=" << matrices
               << " closed=" << closed << " fusion=" << coeff;
            detail = os.str();
            return false;
          }
        }
  }
  return true;
}

// 5. Rank 3, k = 1..5: all four routes agree and match binom(N+1, 2).
bool criterion_rank3(std::string& detail) {
  for (int k = 1; k <= 5; ++k) {
    const auto modules = modules_at_level(3, k);
    for (const OrbitLabel& a : modules)
      for (const OrbitLabel& b : modules)
        for (const OrbitLabel& c : modules) {
          const unsigned long long brute = orbit_count_brute_force(a, b, c);
          const unsigned long long matrices = count_k_matrices(a, b, c);
          const unsigned long long closed = orbit_count_rank3(a, b, c, k);
          const unsigned long long minsum = orbit_count_rank3_minsum(a, b, c, k);
          const long coeff =
              a2_fusion_symmetric(weight_of(a), weight_of(b), weight_of(c), k);
          if (brute != matrices || brute != closed || brute != minsum ||
              closed != binomial(coeff + 1, 2)) {
            std::ostringstream os;
            os << "k=" << k << " " << a.to_string() << "," << b.to_string() << ","
               << c.to_string() << ": brute=" << brute << " kmatrix=" << matrices
               << " closed=" << closed << " minsum=" << minsum << " fusion=" << coeff;
            detail = os.str();
            return false;
          }
        }
  }
  return true;
}

// 6. Axioms and six-fold symmetry for every algebra the sweeps touch.
bool criterion_axioms(std::string& detail) {
  std::vector<FusionAlgebra> algebras;
  for (int k = 1; k <= 8; ++k) algebras.push_back(build_fusion_algebra(2, k));
  for (int k = 1; k <= 5; ++k) algebras.push_back(build_fusion_algebra(3, k));
  algebras.push_back(fixtures::w3_11());
  for (const FusionAlgebra& f : algebras) {
    const AxiomReport report = check_axioms(f);
    if (!report.all_passed()) {
      for (const auto& c : report.checks)
        if (!c.passed) detail += c.name + " failed; ";
      return false;
    }
    for (int a = 0; a < f.size(); ++a)
      for (int b = 0; b < f.size(); ++b)
        for (int c = 0; c < f.size(); ++c) {
          const long n = f.symmetric_coefficient(a, b, c);
          if (f.symmetric_coefficient(a, c, b) != n ||
              f.symmetric_coefficient(b, a, c) != n ||
              f.symmetric_coefficient(b, c, a) != n ||
              f.symmetric_coefficient(c, a, b) != n ||
              f.symmetric_coefficient(c, b, a) != n) {
            detail = "symmetric coefficient not invariant at (" + f.label(a) + "," +
                     f.label(b) + "," + f.label(c) + ")";
            return false;
          }
        }
  }
  return true;
}

// 7. The adjoint self-coupling sequence 0, 1, 2, 2 for k = 1..4.
bool criterion_spot_values(std::string& detail) {
  const WeightA2 adj{1, 1};
  const long want[4] = {0, 1, 2, 2};
  for (int k = 1; k <= 4; ++k) {
    const long got = a2_fusion_symmetric(adj, adj, adj, k);
    if (got != want[k - 1]) {
      detail = "k=" + std::to_string(k) + ": got " + std::to_string(got) + ", want " +
               std::to_string(want[k - 1]);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fusion tables reproduced cell-for-cell under the stored label maps", 1.0,
       criterion_tables},
      {2, "Z_5 partition flagged nonassociative with exact triple products", 1.0,
       criterion_z5},
      {3, "covering checks: Z_2^k (k=1..6), Z_3^2 at level 2, W3(1,1)", 5.0,
       criterion_covers},
      {4, "rank-2 equivalence of all four routes for k=1..8", 30.0, criterion_rank2},
      {5, "rank-3 equivalence of all four routes and the triangular bridge for k=1..5",
       120.0, criterion_rank3},
      {6, "algebra axioms and six-fold symmetry on every swept algebra", 0.0,
       criterion_axioms},
      {7, "adjoint self-coupling 0,1,2,2 at levels 1..4", 0.0, criterion_spot_values},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      ok = false;
      detail = "exceeded runtime budget of " + std::to_string(c.budget_seconds) + " s";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " ("
              << std::fixed << std::setprecision(3) << seconds << " s) " << c.title;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
