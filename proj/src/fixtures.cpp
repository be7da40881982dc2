#include "fusion/fixtures.hpp"

#include <utility>

namespace fusion::fixtures {

namespace {

// Upper-triangular cell list (a <= b, identity row included) expanded to the
// full symmetric structure map with all coefficients 1.
std::map<Triple, long> symmetric_structure(
    int n, const std::vector<std::pair<std::pair<int, int>, std::vector<int>>>& cells) {
  std::map<Triple, long> s;
  for (const auto& [ab, products] : cells) {
    for (int c : products) {
      s[Triple{ab.first, ab.second, c}] = 1;
      s[Triple{ab.second, ab.first, c}] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    s[Triple{0, j, j}] = 1;
    s[Triple{j, 0, j}] = 1;
  }
  return s;
}

}  // namespace

FusionAlgebra w3_11() {
  const std::vector<std::pair<std::pair<int, int>, std::vector<int>>> cells = {
      {{1, 1}, {0, 1}}, {{1, 2}, {3}},    {{1, 3}, {2, 3}}, {{1, 4}, {5}},
      {{1, 5}, {4, 5}}, {{2, 2}, {4}},    {{2, 3}, {5}},    {{2, 4}, {0}},
      {{2, 5}, {1}},    {{3, 3}, {4, 5}}, {{3, 4}, {1}},    {{3, 5}, {0, 1}},
      {{4, 4}, {2}},    {{4, 5}, {3}},    {{5, 5}, {2, 3}}};
  return FusionAlgebra({"[0]", "[1]", "[2]", "[3]", "[4]", "[5]"}, 0,
                       {0, 1, 4, 5, 2, 3}, symmetric_structure(6, cells));
}

FusionAlgebra z5_partition_algebra() {
  const std::vector<std::pair<std::pair<int, int>, std::vector<int>>> cells = {
      {{1, 1}, {1, 2}}, {{1, 2}, {0, 1, 2}}, {{2, 2}, {1, 2}}};
  return FusionAlgebra({"P0", "P1", "P2"}, 0, {0, 2, 1},
                       symmetric_structure(3, cells));
}

GroupPartition z5_partition() {
  auto v = [](int e) { return GroupVector(5, {e}); };
  return GroupPartition(5, 1, {{v(0)}, {v(1), v(2)}, {v(3), v(4)}});
}

GroupPartition w3_cover_partition() {
  auto v = [](int a, int b) { return GroupVector(3, {a, b}); };
  return GroupPartition(3, 2,
                        {{v(0, 0)},
                         {v(1, 2), v(2, 1)},
                         {v(1, 1)},
                         {v(0, 2), v(2, 0)},
                         {v(2, 2)},
                         {v(1, 0), v(0, 1)}});
}

std::map<std::string, int> w3_cover_map() {
  return {{"[0]", 0}, {"[1]", 1}, {"[2]", 2}, {"[3]", 3}, {"[4]", 4}, {"[5]", 5}};
}

}  // namespace fusion::fixtures
