#include "fusion/orbit_count.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

namespace fusion {

namespace {

void check_triple(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c) {
  if (a.modulus() != b.modulus() || a.modulus() != c.modulus())
    throw std::invalid_argument("orbit triple: mismatched moduli");
  if (a.level() != b.level() || a.level() != c.level())
    throw std::invalid_argument("orbit triple: mismatched levels");
}

void check_triple_at(const OrbitLabel& a, const OrbitLabel& b,
                     const OrbitLabel& c, int modulus, int k) {
  check_triple(a, b, c);
  if (a.modulus() != modulus)
    throw std::domain_error("orbit count: closed form is for rank N = " +
                            std::to_string(modulus));
  if (a.level() != k)
    throw std::invalid_argument("orbit triple: labels do not live on level k");
}

}  // namespace

KMatrix::KMatrix(int n, std::vector<long> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("k-matrix: size must be positive");
  if (entries_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
    throw std::invalid_argument("k-matrix: entry count must be n*n");
  for (long e : entries_)
    if (e < 0) throw std::invalid_argument("k-matrix: entries must be nonnegative");
}

bool KMatrix::satisfies_margins(const OrbitLabel& a, const OrbitLabel& b,
                                const OrbitLabel& c) const {
  check_triple(a, b, c);
  if (a.modulus() != n_) return false;
  for (int i = 0; i < n_; ++i) {
    long row = 0, col = 0, diag = 0;
    for (int j = 0; j < n_; ++j) {
      row += at(i, j);
      col += at(j, i);
      // entries on the wrapped upright diagonal i+j == n-i (mod n) carry
      // residue i in the second vector
      diag += at(j, ((n_ - i - j) % n_ + n_) % n_);
    }
    if (row != c.count(i) || col != a.count(i) || diag != b.count(i))
      return false;
  }
  return true;
}

unsigned long long orbit_count_brute_force(const OrbitLabel& a,
                                           const OrbitLabel& b,
                                           const OrbitLabel& c) {
  check_triple(a, b, c);
  const int n = a.modulus();
  const int k = a.level();
  const GroupVector z = standard_form(c);

  // z is weakly increasing, so positions with equal z-value are contiguous.
  std::vector<std::pair<int, int>> blocks;  // [begin, end) per used residue
  int pos = 0;
  for (int v = 0; v < n; ++v) {
    if (c.count(v) > 0) blocks.emplace_back(pos, pos + c.count(v));
    pos += c.count(v);
  }

  std::set<std::vector<std::pair<int, int>>> canonical;
  for (const GroupVector& x : enumerate_orbit(a)) {
    std::vector<int> y(static_cast<size_t>(k));
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
      y[static_cast<size_t>(i)] = ((2 * n) - x[i] - z[i]) % n;
      ++counts[static_cast<size_t>(y[static_cast<size_t>(i)])];
    }
    if (counts != b.counts()) continue;

    std::vector<std::pair<int, int>> key;
    key.reserve(static_cast<size_t>(k));
    for (auto [lo, hi] : blocks) {
      const size_t start = key.size();
      for (int i = lo; i < hi; ++i)
        key.emplace_back(x[i], y[static_cast<size_t>(i)]);
      std::sort(key.begin() + static_cast<long>(start), key.end());
    }
    canonical.insert(std::move(key));
  }
  return canonical.size();
}

std::vector<KMatrix> enumerate_k_matrices(const OrbitLabel& a,
                                          const OrbitLabel& b,
                                          const OrbitLabel& c) {
  check_triple(a, b, c);
  const int n = a.modulus();
  std::vector<KMatrix> out;

  std::vector<long> entries(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  std::vector<long> row_used(static_cast<size_t>(n), 0);
  std::vector<long> col_used(static_cast<size_t>(n), 0);

  // Fill the (n-1)x(n-1) free block, derive the last row and column from the
  // row/column margins, then re-check every margin equation.
  std::function<void(int)> fill = [&](int cell) {
    if (cell == (n - 1) * (n - 1)) {
      for (int i = 0; i < n - 1; ++i) {
        long v = c.count(i) - row_used[static_cast<size_t>(i)];
        if (v < 0) return;
        entries[static_cast<size_t>(i * n + (n - 1))] = v;
      }
      for (int j = 0; j < n; ++j) {
        long col = 0;
        for (int i = 0; i < n - 1; ++i) col += entries[static_cast<size_t>(i * n + j)];
        long v = a.count(j) - col;
        if (v < 0) return;
        entries[static_cast<size_t>((n - 1) * n + j)] = v;
      }
      KMatrix m(n, entries);
      if (m.satisfies_margins(a, b, c)) out.push_back(std::move(m));
      return;
    }
    const int i = cell / (n - 1);
    const int j = cell % (n - 1);
    const long bound = std::min(c.count(i) - row_used[static_cast<size_t>(i)],
                                a.count(j) - col_used[static_cast<size_t>(j)]);
    for (long v = 0; v <= bound; ++v) {
      entries[static_cast<size_t>(i * n + j)] = v;
      row_used[static_cast<size_t>(i)] += v;
      col_used[static_cast<size_t>(j)] += v;
      fill(cell + 1);
      row_used[static_cast<size_t>(i)] -= v;
      col_used[static_cast<size_t>(j)] -= v;
    }
    entries[static_cast<size_t>(i * n + j)] = 0;
  };

  if (n == 1) {
    KMatrix m(1, {static_cast<long>(a.level())});
    if (m.satisfies_margins(a, b, c)) out.push_back(std::move(m));
  } else {
    fill(0);
  }
  return out;
}

unsigned long long count_k_matrices(const OrbitLabel& a, const OrbitLabel& b,
                                    const OrbitLabel& c) {
  return enumerate_k_matrices(a, b, c).size();
}

int orbit_count_rank2(const OrbitLabel& a, const OrbitLabel& b,
                      const OrbitLabel& c, int k) {
  check_triple_at(a, b, c, 2, k);
  const long a1 = a.count(1), b1 = b.count(1), c1 = c.count(1);
  const long sum = a1 + b1 + c1;
  if (sum % 2 != 0) return 0;
  if (sum > 2 * k) return 0;
  return (std::abs(a1 - b1) <= c1 && c1 <= a1 + b1) ? 1 : 0;
}

Rank3Bounds rank3_bounds(const OrbitLabel& a, const OrbitLabel& b,
                         const OrbitLabel& c) {
  check_triple(a, b, c);
  if (a.modulus() != 3)
    throw std::domain_error("rank3_bounds: labels must have modulus 3");
  const long a0 = a.count(0), a1 = a.count(1);
  const long b0 = b.count(0), b2 = b.count(2);
  const long g0 = c.count(0), g1 = c.count(1);

  Rank3Bounds r;
  const long num = (a0 + b0 + g0) - (a1 + b.count(1) + g1);
  r.offset_integral = (num % 3 == 0);
  if (!r.offset_integral) return r;
  const long A = num / 3;
  r.offset = A;
  r.k10_min = std::max({0L, A - b0 + g1, 2 * A + a1 - b0 + g1 - g0});
  r.k11_min = std::max({-A, 0L, A + a1 - b0 - b2 + g1});
  r.sum_max = std::min({A + a1 - b0 + g1, a0 - A, g1});
  return r;
}

unsigned long long orbit_count_rank3(const OrbitLabel& a, const OrbitLabel& b,
                                     const OrbitLabel& c, int k) {
  check_triple_at(a, b, c, 3, k);
  const Rank3Bounds r = rank3_bounds(a, b, c);
  if (!r.offset_integral) return 0;
  if (r.sum_max - r.k10_min < r.k11_min) return 0;
  return binomial(r.sum_max - r.k11_min - r.k10_min + 2, 2);
}

long MinSumData::diag_diff(int r, int i, int j) const {
  auto at = [&](int base) {
    return s[base % 3][(base + r) % 3][(base + 2 * r) % 3];
  };
  return at(i) - at(j);
}

MinSumData minsum_data(const OrbitLabel& a, const OrbitLabel& b,
                       const OrbitLabel& c) {
  check_triple(a, b, c);
  if (a.modulus() != 3)
    throw std::domain_error("minsum_data: labels must have modulus 3");
  MinSumData d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        d.s[i][j][l] = a.count(i) + b.count(j) + c.count(l);
  d.rep_diff = d.diag_diff(1, 0, 1);
  const long k = a.level();
  d.m_times3 = std::min({d.s[0][0][0], d.s[1][1][1], d.s[2][2][2]}) +
               std::min({d.s[0][1][2], d.s[1][2][0], d.s[2][0][1]}) +
               std::min({d.s[0][2][1], d.s[1][0][2], d.s[2][1][0]}) - 2 * k;
  return d;
}

unsigned long long orbit_count_rank3_minsum(const OrbitLabel& a,
                                            const OrbitLabel& b,
                                            const OrbitLabel& c, int k) {
  check_triple_at(a, b, c, 3, k);
  const MinSumData d = minsum_data(a, b, c);
  if (((d.rep_diff % 3) + 3) % 3 != 0) return 0;
  if (d.m_times3 < 0) return 0;
  if (d.m_times3 % 3 != 0)
    throw std::logic_error("orbit_count_rank3_minsum: 3|D and m >= 0 but m is not integral");
  const long m = d.m_times3 / 3;
  return binomial(m + 2, 2);
}

unsigned long long triangular_root(unsigned long long m) {
  unsigned long long disc = 8 * m + 1;
  unsigned long long x = disc, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + disc / x) / 2;
  }
  // x = floor(sqrt(disc))
  if (x * x != disc) throw std::logic_error("triangular_root: not a triangular number");
  unsigned long long t = (x - 1) / 2;
  if (t * (t + 1) / 2 != m) throw std::logic_error("triangular_root: not a triangular number");
  return t;
}

long fusion_from_orbit_count(const OrbitLabel& a, const OrbitLabel& b,
                             const OrbitLabel& c, int k) {
  check_triple(a, b, c);
  if (a.modulus() == 2)
    return orbit_count_rank2(a, b, c, k);
  if (a.modulus() == 3)
    return static_cast<long>(triangular_root(orbit_count_rank3(a, b, c, k)));
  throw std::domain_error("fusion_from_orbit_count: only ranks 2 and 3 are bridged");
}

}  // namespace fusion
