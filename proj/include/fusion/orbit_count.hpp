#pragma once

#include <array>
#include <compare>
#include <vector>

#include "fusion/group_vector.hpp"
#include "fusion/rational.hpp"

namespace fusion {

/// N x N nonnegative integer matrix encoding a stabilizer orbit of zero-sum
/// pairs: entry (i,j) counts positions where the third vector holds residue i
/// and the first holds residue j. Valid matrices have row sums gamma
/// (third label), column sums alpha (first label) and wrapped upright
/// diagonal sums beta (second label).
class KMatrix {
 public:
  KMatrix(int n, std::vector<long> entries);  // row-major, size n*n

  int n() const { return n_; }
  long at(int i, int j) const { return entries_[static_cast<size_t>(i * n_ + j)]; }
  const std::vector<long>& entries() const { return entries_; }

  /// Checks all 3N margin equations against the three labels.
  bool satisfies_margins(const OrbitLabel& a, const OrbitLabel& b,
                         const OrbitLabel& c) const;

  auto operator<=>(const KMatrix&) const = default;

 private:
  int n_;
  std::vector<long> entries_;
};

/// Number of S_k-orbits of zero-sum triples (x,y,z) drawn from the three
/// orbits. Direct enumeration: z is pinned to the standard form of c, x runs
/// over the orbit of a, y = -x-z, and solutions are identified up to the
/// stabilizer of z by sorting the (x,y) pairs within each constant block
/// of z. Cost is proportional to orbit_size(a).
unsigned long long orbit_count_brute_force(const OrbitLabel& a,
                                           const OrbitLabel& b,
                                           const OrbitLabel& c);

/// All margin matrices for the triple, enumerated over the (N-1)x(N-1) free
/// block with every row, column and diagonal equation re-checked on each
/// candidate.
std::vector<KMatrix> enumerate_k_matrices(const OrbitLabel& a,
                                          const OrbitLabel& b,
                                          const OrbitLabel& c);

/// Lattice-point count of the margin system; equals
/// orbit_count_brute_force on every input.
unsigned long long count_k_matrices(const OrbitLabel& a, const OrbitLabel& b,
                                    const OrbitLabel& c);

/// Closed form for N = 2: 1 iff |a1-b1| <= c1 <= a1+b1, a1+b1+c1 <= 2k and
/// a1+b1+c1 even (writing a1,b1,c1 for the counts of residue 1); else 0.
int orbit_count_rank2(const OrbitLabel& a, const OrbitLabel& b,
                      const OrbitLabel& c, int k);

/// Bounds of the two-parameter solution family for N = 3. Writing
/// alpha,beta,gamma for the counts of a,b,c, the matrix is determined by its
/// entries k10 and k11 via k00 = k11 + offset; valid matrices are exactly
/// k10 >= k10_min, k11 >= k11_min, k10 + k11 <= sum_max. offset must be
/// integral for any solution to exist; the bound fields are meaningful only
/// when offset_integral holds.
struct Rank3Bounds {
  bool offset_integral = false;
  long offset = 0;   // ((a0+b0+g0) - (a1+b1+g1)) / 3
  long k10_min = 0;
  long k11_min = 0;
  long sum_max = 0;
};

Rank3Bounds rank3_bounds(const OrbitLabel& a, const OrbitLabel& b,
                         const OrbitLabel& c);

/// Closed form for N = 3: binom(sum_max - k11_min - k10_min + 2, 2) when the
/// bound triangle is nonempty, else 0. Always a triangular number.
unsigned long long orbit_count_rank3(const OrbitLabel& a, const OrbitLabel& b,
                                     const OrbitLabel& c, int k);

/// The diagonal-sum data behind the alternative N = 3 closed form:
/// s[i][j][l] = alpha_i + beta_j + gamma_l, the representative difference
/// rep_diff = s_{0,1,2} - s_{1,2,0}, and 3m = min over the three straight
/// diagonals plus the two twisted ones minus 2k.
struct MinSumData {
  long s[3][3][3] = {};
  long rep_diff = 0;
  long m_times3 = 0;

  long diag_diff(int r, int i, int j) const;  // s_{i,i+r,i+2r} - s_{j,j+r,j+2r}
  Rational m() const { return Rational(m_times3, 3); }
};

MinSumData minsum_data(const OrbitLabel& a, const OrbitLabel& b,
                       const OrbitLabel& c);

/// Alternative N = 3 closed form: binom(m+2, 2) when 3 | rep_diff and
/// m >= 0, else 0. Agrees with orbit_count_rank3 everywhere.
unsigned long long orbit_count_rank3_minsum(const OrbitLabel& a,
                                            const OrbitLabel& b,
                                            const OrbitLabel& c, int k);

/// The symmetric fusion coefficient recovered from the orbit count: for
/// N = 2 the count itself, for N = 3 the triangular root t with
/// M = t(t+1)/2. A non-triangular count for N = 3 is impossible and raises
/// std::logic_error.
long fusion_from_orbit_count(const OrbitLabel& a, const OrbitLabel& b,
                             const OrbitLabel& c, int k);

/// t >= 0 with t(t+1)/2 = m, by integer square root with verification.
/// Throws std::logic_error if m is not triangular.
unsigned long long triangular_root(unsigned long long m);

}  // namespace fusion
