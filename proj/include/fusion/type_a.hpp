#pragma once

#include <compare>
#include <vector>

#include "fusion/fusion_algebra.hpp"
#include "fusion/group_vector.hpp"
#include "fusion/rational.hpp"

namespace fusion {

/// Dominant integral sl3 weight a1*w1 + a2*w2 in Dynkin labels.
struct WeightA2 {
  long a1 = 0;
  long a2 = 0;
  auto operator<=>(const WeightA2&) const = default;
};

/// Exact threshold data for one triple of sl3 weights: the tensor-product
/// multiplicity of the trivial module in V_a (x) V_b (x) V_c, and the levels
/// where the corresponding fusion coefficient turns on (k0_min) and
/// stabilizes (k0_max). cal_a and cal_b may be non-integral thirds; the
/// coupling is allowed (delta) only when both are integers and
/// k0_max >= k0_min.
struct A2TripleData {
  Rational cal_a;   // (2(a1+b1+c1) + (a2+b2+c2)) / 3
  Rational cal_b;   // ((a1+b1+c1) + 2(a2+b2+c2)) / 3
  Rational k0_max;  // min(cal_a, cal_b)
  Rational k0_min;
  bool delta = false;
  long tensor_mult = 0;  // (k0_max - k0_min + 1) * delta
};

/// All compositions of k into N nonnegative parts, in canonical module
/// order: i_0 descending, then (i_1,...,i_{N-1}) ascending lexicographically.
/// The identity module P(k,0,...,0) comes first. Count is binom(k+N-1, N-1).
std::vector<OrbitLabel> modules_at_level(int n, int k);

/// Rank-1 admissibility: 0 < m1,m2,m3 < p, m1+m2+m3 odd and < 2p, and the
/// three strict triangle inequalities.
bool is_p_admissible(long m1, long m2, long m3, long p);

/// Level-k su(2) fusion coefficient for spins a,b,c: 1 iff
/// |a-b| <= c <= a+b, a+b+c integral, and a+b+c <= k.
/// Spins must be half-integers; a spin above k/2 is a domain error.
int a1_fusion(const Rational& a, const Rational& b, const Rational& c, int k);

/// Spins c with |a-b| <= c <= a+b and a+b+c integral, ascending.
std::vector<Rational> sl2_tensor(const Rational& a, const Rational& b);

/// a(a+1)/(k+2), exact.
Rational conformal_weight_a1(const Rational& a, int k);

long dim_sl2(const Rational& a);   // 2a+1
long dim_sl3(const WeightA2& w);   // (a1+1)(a2+1)(a1+a2+2)/2

A2TripleData a2_triple_data(const WeightA2& wa, const WeightA2& wb,
                            const WeightA2& wc);

/// Completely symmetric level-k su(3) fusion coefficient
/// N_{a,b,c} = min(k0_max, k) - k0_min + 1 when the coupling is allowed and
/// k >= k0_min, else 0. Weights that violate the level-k condition
/// (a1+a2 > k) are not modules on level k and contribute 0.
long a2_fusion_symmetric(const WeightA2& wa, const WeightA2& wb,
                         const WeightA2& wc, int k);

/// Complete level-k fusion algebra for rank n in {2,3}: labels are the
/// canonical orbit labels, identity is P(k,0,...), conjugation negates
/// labels, and coefficients come from the closed forms above via
/// N_{a,b}^c = N_{a,b,-c}.
FusionAlgebra build_fusion_algebra(int n, int k);

/// Spin of a rank-2 orbit label: counts (a0,a1) carry spin a1/2.
Rational spin_of(const OrbitLabel& label);

/// sl3 weight of a rank-3 orbit label: counts (i0,i1,i2) carry i1*w1 + i2*w2.
WeightA2 weight_of(const OrbitLabel& label);

}  // namespace fusion
