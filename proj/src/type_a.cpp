#include "fusion/type_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusion {

namespace {

void append_compositions(int slots, int total, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    prefix.push_back(v);
    append_compositions(slots - 1, total - v, prefix, out);
    prefix.pop_back();
  }
}

bool is_half_integer(const Rational& s) {
  return s.denominator() == 1 || s.denominator() == 2;
}

void check_spin(const Rational& s) {
  if (!is_half_integer(s) || s < 0)
    throw std::invalid_argument("spin must be a nonnegative half-integer");
}

void check_weight(const WeightA2& w) {
  if (w.a1 < 0 || w.a2 < 0)
    throw std::invalid_argument("sl3 weight labels must be nonnegative");
}

}  // namespace

std::vector<OrbitLabel> modules_at_level(int n, int k) {
  if (n < 2) throw std::domain_error("modules_at_level: rank parameter must be >= 2");
  if (k < 1) throw std::domain_error("modules_at_level: level must be >= 1");
  std::vector<OrbitLabel> out;
  std::vector<std::vector<int>> rest;
  for (int i0 = k; i0 >= 0; --i0) {
    rest.clear();
    std::vector<int> prefix;
    append_compositions(n - 1, k - i0, prefix, rest);
    for (auto& r : rest) {
      std::vector<int> counts;
      counts.reserve(static_cast<size_t>(n));
      counts.push_back(i0);
      counts.insert(counts.end(), r.begin(), r.end());
      out.emplace_back(n, std::move(counts));
    }
  }
  return out;
}

bool is_p_admissible(long m1, long m2, long m3, long p) {
  if (m1 <= 0 || m1 >= p) return false;
  if (m2 <= 0 || m2 >= p) return false;
  if (m3 <= 0 || m3 >= p) return false;
  long sum = m1 + m2 + m3;
  if (sum % 2 == 0 || sum >= 2 * p) return false;
  return m1 < m2 + m3 && m2 < m1 + m3 && m3 < m1 + m2;
}

int a1_fusion(const Rational& a, const Rational& b, const Rational& c, int k) {
  check_spin(a);
  check_spin(b);
  check_spin(c);
  const Rational half_k(k, 2);
  if (a > half_k || b > half_k || c > half_k)
    throw std::domain_error("a1_fusion: spin exceeds k/2");
  const Rational sum = a + b + c;
  if (!is_integer(sum)) return 0;
  if (sum > k) return 0;
  const Rational lo = a >= b ? a - b : b - a;
  return (lo <= c && c <= a + b) ? 1 : 0;
}

std::vector<Rational> sl2_tensor(const Rational& a, const Rational& b) {
  check_spin(a);
  check_spin(b);
  std::vector<Rational> out;
  for (Rational c = (a >= b ? a - b : b - a); c <= a + b; c += 1) out.push_back(c);
  return out;
}

Rational conformal_weight_a1(const Rational& a, int k) {
  check_spin(a);
  if (k < 1 || a > Rational(k, 2))
    throw std::domain_error("conformal_weight_a1: spin must satisfy 0 <= a <= k/2");
  return a * (a + 1) / Rational(k + 2);
}

long dim_sl2(const Rational& a) {
  check_spin(a);
  return boost::rational_cast<long>(2 * a + 1);
}

long dim_sl3(const WeightA2& w) {
  check_weight(w);
  return (w.a1 + 1) * (w.a2 + 1) * (w.a1 + w.a2 + 2) / 2;
}

A2TripleData a2_triple_data(const WeightA2& wa, const WeightA2& wb,
                            const WeightA2& wc) {
  check_weight(wa);
  check_weight(wb);
  check_weight(wc);
  const long s1 = wa.a1 + wb.a1 + wc.a1;
  const long s2 = wa.a2 + wb.a2 + wc.a2;

  A2TripleData d;
  d.cal_a = Rational(2 * s1 + s2, 3);
  d.cal_b = Rational(s1 + 2 * s2, 3);
  d.k0_max = std::min(d.cal_a, d.cal_b);
  d.k0_min = std::max({Rational(wa.a1 + wa.a2), Rational(wb.a1 + wb.a2),
                       Rational(wc.a1 + wc.a2),
                       d.cal_a - std::min({wa.a1, wb.a1, wc.a1}),
                       d.cal_b - std::min({wa.a2, wb.a2, wc.a2})});
  d.delta = d.k0_max >= d.k0_min && is_integer(d.cal_a) && is_integer(d.cal_b);
  d.tensor_mult =
      d.delta ? boost::rational_cast<long>(d.k0_max - d.k0_min + 1) : 0;
  return d;
}

long a2_fusion_symmetric(const WeightA2& wa, const WeightA2& wb,
                         const WeightA2& wc, int k) {
  if (k < 1) throw std::domain_error("a2_fusion_symmetric: level must be >= 1");
  check_weight(wa);
  check_weight(wb);
  check_weight(wc);
  // Weights above the level are not modules on level k: empty coupling.
  if (wa.a1 + wa.a2 > k || wb.a1 + wb.a2 > k || wc.a1 + wc.a2 > k) return 0;
  const A2TripleData d = a2_triple_data(wa, wb, wc);
  if (d.tensor_mult == 0 || Rational(k) < d.k0_min) return 0;
  return boost::rational_cast<long>(std::min(d.k0_max, Rational(k)) - d.k0_min + 1);
}

Rational spin_of(const OrbitLabel& label) {
  if (label.modulus() != 2)
    throw std::domain_error("spin_of: label must have modulus 2");
  return Rational(label.count(1), 2);
}

WeightA2 weight_of(const OrbitLabel& label) {
  if (label.modulus() != 3)
    throw std::domain_error("weight_of: label must have modulus 3");
  return WeightA2{label.count(1), label.count(2)};
}

FusionAlgebra build_fusion_algebra(int n, int k) {
  if (n != 2 && n != 3)
    throw std::domain_error("build_fusion_algebra: only ranks 2 and 3 have closed forms");
  if (k < 1) throw std::domain_error("build_fusion_algebra: level must be >= 1");

  const std::vector<OrbitLabel> modules = modules_at_level(n, k);
  const int m = static_cast<int>(modules.size());

  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  std::map<OrbitLabel, int> index;
  for (int i = 0; i < m; ++i) {
    labels.push_back(modules[static_cast<size_t>(i)].to_string());
    index.emplace(modules[static_cast<size_t>(i)], i);
  }

  std::vector<int> conjugation(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    conjugation[static_cast<size_t>(i)] =
        index.at(negate_label(modules[static_cast<size_t>(i)]));

  std::map<Triple, long> structure;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const OrbitLabel conj_c = negate_label(modules[static_cast<size_t>(c)]);
        long coeff;
        if (n == 2) {
          coeff = a1_fusion(spin_of(modules[static_cast<size_t>(a)]),
                            spin_of(modules[static_cast<size_t>(b)]),
                            spin_of(conj_c), k);
        } else {
          coeff = a2_fusion_symmetric(weight_of(modules[static_cast<size_t>(a)]),
                                      weight_of(modules[static_cast<size_t>(b)]),
                                      weight_of(conj_c), k);
        }
        if (coeff != 0) {
          structure[Triple{a, b, c}] = coeff;
          structure[Triple{b, a, c}] = coeff;
        }
      }

  return FusionAlgebra(std::move(labels), 0, std::move(conjugation),
                       std::move(structure));
}

}  // namespace fusion
