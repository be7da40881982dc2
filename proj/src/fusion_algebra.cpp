#include "fusion/fusion_algebra.hpp"

#include <stdexcept>

namespace fusion {

FusionAlgebra::FusionAlgebra(std::vector<std::string> labels, int identity,
                             std::vector<int> conjugation,
                             std::map<Triple, long> structure)
    : labels_(std::move(labels)),
      identity_(identity),
      conjugation_(std::move(conjugation)),
      structure_(std::move(structure)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("fusion algebra: empty label set");
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[static_cast<size_t>(i)], i).second)
      throw std::invalid_argument("fusion algebra: duplicate label '" +
                                  labels_[static_cast<size_t>(i)] + "'");
  }
  if (identity_ < 0 || identity_ >= n)
    throw std::invalid_argument("fusion algebra: identity index out of range");
  if (static_cast<int>(conjugation_.size()) != n)
    throw std::invalid_argument("fusion algebra: conjugation size mismatch");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int c : conjugation_) {
    if (c < 0 || c >= n || seen[static_cast<size_t>(c)])
      throw std::invalid_argument("fusion algebra: conjugation is not a permutation");
    seen[static_cast<size_t>(c)] = true;
  }
  for (auto it = structure_.begin(); it != structure_.end();) {
    const Triple& t = it->first;
    for (int i : t)
      if (i < 0 || i >= n)
        throw std::invalid_argument("fusion algebra: structure index out of range");
    if (it->second < 0)
      throw std::invalid_argument("fusion algebra: negative structure constant");
    it = (it->second == 0) ? structure_.erase(it) : std::next(it);
  }
}

int FusionAlgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw std::out_of_range("fusion algebra: unknown label '" + label + "'");
  return it->second;
}

void FusionAlgebra::check_index(int i) const {
  if (i < 0 || i >= size())
    throw std::out_of_range("fusion algebra: label index out of range");
}

long FusionAlgebra::coefficient(int a, int b, int c) const {
  check_index(a);
  check_index(b);
  check_index(c);
  auto it = structure_.find(Triple{a, b, c});
  return it == structure_.end() ? 0 : it->second;
}

std::map<int, long> FusionAlgebra::product(int a, int b) const {
  check_index(a);
  check_index(b);
  std::map<int, long> out;
  auto lo = structure_.lower_bound(Triple{a, b, 0});
  auto hi = structure_.upper_bound(Triple{a, b, size() - 1});
  for (auto it = lo; it != hi; ++it) out.emplace(it->first[2], it->second);
  return out;
}

long FusionAlgebra::symmetric_coefficient(int a, int b, int c) const {
  check_index(c);
  return coefficient(a, b, conjugate(c));
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("axiom report: no check named '" + name + "'");
}

AxiomReport check_axioms(const FusionAlgebra& f) {
  const int n = f.size();
  AxiomReport report;

  AxiomCheck involution{"conjugation-involution", true, {}};
  for (int a = 0; a < n && involution.passed; ++a) {
    if (f.conjugate(f.conjugate(a)) != a) involution = {involution.name, false, {a}};
  }
  report.checks.push_back(involution);

  AxiomCheck identity{"identity", true, {}};
  for (int b = 0; b < n && identity.passed; ++b)
    for (int c = 0; c < n && identity.passed; ++c) {
      long want = (b == c) ? 1 : 0;
      if (f.coefficient(f.identity(), b, c) != want)
        identity = {identity.name, false, {b, c}};
    }
  report.checks.push_back(identity);

  AxiomCheck comm{"commutativity", true, {}};
  for (int a = 0; a < n && comm.passed; ++a)
    for (int b = 0; b < n && comm.passed; ++b)
      for (int c = 0; c < n && comm.passed; ++c)
        if (f.coefficient(a, b, c) != f.coefficient(b, a, c))
          comm = {comm.name, false, {a, b, c}};
  report.checks.push_back(comm);

  AxiomCheck assoc{"associativity", true, {}};
  for (int a = 0; a < n && assoc.passed; ++a)
    for (int b = 0; b < n && assoc.passed; ++b)
      for (int d = 0; d < n && assoc.passed; ++d)
        for (int g = 0; g < n && assoc.passed; ++g) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += f.coefficient(a, b, e) * f.coefficient(e, d, g);
            rhs += f.coefficient(b, d, e) * f.coefficient(a, e, g);
          }
          if (lhs != rhs) assoc = {assoc.name, false, {a, b, d}};
        }
  report.checks.push_back(assoc);

  AxiomCheck automorph{"conjugation-automorphism", true, {}};
  for (int a = 0; a < n && automorph.passed; ++a)
    for (int b = 0; b < n && automorph.passed; ++b)
      for (int c = 0; c < n && automorph.passed; ++c)
        if (f.coefficient(f.conjugate(a), f.conjugate(b), f.conjugate(c)) !=
            f.coefficient(a, b, c))
          automorph = {automorph.name, false, {a, b, c}};
  report.checks.push_back(automorph);

  // Stored conjugation must agree with the matrix C_{a,b} = N_{a,b}^Omega.
  AxiomCheck matrix{"conjugation-matrix", true, {}};
  for (int a = 0; a < n && matrix.passed; ++a)
    for (int b = 0; b < n && matrix.passed; ++b) {
      long want = (a == f.conjugate(b)) ? 1 : 0;
      if (f.coefficient(a, b, f.identity()) != want)
        matrix = {matrix.name, false, {a, b}};
    }
  report.checks.push_back(matrix);

  return report;
}

}  // namespace fusion
