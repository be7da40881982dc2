#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace fusion {

using Triple = std::array<int, 3>;

/// A fusion algebra: a finite label set, nonnegative-integer structure
/// constants N_{a,b}^c stored sparsely, a distinguished identity label and a
/// conjugation permutation. Immutable after construction; construction only
/// checks well-formedness (index ranges, permutation shape) -- the algebra
/// axioms themselves are evaluated by check_axioms and may fail.
class FusionAlgebra {
 public:
  FusionAlgebra(std::vector<std::string> labels, int identity,
                std::vector<int> conjugation, std::map<Triple, long> structure);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  int index_of(const std::string& label) const;  // throws std::out_of_range

  int identity() const { return identity_; }
  int conjugate(int a) const { return conjugation_[static_cast<size_t>(a)]; }
  const std::vector<int>& conjugation() const { return conjugation_; }

  /// N_{a,b}^c (0 when absent).
  long coefficient(int a, int b, int c) const;

  /// The formal sum a x b as a map c -> N_{a,b}^c, zero terms omitted.
  std::map<int, long> product(int a, int b) const;

  /// Completely symmetric coefficient N_{a,b,c} = N_{a,b}^{sigma(c)}.
  long symmetric_coefficient(int a, int b, int c) const;

  /// Nonzero structure constants, keyed by (a,b,c).
  const std::map<Triple, long>& structure() const { return structure_; }

 private:
  void check_index(int i) const;

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  int identity_;
  std::vector<int> conjugation_;
  std::map<Triple, long> structure_;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::vector<int> witness;  // smallest violating index tuple, empty if passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
};

// Evaluates the defining axioms, reporting each with the lexicographically
// first violating tuple:
//   conjugation-involution   sigma(sigma(a)) = a            witness (a)
//   identity                 N_{Omega,b}^c = delta_{b,c}    witness (b,c)
//   commutativity            N_{a,b}^c = N_{b,a}^c          witness (a,b,c)
//   associativity            sum_e N_{a,b}^e N_{e,d}^f =
//                            sum_e N_{b,d}^e N_{a,e}^f      witness (a,b,d)
//   conjugation-automorphism N_{sa,sb}^{sc} = N_{a,b}^c     witness (a,b,c)
//   conjugation-matrix       N_{a,b}^Omega = delta_{a,sigma(b)}  witness (a,b)
AxiomReport check_axioms(const FusionAlgebra& f);

}  // namespace fusion
