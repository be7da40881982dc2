#pragma once

#include <compare>
#include <string>
#include <vector>

namespace fusion {

/// An element of Z_N^k: a tuple of k residues modulo N. Immutable value type.
class GroupVector {
 public:
  GroupVector(int modulus, std::vector<int> entries);

  int modulus() const { return modulus_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  std::string to_string() const;  // "(0,1,2)"

  auto operator<=>(const GroupVector&) const = default;

 private:
  int modulus_;
  std::vector<int> entries_;
};

/// Names an S_k-orbit of Z_N^k by its residue counts (i_0,...,i_{N-1}):
/// residue j occurs i_j times. Doubles as the label of a level-k module,
/// where k is the sum of the counts.
class OrbitLabel {
 public:
  OrbitLabel(int modulus, std::vector<int> counts);

  int modulus() const { return modulus_; }
  int level() const;  // k = sum of counts
  int count(int j) const { return counts_[static_cast<size_t>(j)]; }
  const std::vector<int>& counts() const { return counts_; }

  std::string to_string() const;  // "P(2,0,0)"

  auto operator<=>(const OrbitLabel&) const = default;

 private:
  int modulus_;
  std::vector<int> counts_;
};

// Entrywise sum mod N. Throws std::invalid_argument on mismatched
// modulus or length.
GroupVector add(const GroupVector& x, const GroupVector& y);

// Entrywise additive inverse mod N.
GroupVector negate(const GroupVector& x);

// Residue counts of x.
OrbitLabel orbit_of(const GroupVector& x);

// The weakly increasing representative (0^{i_0}, 1^{i_1}, ...).
GroupVector standard_form(const OrbitLabel& label);

// All distinct multiset permutations of the standard form, in lexicographic
// order. Size equals orbit_size(label); cost is proportional to it.
std::vector<GroupVector> enumerate_orbit(const OrbitLabel& label);

// Multinomial coefficient k! / (i_0! ... i_{N-1}!).
unsigned long long orbit_size(const OrbitLabel& label);

// Orbit of the negated vectors: counts (i_0, i_{N-1}, i_{N-2}, ..., i_1).
OrbitLabel negate_label(const OrbitLabel& label);

unsigned long long binomial(long n, long k);

}  // namespace fusion
