#include "fusion/group_vector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fusion {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

GroupVector::GroupVector(int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ < 1) throw std::invalid_argument("group vector: modulus must be positive");
  if (entries_.empty()) throw std::invalid_argument("group vector: length must be at least 1");
  for (int e : entries_) {
    if (e < 0 || e >= modulus_)
      throw std::invalid_argument("group vector: entry out of range [0, N-1]");
  }
}

std::string GroupVector::to_string() const {
  return "(" + join_ints(entries_) + ")";
}

OrbitLabel::OrbitLabel(int modulus, std::vector<int> counts)
    : modulus_(modulus), counts_(std::move(counts)) {
  if (modulus_ < 1) throw std::invalid_argument("orbit label: modulus must be positive");
  if (static_cast<int>(counts_.size()) != modulus_)
    throw std::invalid_argument("orbit label: need one count per residue");
  long sum = 0;
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("orbit label: counts must be nonnegative");
    sum += c;
  }
  if (sum < 1) throw std::invalid_argument("orbit label: counts must sum to k >= 1");
}

int OrbitLabel::level() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string OrbitLabel::to_string() const {
  return "P(" + join_ints(counts_) + ")";
}

GroupVector add(const GroupVector& x, const GroupVector& y) {
  if (x.modulus() != y.modulus())
    throw std::invalid_argument("add: mismatched moduli");
  if (x.length() != y.length())
    throw std::invalid_argument("add: mismatched lengths");
  std::vector<int> e(x.entries());
  for (int i = 0; i < x.length(); ++i) e[static_cast<size_t>(i)] = (e[static_cast<size_t>(i)] + y[i]) % x.modulus();
  return GroupVector(x.modulus(), std::move(e));
}

GroupVector negate(const GroupVector& x) {
  std::vector<int> e(x.entries());
  for (int& v : e) v = (x.modulus() - v) % x.modulus();
  return GroupVector(x.modulus(), std::move(e));
}

OrbitLabel orbit_of(const GroupVector& x) {
  std::vector<int> counts(static_cast<size_t>(x.modulus()), 0);
  for (int v : x.entries()) ++counts[static_cast<size_t>(v)];
  return OrbitLabel(x.modulus(), std::move(counts));
}

GroupVector standard_form(const OrbitLabel& label) {
  std::vector<int> e;
  e.reserve(static_cast<size_t>(label.level()));
  for (int j = 0; j < label.modulus(); ++j)
    e.insert(e.end(), static_cast<size_t>(label.count(j)), j);
  return GroupVector(label.modulus(), std::move(e));
}

std::vector<GroupVector> enumerate_orbit(const OrbitLabel& label) {
  std::vector<int> e = standard_form(label).entries();
  std::vector<GroupVector> out;
  do {
    out.emplace_back(label.modulus(), e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

unsigned long long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

unsigned long long orbit_size(const OrbitLabel& label) {
  unsigned long long r = 1;
  long remaining = label.level();
  for (int j = 0; j < label.modulus(); ++j) {
    r *= binomial(remaining, label.count(j));
    remaining -= label.count(j);
  }
  return r;
}

OrbitLabel negate_label(const OrbitLabel& label) {
  std::vector<int> counts(static_cast<size_t>(label.modulus()));
  counts[0] = label.count(0);
  for (int j = 1; j < label.modulus(); ++j)
    counts[static_cast<size_t>(j)] = label.count(label.modulus() - j);
  return OrbitLabel(label.modulus(), std::move(counts));
}

}  // namespace fusion
