#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fusion/fusion_algebra.hpp"
#include "fusion/group_vector.hpp"

namespace fusion {

/// Partition of Z_N^k into disjoint nonempty blocks whose union is the whole
/// group, with block 0 the singleton {0}. Blocks are ordered; elements are
/// stored sorted within each block.
class GroupPartition {
 public:
  GroupPartition(int modulus, int length,
                 std::vector<std::vector<GroupVector>> blocks);

  int modulus() const { return modulus_; }
  int length() const { return length_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<GroupVector>& block(int i) const {
    return blocks_[static_cast<size_t>(i)];
  }
  int block_index_of(const GroupVector& g) const;  // throws std::out_of_range

 private:
  int modulus_;
  int length_;
  std::vector<std::vector<GroupVector>> blocks_;
  std::map<std::vector<int>, int> block_of_;
};

/// T(i,j) = { l | some a in P_i, b in P_j have a+b in P_l }.
std::set<int> partition_product(const GroupPartition& p, int i, int j);

struct AssociativityResult {
  bool associative = false;
  std::array<int, 3> witness = {-1, -1, -1};  // first violating (i,j,l)
};

/// Treats T as 0/1 structure constants and checks
/// sum_e M_{ij}^e M_{el}^f = sum_e M_{jl}^e M_{ie}^f for all i,j,l,f,
/// scanning (i,j,l) in lexicographic order.
AssociativityResult is_associative(const GroupPartition& p);

/// The orbit partition of Z_N^k in canonical module order.
GroupPartition standard_partition(int n, int k);

struct CoverMismatch {
  std::string kind;  // "multiplicity" or "support"
  std::string detail;
};

struct CoverReport {
  bool covered = false;
  bool associative = false;
  std::array<int, 3> associativity_witness = {-1, -1, -1};
  std::vector<CoverMismatch> mismatches;
};

/// Checks that the partition covers the fusion algebra under the bijection
/// phi (algebra label -> block index): the partition must be associative,
/// every nonzero coefficient must equal 1, and for each pair (a,b) the
/// mapped support of the product must equal T(phi(a), phi(b)). phi must be a
/// bijection with phi(identity) = 0; otherwise std::invalid_argument.
CoverReport verify_cover(const FusionAlgebra& f, const GroupPartition& p,
                         const std::map<std::string, int>& phi);

}  // namespace fusion
