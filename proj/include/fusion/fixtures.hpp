#pragma once

#include <map>
#include <string>

#include "fusion/fusion_algebra.hpp"
#include "fusion/partition_cover.hpp"

namespace fusion::fixtures {

/// Fusion table of the coset W-algebra W_3(1,1): six labels [0]..[5] with
/// identity [0]. The conjugation ([0],[1] fixed, [2]<->[4], [3]<->[5]) is
/// read off from the cells containing [0].
FusionAlgebra w3_11();

/// The 3-basis algebra induced by the partition {0},{1,2},{3,4} of Z_5.
/// Commutative with identity, but not associative.
FusionAlgebra z5_partition_algebra();

/// The partition {0},{1,2},{3,4} of Z_5 itself.
GroupPartition z5_partition();

/// Partition of Z_3^2 into the six S_2-orbits, listed in the order that
/// matches the W_3(1,1) labels: {(0,0)}, {(1,2),(2,1)}, {(1,1)},
/// {(0,2),(2,0)}, {(2,2)}, {(1,0),(0,1)}.
GroupPartition w3_cover_partition();

/// The bijection [i] -> block i for the cover above.
std::map<std::string, int> w3_cover_map();

}  // namespace fusion::fixtures
