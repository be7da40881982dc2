#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "fusion/fusion_algebra.hpp"
#include "fusion/partition_cover.hpp"

namespace fusion {

// Documented JSON shapes. All loaders validate field presence and types and
// throw std::runtime_error naming the offending field; unknown fields are
// ignored so fixture files may carry extra metadata (label maps, notes).
//
// algebra:   { "labels": [str...], "identity": str,
//              "conjugation": [str...],           // aligned with labels
//              "triples": [[a, b, c, n], ...] }   // labels, n >= 1
// partition: { "modulus": int, "length": int,
//              "blocks": [[[int...], ...], ...] } // block 0 = {zero}
// cover map: { algebra_label: block_index, ... }

nlohmann::ordered_json algebra_to_json(const FusionAlgebra& f);
FusionAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::ordered_json partition_to_json(const GroupPartition& p);
GroupPartition partition_from_json(const nlohmann::json& j);

nlohmann::ordered_json cover_map_to_json(const std::map<std::string, int>& phi);
std::map<std::string, int> cover_map_from_json(const nlohmann::json& j);

/// Parses a JSON file; parse errors mention the file name.
nlohmann::json load_json_file(const std::string& path);

}  // namespace fusion
