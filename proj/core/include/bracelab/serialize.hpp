#pragma once

#include <nlohmann/json.hpp>

#include "bracelab/ybe.hpp"

namespace bracelab {

/// Deterministic key order for diff-friendly output.
using ojson = nlohmann::ordered_json;

ojson map_to_json(const AbelianMap& psi);
/// Rebuilds the group from its spec; only buildable specs round-trip.
AbelianMap abelian_map_from_json(const ojson& j);

ojson perm_subgroup_to_json(const PermSubgroup& p, const std::string& type_label);
PermSubgroup perm_subgroup_from_json(const ojson& j);

ojson brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json(const ojson& j);

/// Re-verifies the properties block (involutive/nondegenerate/braid) on
/// serialization so emitted solutions are self-describing.
ojson solution_to_json(const PairTable& r, int jobs = 0);
PairTable solution_from_json(const ojson& j);

}  // namespace bracelab
