#pragma once

#include <optional>
#include <vector>

#include "bracelab/group.hpp"

namespace bracelab::detail {

// Extends images of generators to a homomorphism by product closure over the
// subgroup the assigned generators span. Returns the (possibly partial,
// -1 = unassigned) image array, or nullopt when the assignment is
// inconsistent or, with require_injective, collides. Every ordered product
// pair of derived elements is checked, so when the result is total it
// satisfies the homomorphism law in full.
std::optional<std::vector<Elem>> extend_hom_partial(
    const FiniteGroup& source, const FiniteGroup& target,
    const std::vector<Elem>& gens, const std::vector<Elem>& gen_images,
    bool require_injective);

// As above but requires the generators to span all of source.
std::optional<std::vector<Elem>> extend_hom(const FiniteGroup& source,
                                            const FiniteGroup& target,
                                            const std::vector<Elem>& gens,
                                            const std::vector<Elem>& gen_images,
                                            bool require_injective);

}  // namespace bracelab::detail
