#pragma once

#include "bracelab/group.hpp"

namespace bracelab {

/// An endomorphism of G whose image is an abelian subgroup ("abelian map").
/// Such maps are constant on conjugacy classes; the fixed-point-free flag
/// (images[g] != g for every g != 0) is cached at construction.
struct AbelianMap {
  GroupPtr group;
  std::vector<Elem> images;
  bool fixed_point_free = false;

  Elem operator()(Elem g) const { return images[g]; }
};

/// Validates the homomorphism law, the abelian image and constancy on
/// conjugacy classes.
AbelianMap make_abelian_map(GroupPtr g, std::vector<Elem> images);

/// g -> 1 for all g.
AbelianMap trivial_abelian_map(GroupPtr g);

/// The complete, duplicate-free list of abelian endomorphisms of g, in
/// lexicographic order of image arrays. Generator-image search with
/// homomorphism-closure extension; order-divisibility pruning only.
std::vector<AbelianMap> enumerate_abelian_maps(const GroupPtr& g,
                                               int order_bound = 120);

bool is_fixed_point_free(const AbelianMap& psi);

/// For fixed point free psi: the unique fixed point free abelian map qi with
/// qi(g psi(g^-1)) = psi(g^-1). An involution on the fixed point free maps.
AbelianMap quasi_inverse(const AbelianMap& psi);

/// phi^-1 ∘ psi ∘ phi for an automorphism phi of the same group.
AbelianMap conjugate_map(const AbelianMap& psi, const GroupMap& phi);

/// The projection map psi(hk) = k for h in a normal subgroup and k in an
/// abelian complement (trivial intersection, orders multiplying to |G|).
AbelianMap normal_complement_map(const GroupPtr& g, const Subgroup& normal_part,
                                 const Subgroup& abelian_part);

}  // namespace bracelab
