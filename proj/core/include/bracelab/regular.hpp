#pragma once

#include <optional>

#include "bracelab/abelian.hpp"
#include "bracelab/group.hpp"

namespace bracelab {

/// A permutation of a group's element set, stored as its image array.
using Perm = std::vector<Elem>;

Perm identity_perm(int degree);
Perm compose_perms(const Perm& f, const Perm& g);  // f after g
Perm invert_perm(const Perm& p);

/// A subgroup of Perm(G) in canonical form: permutations sorted
/// lexicographically by image array, so set equality is array equality.
/// labels[i], when present, is the group element indexing perms[i]
/// (constructions of the form {eta_g : g in G}).
struct PermSubgroup {
  GroupPtr base;
  std::vector<Perm> perms;
  std::vector<Elem> labels;  // empty when unlabeled

  int size() const { return static_cast<int>(perms.size()); }
  bool contains(const Perm& p) const;
  /// position of the member with label g, -1 when absent/unlabeled
  int index_of_label(Elem g) const;
  const Perm& by_label(Elem g) const;

  bool operator==(const PermSubgroup& o) const {
    return same_group(base, o.base) && perms == o.perms;
  }
};

/// Verifies bijectivity of members, identity membership and closure under
/// composition and inverses; sorts canonically.
PermSubgroup make_perm_subgroup(GroupPtr base, std::vector<Perm> perms,
                                std::vector<Elem> labels = {});

/// Left regular representation: lambda(g)[h] = g h. Labels g.
PermSubgroup left_translations(const GroupPtr& g);
/// Right regular representation: rho(g)[h] = h g^-1. Labels g.
PermSubgroup right_translations(const GroupPtr& g);

/// N_psi = {eta_g : g in G} with eta_g[h] = g psi(g^-1) h psi(g).
/// Verified regular and stable; eta_g[0] = g.
PermSubgroup subgroup_from_map(const AbelianMap& psi);

/// The opposite subgroup {eta'_g} with eta'_g[h] = h psi(h^-1) g psi(h).
/// Verified regular, stable, and commuting elementwise with N_psi; equals
/// the centralizer of N_psi by the cardinality argument.
PermSubgroup opposite_subgroup_from_map(const AbelianMap& psi);

/// {lambda(g) rho(psi(g)) : g in G} for a fixed point free map. This is the
/// classical fixed-point-free construction; a fixed point makes the set
/// non-regular, which is an error.
PermSubgroup lambda_rho_subgroup(const AbelianMap& psi);

/// |P| = |G|, evaluation at the identity bijective, and no member other
/// than the identity fixes a point.
bool is_regular(const PermSubgroup& p);

/// Closure under conjugation by lambda(G), reduced to generators on both
/// sides. is_stable_full checks the literal double quantifier.
bool is_stable(const PermSubgroup& p);
bool is_stable_full(const PermSubgroup& p);

/// Elementwise commutation, reduced to generators.
bool commute_elementwise(const PermSubgroup& a, const PermSubgroup& b);

/// N_psi1 == N_psi2, decided by the central-ratio criterion:
/// psi2(g) psi1(g^-1) central for all g.
bool same_induced_subgroup(const AbelianMap& psi1, const AbelianMap& psi2);

/// The five subgroups of G attached to an abelian map.
struct MapSubgroups {
  Subgroup kernel;                // ker psi
  Subgroup lambda_source;         // psi^-1(Z(G)); indexes N ∩ lambda(G)
  Subgroup fixed_points;          // {g : psi(g) = g}
  Subgroup rho_source;            // {g : g psi(g^-1) in Z(G)}; indexes N ∩ rho(G)
  Subgroup kernel_fixed_product;  // ker psi * fixed points
};
MapSubgroups map_subgroups(const AbelianMap& psi);

/// Literal intersections with the regular representations.
PermSubgroup lambda_points(const PermSubgroup& n);
PermSubgroup rho_points(const PermSubgroup& n);

/// The subgroup re-indexed as an abstract group: identity permutation at
/// index 0, remaining members in lexicographic order. When perm_to_elem is
/// given it receives, per member of p.perms, its abstract element index.
GroupPtr perm_subgroup_as_group(const PermSubgroup& p,
                                std::vector<int>* perm_to_elem = nullptr);

/// (G, ∘) with g∘h = g psi(g^-1) h psi(g), on the same element indices.
GroupPtr circle_group(const AbelianMap& psi);

/// Canonical label of the isomorphism type of m: the base group's spec when
/// isomorphic to base, else a builder-family spec, an abelian invariant
/// factor product, a family-times-cyclic product, or
/// "unknown:order-k:<fingerprint>".
std::string group_type_label(const GroupPtr& m, const GroupPtr& base = nullptr);

/// Isomorphism type of a regular subgroup. When the map's subgroup data is
/// supplied and |kernel||fixed| = |N|, the label is the kernel-fixed product
/// form (e.g. "A:5 x C:2"); the isomorphism is verified.
std::string hgs_type(const PermSubgroup& n,
                     const std::optional<MapSubgroups>& ctx = std::nullopt);

/// Asserts the embedded copy {lambda(g0) rho(g1^-1)} ≅ kernel × fixed inside
/// N_psi; returns the product type label when |kernel||fixed| = |G|.
std::optional<std::string> product_decomposition(const AbelianMap& psi);

/// P = {pi_g} <= Perm(target) with pi_g[m] = alpha(g · alpha^-1(m)), for an
/// isomorphism alpha from the circle group of psi to target. Verified
/// regular, target-stable, label-isomorphic to G, and satisfying the
/// conjugation identity.
PermSubgroup transported_subgroup(const AbelianMap& psi, const GroupPtr& target,
                                  const GroupMap& alpha);

/// Complete list of regular, G-stable subgroups of Perm(G) by backtracking
/// over rows with closure/stability propagation. Hard cap |G| <= 8.
std::vector<PermSubgroup> all_regular_stable_subgroups(const GroupPtr& g);

}  // namespace bracelab
