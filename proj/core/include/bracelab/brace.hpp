#pragma once

#include "bracelab/abelian.hpp"
#include "bracelab/regular.hpp"

namespace bracelab {

/// One carrier set, two group tables with a shared identity at index 0.
/// Factories verify the brace axiom; the struct itself is plain data so
/// tests can build non-examples for the verifier.
struct SkewBrace {
  int size = 0;
  std::vector<Elem> dot;     // size*size, dot[a*size+b] = a . b
  std::vector<Elem> circle;  // size*size

  Elem dot_of(Elem a, Elem b) const { return dot[a * size + b]; }
  Elem circle_of(Elem a, Elem b) const { return circle[a * size + b]; }
};

/// Identity at 0, Latin, associative, two-sided inverses. Non-throwing.
bool is_group_table(int n, const std::vector<Elem>& table);

/// Both tables are groups sharing the identity and
/// x∘(y·z) = (x∘y)·x^-1·(x∘z) holds for all triples.
bool verify_brace(const SkewBrace& b);

/// Additionally the swapped law g·(h∘k) = (g·h)∘ḡ∘(g·k).
bool is_biskew(const SkewBrace& b);

SkewBrace swapped_brace(const SkewBrace& b);

/// Same circle, dot reversed (x·'y = yx). An involution; equals b iff the
/// dot group is abelian.
SkewBrace opposite_brace(const SkewBrace& b);

SkewBrace trivial_brace(const GroupPtr& g);         // circle = dot = group law
SkewBrace almost_trivial_brace(const GroupPtr& g);  // circle reversed

/// dot = the group law, circle = g∘h = g psi(g^-1) h psi(g). Verified as a
/// bi-skew brace, with the circle group label-isomorphic to N_psi.
SkewBrace brace_from_map(const AbelianMap& psi);

/// Carrier indexed by kappa(eta) = eta[0]: dot is permutation composition,
/// circle the base group law. Requires N regular.
SkewBrace brace_from_regular_subgroup(const PermSubgroup& n);

/// One bijection that is an isomorphism of both tables at once; exhaustive
/// backtracking with order-signature pruning. Carrier sizes capped at 64.
bool brace_isomorphic(const SkewBrace& a, const SkewBrace& b);

std::vector<Elem> dot_inverses(const SkewBrace& b);
std::vector<Elem> circle_inverses(const SkewBrace& b);

}  // namespace bracelab
