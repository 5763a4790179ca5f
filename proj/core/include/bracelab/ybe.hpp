#pragma once

#include "bracelab/brace.hpp"

namespace bracelab {

/// A total map on ordered pairs of carrier elements, stored as two flat
/// component tables: (x,y) -> (first[x*n+y], second[x*n+y]).
struct PairTable {
  int size = 0;
  std::vector<Elem> first, second;

  std::pair<Elem, Elem> apply(Elem x, Elem y) const {
    return {first[x * size + y], second[x * size + y]};
  }
};

/// R1 = R of the brace, R2 its opposite-brace inverse, R3/R4 the same pair
/// for the swapped brace (bi-skew braces only).
enum class SolutionVariant { R1, R2, R3, R4 };

/// Builds the variant from the closed brace formulas and verifies
/// non-degeneracy and the braid relation exhaustively before returning.
/// R3/R4 on a non-bi-skew brace is an error.
PairTable solution_from_brace(const SkewBrace& b, SolutionVariant v,
                              int jobs = 0);

/// The four solutions written directly in terms of the map; no verification
/// here (four_solutions cross-checks them against the brace-derived tables).
PairTable closed_form_solution(const AbelianMap& psi, SolutionVariant v);

struct FourSolutions {
  PairTable r1, r2, r3, r4;
};

/// Brace-derived and closed-form tables cross-checked entrywise; each table
/// verified non-degenerate + braid; R1∘R2 = R3∘R4 = id.
FourSolutions four_solutions(const AbelianMap& psi, int jobs = 0);

/// (R×id)(id×R)(R×id) = (id×R)(R×id)(id×R) over all triples.
bool verify_braid(const PairTable& r, int jobs = 0);
bool is_involutive(const PairTable& r);
/// For fixed x, y -> first component bijective; for fixed y, x -> second
/// component bijective.
bool is_nondegenerate(const PairTable& r);
bool is_identity_pair_map(const PairTable& r);
/// outer(inner(x,y)); carriers must match.
PairTable compose_pair_maps(const PairTable& outer, const PairTable& inner);

}  // namespace bracelab
