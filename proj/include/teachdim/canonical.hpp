#pragma once
#include "teachdim/concepts.hpp"

namespace teachdim {

// Representative of C's orbit under coordinate permutations and per-coordinate
// label flips. Exact (true canonical form) for n <= 8 by explicit minimization;
// for n > 8 a greedy refinement heuristic is used instead, which is cheap and
// deterministic but NOT canonical (distinct orbit members may map to distinct
// outputs). The heuristic is only ever used for duplicate pruning in search,
// never for correctness claims.
ConceptClass canonical_form(const ConceptClass& C);

// true when exact canonicalization is available for this n
bool canonical_is_exact(int n);

} // namespace teachdim
