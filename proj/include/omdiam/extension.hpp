#pragma once

#include <vector>

#include "omdiam/matroid.hpp"
#include "omdiam/sign_vector.hpp"

namespace omdiam {

// Sign assignment on the cocircuits of a base matroid encoding a
// single-element extension. Entries are aligned with the base's sorted
// cocircuit order and must satisfy sigma(-Y) = -sigma(Y).
struct Localization {
  std::vector<Sign> sigma;
};

// The localization sigma_f of M viewed as a single-element extension
// of M \ f: sigma_f(Ybar) is the f-entry of the unique cocircuit of M
// restricting to Ybar. Throws when deleting f would drop the rank
// (some cocircuit is supported exactly on {f}) or when the restriction
// is ambiguous (a CC2 failure upstream).
Localization localization_of_deletion(const OrientedMatroid& m, int f);

// Single-element extension by sigma. The new element is inserted at
// position `insert_pos` (1-based; 0 appends after the last element).
// Cocircuits are {(Y, sigma(Y))} plus {(Y1 ∘ Y2, 0)} over pairs with
// sigma(Y1) = -sigma(Y2) != 0, S(Y1,Y2) empty, and rank(Y1 ∘ Y2) = 2.
// The result is fully validated; an invalid sigma surfaces as an
// AxiomError.
OrientedMatroid extend(const OrientedMatroid& m0, const Localization& sigma,
                       int insert_pos = 0);

// Resolves the degenerate cocircuit W (|W0| > r-1) through element
// f in W0: deletes f, flips sigma_f to `preferred` on the restriction
// of W, and re-extends with f at its original index.
OrientedMatroid local_perturbation(const OrientedMatroid& m, const SignVector& w,
                                   int f, Sign preferred = Sign::plus);

// Iterates local perturbations (lexicographically smallest degenerate
// cocircuit, then smallest element of its zero set) until the matroid
// is uniform. Asserts that the diameter never decreases and that the
// total degeneracy strictly drops at every step. The input must be
// free of loops and parallel elements (simplify first).
OrientedMatroid perturb_to_uniform(const OrientedMatroid& m,
                                   Sign preferred = Sign::plus);

// Sum over cocircuits of max(0, |W0| - (r-1)); zero iff uniform.
int degeneracy_measure(const OrientedMatroid& m);

}  // namespace omdiam
