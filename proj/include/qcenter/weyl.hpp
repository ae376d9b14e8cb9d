#pragma once

#include <set>

#include "qcenter/root_system.hpp"

namespace qcenter {

struct WeylOrbit {
    Weight dominant_rep;
    std::set<Weight> elements;

    Int size() const { return (Int)elements.size(); }
};

/// s_i(w) = w - w_i * alpha_i. i is 1-based.
Weight simple_reflection(LieType t, int i, const Weight& w);

/// The unique dominant weight in the orbit of w, reached by reflecting at
/// the leftmost negative coordinate.
Weight dominant_representative(LieType t, const Weight& w);

/// dominant_representative with the reflection-count parity, for
/// signed character manipulations. Returns false in `nonzero` when some
/// intermediate coordinate vanishes (stabilized weight).
struct SignedDominant {
    Weight rep;
    int sign = 1;       // (-1)^{number of reflections}
    bool regular = true; // false iff a zero coordinate was hit
};
SignedDominant signed_dominant_representative(LieType t, const Weight& w);

/// Breadth-first closure under simple reflections. Throws BudgetError when
/// the orbit grows past size_guard.
WeylOrbit orbit(LieType t, const Weight& w, Int size_guard = 1'000'000);

Int orbit_size(LieType t, const Weight& w);

/// Strict dominance order: true iff lambda - mu is a nonzero nonnegative
/// integer combination of simple roots.
bool dominance_less(LieType t, const Weight& mu, const Weight& lambda);

} // namespace qcenter
