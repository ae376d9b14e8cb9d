#pragma once

#include <map>

#include "qcenter/weyl.hpp"

namespace qcenter {

/// Element of the character ring in one of two triangular bases: dominant
/// weights with integer coefficients. Interpretation (irreducible characters
/// vs. Weyl orbit sums) depends on context.
using RingElement = std::map<Weight, Int>;

/// Multiplicity of each dominant weight mu in the irreducible module of
/// highest weight lambda (Freudenthal recursion). Guarded: rank <= 4 and
/// Weyl dimension <= dim_guard.
std::map<Weight, Int> weight_multiplicities(LieType t, const Weight& lambda,
                                            Int dim_guard = 1'000'000);

/// Weyl dimension formula, exact.
Int weyl_dimension(LieType t, const Weight& lambda);

/// chi_lambda * chi_mu as a sum of irreducible characters (weight-map
/// convolution, then peeling maximal dominant weights).
RingElement tensor_decompose(LieType t, const Weight& lambda, const Weight& mu,
                             Int dim_guard = 1'000'000);

/// The full Weyl-group sum over the orbit of lambda (each orbit element
/// counted with its stabilizer order) written in the basis of irreducible
/// characters: inverts the triangular chi = sum (orbit multiplicities) m.
/// Leading coefficient is |W| / |orbit|; lambda = 0 gives |W| at 0.
RingElement orbit_sum_in_characters(LieType t, const Weight& lambda,
                                    Int dim_guard = 1'000'000);

/// Expands a monomial prod chi_{lambda_i}^{e_i} into irreducible characters
/// by iterated tensor decomposition.
RingElement monomial_expand(LieType t, const std::map<Weight, Int>& monomial,
                            Int dim_guard = 1'000'000);

/// Closure check for a monoid element lambda: expands the monomial of
/// fundamental characters with exponents lambda_i and confirms every
/// irreducible constituent's highest weight lies in the dominant even
/// monoid. Throws std::invalid_argument when lambda itself is not in it.
bool theta_support_check(LieType t, const Weight& lambda, Int dim_guard = 1'000'000);

} // namespace qcenter
