#pragma once

#include <map>
#include <string>

#include "qcenter/monoid.hpp"

namespace qcenter {

struct MonoidGenerator {
    std::string name;
    PsiElement element;
};

/// Binomial identity between two monomials in the generators; both sides
/// map to the same weight.
struct BinomialRelation {
    std::map<std::string, Int> lhs, rhs;

    friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

struct Presentation {
    LieType lie_type;
    std::vector<MonoidGenerator> generators;
    std::vector<BinomialRelation> relations;
    bool is_polynomial = false;
    Int completeness_bound = 0; // default bound used by verify_completeness
    // Generators spanning the free polynomial part of the algebra; the
    // completeness certificate may multiply a factorization pair by these
    // before rewriting (the congruence is saturated at them; the relation
    // ideal equals the kernel after localizing at these generators).
    std::vector<std::string> inverted_generators;
};

/// Generators and relations of the monoid algebra per family:
/// polynomial families get n free generators; odd D one relation; E_6
/// eight relations; family A the single/special/ordinary scheme.
Presentation build_presentation(LieType t);

/// True exactly for A_1, B_n, C_n, even D, E_7, E_8, F_4, G_2.
bool classify_polynomial(LieType t);

/// Every relation's two sides sum to the same weight.
bool verify_soundness(const Presentation& p);

/// Bounded completeness certificate: for every monoid element up to the
/// degree bound, all factorizations into generators are connected under
/// single-relation rewrites, where both factorizations may first be
/// multiplied by a common monomial in the inverted generators. Bound
/// semantics: weighted degree |t| for family A, coordinate sum otherwise.
bool verify_completeness(const Presentation& p, Int degree_bound, Int budget = 100'000'000);

Int default_completeness_bound(LieType t);

/// Number of rewrite-congruence classes of generator monomials evaluating to
/// each monoid element up to the bound, keyed by the element. Used by the
/// dimension-agreement tests; completeness means every value is 1.
std::map<Weight, int> factorization_class_counts(const Presentation& p, Int degree_bound,
                                                 Int budget = 100'000'000);

} // namespace qcenter
