#pragma once

#include <utility>
#include <vector>

#include "qcenter/lattice.hpp"
#include "qcenter/root_system.hpp"

namespace qcenter {

/// n-tuple of naturals with weighted degree |t| = sum i * t_i; the type-A
/// combinatorial model of the dominant even monoid.
struct NSequence {
    std::vector<Int> entries;

    Int weighted_degree() const {
        Int d = 0;
        for (size_t i = 0; i < entries.size(); ++i) d += (Int)(i + 1) * entries[i];
        return d;
    }
    bool is_type(Int k) const { return weighted_degree() % k == 0; }
    friend bool operator==(const NSequence&, const NSequence&) = default;
};

struct PsiElement {
    Weight weight;
    Rat square_length;
};

struct HilbertBasis {
    std::vector<PsiElement> elements; // dominance-larger elements first
    std::vector<Int> box_bounds;      // the c_i completeness bounds
};

enum class GenClassTag { Single, Special, Ordinary };

struct GeneratorClass {
    GenClassTag tag = GenClassTag::Ordinary;
    int index = 0;   // k for Single/Special
    Int coeff = 0;   // r_k for Single, d_k for Special
};

/// Membership in the dominant even monoid: w dominant and 2w in Q.
bool psi_contains(LieType t, const Weight& w);

/// Least c > 0 with c * lambda_i in the monoid. i is 1-based.
Int minimal_single_multiplier(LieType t, int i);

/// All nonzero monoid elements w with 0 <= w_j < upper_j. The parallel
/// variant is the OpenMP kernel (slabbed over the first coordinate, merged
/// deterministically); the serial one is the reference kept for testing.
std::vector<Weight> monoid_box_scan_serial(LieType t, const std::vector<Int>& upper);
std::vector<Weight> monoid_box_scan_parallel(LieType t, const std::vector<Int>& upper);

/// Minimal generating set of the monoid. Box enumeration bounded by the
/// per-coordinate minimal multipliers, then decomposition filtering.
HilbertBasis hilbert_basis(LieType t, Int budget = 100'000'000);

/// For family A: r = (n+1)/gcd(n+1,2).
Int type_a_modulus(int n);
/// r_k = r / gcd(r, k).
Int type_a_single_multiplier(int n, int k);
/// d_k = r-k for k < r, 2r-k for r < k < n+1 (k != 1, r).
Int type_a_special_coefficient(int n, int k);

/// All minimal n-sequences of type r with their classification, computed in
/// sequence space. Order: singles (k ascending), specials (k ascending),
/// ordinary by (weighted degree, lex).
std::vector<std::pair<NSequence, GeneratorClass>> minimal_sequences_A(int n, Int budget = 100'000'000);

/// ||t|| = (-t_1 + sum_{k != 1,r} t_k d_k) / r for ordinary t. Throws
/// std::domain_error for non-ordinary input.
Int norm_coefficient(int n, const NSequence& t);

GeneratorClass classify_sequence(int n, const NSequence& t);

/// True iff every monoid element with (psi,psi) <= degree_bound is an
/// N-combination of the given generators (dynamic programming over the
/// enumerated region).
bool generation_check(LieType t, const std::vector<Weight>& generators, const Rat& degree_bound,
                      Int budget = 100'000'000);

/// generation_check against the computed Hilbert basis.
bool brute_force_generation_check(LieType t, const Rat& degree_bound, Int budget = 100'000'000);

/// Default degree bound used by the generation oracle: twice the largest
/// square length in the basis.
Rat default_generation_bound(LieType t);

} // namespace qcenter
