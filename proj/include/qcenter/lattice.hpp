#pragma once

#include <string>

#include "qcenter/root_system.hpp"

namespace qcenter {

/// Full-rank sublattice of Z^n over the fundamental-weight basis. The
/// stored basis is the row-style Hermite normal form (positive pivots,
/// entries above each pivot reduced into [0, pivot)), so lattice equality
/// is matrix equality.
struct IntegerLattice {
    IntMatrix hnf;
    int rank = 0;

    friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

/// Row HNF of an arbitrary integer matrix; zero rows are dropped.
IntMatrix hnf_rows(IntMatrix rows);

/// Builds a lattice from spanning rows; throws std::invalid_argument when the
/// span is not full rank.
IntegerLattice lattice_from_generators(const IntMatrix& rows, int n);

IntegerLattice scaled_lattice(const IntegerLattice& l, Int k);
IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b);

bool lattice_contains(const IntegerLattice& l, const Weight& w);

/// det of the HNF basis (product of pivots) = index in Z^n.
Int lattice_index(const IntegerLattice& l);

IntegerLattice root_lattice(LieType t);
IntegerLattice weight_lattice(LieType t);

/// Q intersected with 2*Lambda, computed by generic lattice intersection.
IntegerLattice even_weight_lattice(LieType t);

/// Sum of odd-indexed simple roots (family A) or of the last two simple
/// roots (family D), as a weight vector. Throws std::domain_error for other
/// families.
Weight alpha_diamond(LieType t);

enum class LatticeCase { TwoQ_strict, TwoLambda_strict, TwoQ_equals_TwoLambda, TwoQ_plus_diamond };

std::string lattice_case_name(LatticeCase c);

LatticeCase classify_lattice_case(LieType t);

/// The lattice named by the classification tag, assembled from its
/// definition (2Q, 2Lambda, or 2Q + Z*alpha_diamond).
IntegerLattice named_case_lattice(LieType t);

/// For odd n >= 5: checks that 2Q + Z*alpha_diamond in type D_n equals
/// 4Z*lambda_{n-1} + 4Z*lambda_n + Z*alpha_diamond + sum 2Z*lambda_i.
bool verify_d_odd_refinement(int n);

} // namespace qcenter
