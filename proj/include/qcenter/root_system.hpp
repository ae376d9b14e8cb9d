#pragma once

#include <string>
#include <vector>

#include "qcenter/rational.hpp"

namespace qcenter {

/// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<Int>;
/// Exact rational coordinates in the simple-root basis.
using RootCoords = std::vector<Rat>;
using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

/// One of the finite families A..G together with a rank.
struct LieType {
    char family = 'A';
    int rank = 1;

    friend bool operator==(const LieType&, const LieType&) = default;
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

bool is_admissible(LieType t);

/// Throws std::invalid_argument on inadmissible (family, rank) pairs.
LieType make_type(char family, int rank);

/// Per-type Cartan data. Row i of `cartan` holds the fundamental-weight
/// coordinates of the simple root alpha_i, so the simple reflection s_i acts
/// on weight coordinates as w -> w - w[i] * cartan[i].
struct CartanData {
    LieType type;
    IntMatrix cartan;                  // n x n, rows = simple roots in weight coords
    std::vector<Int> symmetrizer;      // d_i, short roots have d_i = 1
    RatMatrix inv_cartan_transpose;    // column i = lambda_i in root coords
    std::vector<RootCoords> positive_roots;
};

/// Memoized; safe for concurrent readers once warmed, and the warm-up is
/// guarded by a mutex.
const CartanData& cartan_data(LieType t);

IntMatrix cartan_matrix(LieType t);

/// lambda_i expressed in simple roots (column i of the inverse Cartan
/// transpose). i is 1-based.
RootCoords fundamental_weight_in_roots(LieType t, int i);

RootCoords weight_to_root_coords(LieType t, const Weight& w);

/// Inverse base change; exact, input may be any rational root vector.
std::vector<Rat> root_to_weight_coords(LieType t, const RootCoords& rc);

/// Invariant bilinear form, normalized so short roots have squared length 2.
Rat inner_product(LieType t, const Weight& a, const Weight& b);

const std::vector<RootCoords>& positive_roots(LieType t);

/// Simple root alpha_i as a weight vector (row i of the Cartan matrix).
Weight simple_root_as_weight(LieType t, int i);

Weight fundamental_weight(LieType t, int i);
Weight zero_weight(LieType t);
bool is_dominant(const Weight& w);

Int weyl_group_order(LieType t);

} // namespace qcenter
