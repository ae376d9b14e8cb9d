#include "qcenter/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qcenter {

namespace {

// Floor division, needed so reduced entries land in [0, pivot).
Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Row HNF in place; optionally applies the same row operations to a
// transform matrix (for left-kernel extraction). Returns the rank.
int hnf_in_place(IntMatrix& m, IntMatrix* transform) {
    int rows = (int)m.size();
    if (rows == 0) return 0;
    int cols = (int)m[0].size();
    auto row_sub = [&](int dst, int src, Int q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
        if (transform)
            for (size_t j = 0; j < (*transform)[dst].size(); ++j)
                (*transform)[dst][j] -= q * (*transform)[src][j];
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        if (transform) std::swap((*transform)[a], (*transform)[b]);
    };
    auto row_negate = [&](int r) {
        for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        if (transform)
            for (auto& x : (*transform)[r]) x = -x;
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd elimination on column c among rows >= r
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i)
                if (m[i][c] != 0 && (best == -1 || std::llabs(m[i][c]) < std::llabs(m[best][c])))
                    best = i;
            if (best == -1) break;
            row_swap(r, best);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                row_sub(i, r, m[i][c] / m[r][c]);
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r >= rows || m[r][c] == 0) continue;
        if (m[r][c] < 0) row_negate(r);
        for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(m[i][c], m[r][c]));
        ++r;
    }
    return r;
}

} // namespace

IntMatrix hnf_rows(IntMatrix rows) {
    int rank = hnf_in_place(rows, nullptr);
    rows.resize(rank);
    return rows;
}

IntegerLattice lattice_from_generators(const IntMatrix& rows, int n) {
    IntMatrix h = hnf_rows(rows);
    if ((int)h.size() != n) throw std::invalid_argument("lattice generators are not full rank");
    return IntegerLattice{std::move(h), n};
}

IntegerLattice scaled_lattice(const IntegerLattice& l, Int k) {
    IntMatrix rows = l.hnf;
    for (auto& row : rows)
        for (auto& x : row) x *= k;
    return lattice_from_generators(rows, l.rank);
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
    IntMatrix rows = a.hnf;
    rows.insert(rows.end(), b.hnf.begin(), b.hnf.end());
    return lattice_from_generators(rows, a.rank);
}

IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
    // Rows (x | y) of the left kernel of [A; -B] satisfy x*A = y*B, so the
    // x*A span the intersection.
    int n = a.rank;
    int ka = (int)a.hnf.size(), kb = (int)b.hnf.size();
    IntMatrix stacked(ka + kb, std::vector<Int>(n));
    for (int i = 0; i < ka; ++i) stacked[i] = a.hnf[i];
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < n; ++j) stacked[ka + i][j] = -b.hnf[i][j];
    IntMatrix u(ka + kb, std::vector<Int>(ka + kb, 0));
    for (int i = 0; i < ka + kb; ++i) u[i][i] = 1;
    int rank = hnf_in_place(stacked, &u);
    IntMatrix gens;
    for (int i = rank; i < ka + kb; ++i) {
        std::vector<Int> v(n, 0);
        for (int s = 0; s < ka; ++s)
            for (int j = 0; j < n; ++j) v[j] += u[i][s] * a.hnf[s][j];
        gens.push_back(std::move(v));
    }
    return lattice_from_generators(gens, n);
}

bool lattice_contains(const IntegerLattice& l, const Weight& w) {
    // Back-substitution against the triangular HNF basis.
    int n = l.rank;
    Weight rem = w;
    for (int i = 0; i < n; ++i) {
        Int p = l.hnf[i][i];
        if (rem[i] % p != 0) return false;
        Int x = rem[i] / p;
        for (int j = i; j < n; ++j) rem[j] -= x * l.hnf[i][j];
    }
    for (Int v : rem)
        if (v != 0) return false;
    return true;
}

Int lattice_index(const IntegerLattice& l) {
    Int d = 1;
    for (int i = 0; i < l.rank; ++i) d *= l.hnf[i][i];
    return d;
}

IntegerLattice root_lattice(LieType t) {
    return lattice_from_generators(cartan_matrix(t), t.rank);
}

IntegerLattice weight_lattice(LieType t) {
    IntMatrix id(t.rank, std::vector<Int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) id[i][i] = 1;
    return IntegerLattice{std::move(id), t.rank};
}

IntegerLattice even_weight_lattice(LieType t) {
    return lattice_intersection(root_lattice(t), scaled_lattice(weight_lattice(t), 2));
}

Weight alpha_diamond(LieType t) {
    const auto& cd = cartan_data(t);
    Weight w(t.rank, 0);
    if (t.family == 'A') {
        for (int i = 0; i < t.rank; i += 2)
            for (int j = 0; j < t.rank; ++j) w[j] += cd.cartan[i][j];
    } else if (t.family == 'D') {
        for (int i = t.rank - 2; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) w[j] += cd.cartan[i][j];
    } else {
        throw std::domain_error("alpha_diamond applies to families A and D only");
    }
    return w;
}

std::string lattice_case_name(LatticeCase c) {
    switch (c) {
        case LatticeCase::TwoQ_strict: return "TwoQ_strict";
        case LatticeCase::TwoLambda_strict: return "TwoLambda_strict";
        case LatticeCase::TwoQ_equals_TwoLambda: return "TwoQ_equals_TwoLambda";
        case LatticeCase::TwoQ_plus_diamond: return "TwoQ_plus_diamond";
    }
    return "?";
}

LatticeCase classify_lattice_case(LieType t) {
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible Lie type " + t.str());
    switch (t.family) {
        case 'A':
            if (t.rank == 1) return LatticeCase::TwoLambda_strict;
            return t.rank % 2 == 0 ? LatticeCase::TwoQ_strict : LatticeCase::TwoQ_plus_diamond;
        case 'B':
        case 'C': return LatticeCase::TwoLambda_strict;
        case 'D':
            return t.rank % 2 == 0 ? LatticeCase::TwoLambda_strict : LatticeCase::TwoQ_plus_diamond;
        case 'E':
            if (t.rank == 6) return LatticeCase::TwoQ_strict;
            if (t.rank == 7) return LatticeCase::TwoLambda_strict;
            return LatticeCase::TwoQ_equals_TwoLambda;
        default: return LatticeCase::TwoQ_equals_TwoLambda; // F_4, G_2
    }
}

IntegerLattice named_case_lattice(LieType t) {
    switch (classify_lattice_case(t)) {
        case LatticeCase::TwoQ_strict: return scaled_lattice(root_lattice(t), 2);
        case LatticeCase::TwoLambda_strict:
        case LatticeCase::TwoQ_equals_TwoLambda: return scaled_lattice(weight_lattice(t), 2);
        case LatticeCase::TwoQ_plus_diamond: {
            IntMatrix rows = scaled_lattice(root_lattice(t), 2).hnf;
            rows.push_back(alpha_diamond(t));
            return lattice_from_generators(rows, t.rank);
        }
    }
    throw std::logic_error("unreachable");
}

bool verify_d_odd_refinement(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("refinement check needs odd n >= 5");
    LieType t = make_type('D', n);
    IntegerLattice lhs = named_case_lattice(t);
    IntMatrix rows;
    for (int i = 1; i <= n - 2; ++i) {
        Weight w(n, 0);
        w[i - 1] = 2;
        rows.push_back(w);
    }
    for (int i = n - 1; i <= n; ++i) {
        Weight w(n, 0);
        w[i - 1] = 4;
        rows.push_back(w);
    }
    rows.push_back(alpha_diamond(t));
    return lhs == lattice_from_generators(rows, n);
}

} // namespace qcenter
