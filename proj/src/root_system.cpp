#include "qcenter/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qcenter {

bool is_admissible(LieType t) {
    switch (t.family) {
        case 'A': return t.rank >= 1;
        case 'B': return t.rank >= 2;
        case 'C': return t.rank >= 2;
        case 'D': return t.rank >= 4;
        case 'E': return t.rank >= 6 && t.rank <= 8;
        case 'F': return t.rank == 4;
        case 'G': return t.rank == 2;
        default: return false;
    }
}

LieType make_type(char family, int rank) {
    LieType t{family, rank};
    if (!is_admissible(t))
        throw std::invalid_argument("inadmissible Lie type " + std::string(1, family) +
                                    std::to_string(rank));
    return t;
}

namespace {

// Edges of the Dynkin diagram as (i, j, m_ij, m_ji) with 1-based nodes;
// m_ij is the entry -cartan[i][j] on the edge (1, 2 or 3).
IntMatrix build_cartan(LieType t) {
    int n = t.rank;
    IntMatrix a(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, Int mij = 1, Int mji = 1) {
        a[i - 1][j - 1] = -mij;
        a[j - 1][i - 1] = -mji;
    };
    switch (t.family) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 1, n, 2, 1);
            break;
        case 'C':
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 1, n, 1, 2);
            break;
        case 'D':
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(1, 2);
            link(2, 3, 2, 1);
            link(3, 4);
            break;
        case 'G':
            link(1, 2, 3, 1);
            break;
    }
    return a;
}

// d_i with d_i * a[i][j] = d_j * a[j][i] after transposing the convention:
// here a[i][j] is the weight coordinate, so the symmetry condition reads
// a[i][j] * d_j = a[j][i] * d_i. Normalized so min d_i = 1.
std::vector<Int> build_symmetrizer(const IntMatrix& a) {
    int n = (int)a.size();
    std::vector<Rat> d(n, Rat(0));
    d[0] = Rat(1);
    // propagate along the (connected) diagram
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0 || !d[j].is_zero()) continue;
            // a[i][j] d_j = a[j][i] d_i
            d[j] = d[i] * Rat(a[j][i]) / Rat(a[i][j]);
            stack.push_back(j);
        }
    }
    Rat mn = d[0];
    for (auto& x : d) mn = std::min(mn, x);
    std::vector<Int> res(n);
    for (int i = 0; i < n; ++i) {
        Rat v = d[i] / mn;
        if (!v.is_integer()) throw std::logic_error("non-integer symmetrizer");
        res[i] = v.num;
    }
    return res;
}

RatMatrix invert_transpose(const IntMatrix& a) {
    int n = (int)a.size();
    // Gauss-Jordan on A^T with exact rationals.
    RatMatrix m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a[j][i]);
        m[i][n + i] = Rat(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) throw std::logic_error("singular Cartan matrix");
        std::swap(m[c], m[p]);
        Rat inv = Rat(1) / m[c][c];
        for (int j = 0; j < 2 * n; ++j) m[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatMatrix inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::vector<RootCoords> build_positive_roots(const CartanData& cd) {
    int n = cd.type.rank;
    // Reflection closure over weight coordinates.
    std::set<Weight> roots;
    std::vector<Weight> frontier;
    for (int i = 0; i < n; ++i) {
        Weight w(cd.cartan[i]);
        roots.insert(w);
        frontier.push_back(w);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            for (int i = 0; i < n; ++i) {
                Weight s = w;
                Int wi = w[i];
                for (int j = 0; j < n; ++j) s[j] -= wi * cd.cartan[i][j];
                if (roots.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    std::vector<RootCoords> pos;
    for (const auto& w : roots) {
        RootCoords rc(n);
        bool nonneg = true;
        for (int i = 0; i < n && nonneg; ++i) {
            Rat c(0);
            for (int j = 0; j < n; ++j) c += cd.inv_cartan_transpose[i][j] * Rat(w[j]);
            if (c < Rat(0)) nonneg = false;
            rc[i] = c;
        }
        if (nonneg) pos.push_back(std::move(rc));
    }
    std::sort(pos.begin(), pos.end(), [](const RootCoords& a, const RootCoords& b) {
        Rat ha(0), hb(0);
        for (const auto& x : a) ha += x;
        for (const auto& x : b) hb += x;
        if (ha != hb) return ha < hb;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return pos;
}

} // namespace

const CartanData& cartan_data(LieType t) {
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible Lie type " + t.str());
    static std::mutex mtx;
    static std::map<std::pair<char, int>, CartanData> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(t.family, t.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CartanData cd;
    cd.type = t;
    cd.cartan = build_cartan(t);
    cd.symmetrizer = build_symmetrizer(cd.cartan);
    cd.inv_cartan_transpose = invert_transpose(cd.cartan);
    cd.positive_roots = build_positive_roots(cd);
    return cache.emplace(key, std::move(cd)).first->second;
}

IntMatrix cartan_matrix(LieType t) { return cartan_data(t).cartan; }

RootCoords fundamental_weight_in_roots(LieType t, int i) {
    const auto& cd = cartan_data(t);
    if (i < 1 || i > t.rank) throw std::invalid_argument("fundamental weight index out of range");
    RootCoords rc(t.rank);
    for (int r = 0; r < t.rank; ++r) rc[r] = cd.inv_cartan_transpose[r][i - 1];
    return rc;
}

RootCoords weight_to_root_coords(LieType t, const Weight& w) {
    const auto& cd = cartan_data(t);
    int n = t.rank;
    RootCoords rc(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rc[i] += cd.inv_cartan_transpose[i][j] * Rat(w[j]);
    return rc;
}

std::vector<Rat> root_to_weight_coords(LieType t, const RootCoords& rc) {
    const auto& cd = cartan_data(t);
    int n = t.rank;
    std::vector<Rat> w(n, Rat(0));
    // w_j = sum_i rc_i * cartan[i][j]
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w[j] += rc[i] * Rat(cd.cartan[i][j]);
    return w;
}

Rat inner_product(LieType t, const Weight& a, const Weight& b) {
    const auto& cd = cartan_data(t);
    // (a, b) = sum_j root_coords(a)_j * d_j * b_j, since (alpha_j, lambda_k) =
    // d_j delta_jk under the short-root-length-2 normalization.
    RootCoords rc = weight_to_root_coords(t, a);
    Rat res(0);
    for (int j = 0; j < t.rank; ++j) res += rc[j] * Rat(cd.symmetrizer[j]) * Rat(b[j]);
    return res;
}

const std::vector<RootCoords>& positive_roots(LieType t) { return cartan_data(t).positive_roots; }

Weight simple_root_as_weight(LieType t, int i) {
    const auto& cd = cartan_data(t);
    if (i < 1 || i > t.rank) throw std::invalid_argument("simple root index out of range");
    return cd.cartan[i - 1];
}

Weight fundamental_weight(LieType t, int i) {
    if (i < 1 || i > t.rank) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(t.rank, 0);
    w[i - 1] = 1;
    return w;
}

Weight zero_weight(LieType t) { return Weight(t.rank, 0); }

bool is_dominant(const Weight& w) {
    for (Int c : w)
        if (c < 0) return false;
    return true;
}

Int weyl_group_order(LieType t) {
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible Lie type " + t.str());
    auto fact = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    int n = t.rank;
    switch (t.family) {
        case 'A': return fact(n + 1);
        case 'B':
        case 'C': return (Int(1) << n) * fact(n);
        case 'D': return (Int(1) << (n - 1)) * fact(n);
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        case 'G': return 12;
    }
    return 0; // unreachable
}

} // namespace qcenter
