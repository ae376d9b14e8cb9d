#include "qcenter/characters.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qcenter/errors.hpp"
#include "qcenter/monoid.hpp"

namespace qcenter {

namespace {

Weight add(const Weight& a, const Weight& b) {
    Weight c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Weight rho(LieType t) { return Weight(t.rank, 1); }

/// Height of lambda - mu in the root basis; integral for weights in the
/// same coset, asserted by the caller's usage.
Int root_height_difference(LieType t, const Weight& lambda, const Weight& mu) {
    Weight diff(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) diff[i] = lambda[i] - mu[i];
    RootCoords rc = weight_to_root_coords(t, diff);
    Rat h{0, 1};
    for (const auto& c : rc) h = h + c;
    if (h.den != 1) throw std::domain_error("weights not in the same root coset");
    return h.num;
}

Weight root_as_weight(LieType t, const RootCoords& rc) {
    auto wc = root_to_weight_coords(t, rc);
    Weight w(wc.size());
    for (size_t i = 0; i < wc.size(); ++i) {
        if (wc[i].den != 1) throw std::domain_error("root with non-integral weight coords");
        w[i] = wc[i].num;
    }
    return w;
}

Rat root_inner(LieType t, const RootCoords& alpha, const Weight& w) {
    const auto& cd = cartan_data(t);
    Rat s{0, 1};
    for (int j = 0; j < t.rank; ++j) s = s + alpha[j] * Rat{cd.symmetrizer[j] * w[j], 1};
    return s;
}

} // namespace

Int weyl_dimension(LieType t, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    Weight lr = add(lambda, rho(t));
    Rat dim{1, 1};
    for (const auto& alpha : positive_roots(t))
        dim = dim * (root_inner(t, alpha, lr) / root_inner(t, alpha, rho(t)));
    if (dim.den != 1) throw std::domain_error("non-integral Weyl dimension");
    return dim.num;
}

std::map<Weight, Int> weight_multiplicities(LieType t, const Weight& lambda, Int dim_guard) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    if (t.rank > 4) throw std::invalid_argument("character expansion limited to rank <= 4");
    Int dim = weyl_dimension(t, lambda);
    if (dim > dim_guard) throw BudgetError("module dimension guard", dim);

    const auto& pos = positive_roots(t);
    std::vector<Weight> pos_w;
    for (const auto& a : pos) pos_w.push_back(root_as_weight(t, a));

    // Dominant weights of the module: lambda minus nonnegative root
    // combinations, dominant, found by downward closure under simple roots.
    std::set<Weight> dominant_region;
    {
        std::vector<Weight> frontier = {lambda};
        std::set<Weight> seen = {lambda};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& w : frontier) {
                for (int i = 1; i <= t.rank; ++i) {
                    Weight v = w;
                    const Weight alpha = simple_root_as_weight(t, i);
                    for (int j = 0; j < t.rank; ++j) v[j] -= alpha[j];
                    Weight dom = dominant_representative(t, v);
                    if (!dominance_less(t, dom, lambda) && dom != lambda) continue;
                    if (seen.insert(v).second) next.push_back(v);
                }
            }
            frontier = std::move(next);
        }
        for (const auto& w : seen)
            if (is_dominant(w)) dominant_region.insert(w);
    }

    std::vector<Weight> order(dominant_region.begin(), dominant_region.end());
    std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
        Int ha = root_height_difference(t, lambda, a), hb = root_height_difference(t, lambda, b);
        return ha != hb ? ha < hb : a < b;
    });

    Weight lr = add(lambda, rho(t));
    Rat lr_norm = inner_product(t, lr, lr);

    std::map<Weight, Int> mult;
    for (const auto& mu : order) {
        if (mu == lambda) {
            mult[lambda] = 1;
            continue;
        }
        Rat total{0, 1};
        for (size_t a = 0; a < pos.size(); ++a) {
            for (Int k = 1;; ++k) {
                Weight nu = mu;
                for (int j = 0; j < t.rank; ++j) nu[j] += k * pos_w[a][j];
                Weight dom = dominant_representative(t, nu);
                auto it = mult.find(dom);
                if (it == mult.end()) break; // outside the module's support
                total = total + Rat{it->second, 1} * root_inner(t, pos[a], nu);
            }
        }
        Weight mr = add(mu, rho(t));
        Rat denom = lr_norm - inner_product(t, mr, mr);
        Rat m = (Rat{2, 1} * total) / denom;
        if (m.den != 1 || m.num < 0) throw std::domain_error("non-integral multiplicity");
        if (m.num > 0) mult[mu] = m.num;
    }
    return mult;
}

namespace {

/// Full (non-dominant) weight map of the module, by orbit expansion.
std::map<Weight, Int> full_weight_map(LieType t, const Weight& lambda, Int dim_guard) {
    std::map<Weight, Int> full;
    for (const auto& [mu, m] : weight_multiplicities(t, lambda, dim_guard))
        for (const auto& w : orbit(t, mu).elements) full[w] = m;
    return full;
}

} // namespace

RingElement tensor_decompose(LieType t, const Weight& lambda, const Weight& mu, Int dim_guard) {
    // Convolve the smaller-dimensional weight map against the other factor.
    Weight small = lambda, large = mu;
    if (weyl_dimension(t, lambda) > weyl_dimension(t, mu)) std::swap(small, large);
    auto small_map = full_weight_map(t, small, dim_guard);
    auto large_map = full_weight_map(t, large, dim_guard);

    std::map<Weight, Int> dominant_mult;
    for (const auto& [a, ma] : small_map)
        for (const auto& [b, mb] : large_map) {
            Weight s = add(a, b);
            if (is_dominant(s)) dominant_mult[s] += ma * mb;
        }

    RingElement result;
    while (!dominant_mult.empty()) {
        // Peel a maximal remaining dominant weight (largest by height).
        auto top = dominant_mult.begin();
        Int best_h = std::numeric_limits<Int>::min();
        Weight base = add(lambda, mu); // common coset representative
        for (auto it = dominant_mult.begin(); it != dominant_mult.end(); ++it) {
            Int h = -root_height_difference(t, base, it->first);
            if (h > best_h) {
                best_h = h;
                top = it;
            }
        }
        Weight nu = top->first;
        Int c = top->second;
        if (c <= 0) throw std::domain_error("negative multiplicity while peeling");
        result[nu] = c;
        for (const auto& [w, m] : weight_multiplicities(t, nu, dim_guard)) {
            auto it = dominant_mult.find(w);
            if (it == dominant_mult.end()) throw std::domain_error("inconsistent tensor peel");
            it->second -= c * m;
            if (it->second == 0) dominant_mult.erase(it);
        }
    }
    return result;
}

namespace {

// Plain orbit sum (each orbit element once) in the character basis:
// chi_lambda = sum_mu mult_lambda(mu) m_mu over dominant mu; invert the
// unitriangular system downward.
RingElement plain_orbit_sum(LieType t, const Weight& lambda, Int dim_guard,
                            std::map<Weight, RingElement>& memo) {
    auto hit = memo.find(lambda);
    if (hit != memo.end()) return hit->second;
    RingElement result;
    result[lambda] = 1;
    auto mults = weight_multiplicities(t, lambda, dim_guard);
    mults.erase(lambda);
    for (const auto& [mu, m] : mults) {
        auto lower = plain_orbit_sum(t, mu, dim_guard, memo);
        for (const auto& [nu, c] : lower) result[nu] -= m * c;
    }
    for (auto it = result.begin(); it != result.end();)
        it = it->second == 0 ? result.erase(it) : std::next(it);
    memo[lambda] = result;
    return result;
}

} // namespace

RingElement orbit_sum_in_characters(LieType t, const Weight& lambda, Int dim_guard) {
    // Full group sum: each orbit element counted with the stabilizer order
    // |W| / |orbit|, so lambda = 0 yields |W| times the trivial character.
    std::map<Weight, RingElement> memo;
    RingElement plain = plain_orbit_sum(t, lambda, dim_guard, memo);
    Int stab = weyl_group_order(t) / orbit_size(t, lambda);
    for (auto& [nu, c] : plain) c *= stab;
    return plain;
}

RingElement monomial_expand(LieType t, const std::map<Weight, Int>& monomial, Int dim_guard) {
    RingElement acc;
    acc[zero_weight(t)] = 1;
    for (const auto& [w, e] : monomial) {
        if (e < 0) throw std::invalid_argument("negative exponent in character monomial");
        for (Int k = 0; k < e; ++k) {
            RingElement next;
            for (const auto& [a, ca] : acc) {
                for (const auto& [b, cb] : tensor_decompose(t, a, w, dim_guard))
                    next[b] += ca * cb;
            }
            acc = std::move(next);
        }
    }
    return acc;
}

bool theta_support_check(LieType t, const Weight& lambda, Int dim_guard) {
    if (!psi_contains(t, lambda))
        throw std::invalid_argument("weight is not in the dominant even monoid");
    std::map<Weight, Int> monomial;
    for (int i = 1; i <= t.rank; ++i)
        if (lambda[i - 1] > 0) monomial[fundamental_weight(t, i)] = lambda[i - 1];
    for (const auto& [w, c] : monomial_expand(t, monomial, dim_guard)) {
        (void)c;
        if (!psi_contains(t, w)) return false;
    }
    return true;
}

} // namespace qcenter
