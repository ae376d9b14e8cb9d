#include "qcenter/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qcenter/errors.hpp"

namespace qcenter {

namespace {

struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = 1469598103934665603ull;
        for (Int v : w) {
            h ^= (size_t)v + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Doubled weight lies in Q. Assumes w already known dominant (box scans).
bool even_in_root_lattice(const IntegerLattice& q, const Weight& w) {
    Weight dw(w.size());
    for (size_t i = 0; i < w.size(); ++i) dw[i] = 2 * w[i];
    return lattice_contains(q, dw);
}

Int checked_box_volume(const std::vector<Int>& upper, Int budget, const std::string& what) {
    long double vol = 1;
    for (Int u : upper) vol *= (long double)u;
    if (vol > (long double)budget)
        throw BudgetError(what + ": search box of ~" + std::to_string((double)vol) +
                              " candidates exceeds budget " + std::to_string(budget),
                          (long long)std::min<long double>(vol, 9e18));
    Int v = 1;
    for (Int u : upper) v *= u;
    return v;
}

void decode_index(Int idx, const std::vector<Int>& upper, Weight& out) {
    for (int i = (int)upper.size() - 1; i >= 0; --i) {
        out[i] = idx % upper[i];
        idx /= upper[i];
    }
}

std::vector<Weight> scan_slab(const IntegerLattice& q, const std::vector<Int>& upper,
                              Int first_coord) {
    int n = (int)upper.size();
    Int sub = 1;
    for (int i = 1; i < n; ++i) sub *= upper[i];
    std::vector<Weight> found;
    Weight w(n);
    w[0] = first_coord;
    std::vector<Int> rest(upper.begin() + 1, upper.end());
    Weight tail(n - 1, 0);
    for (Int idx = 0; idx < sub; ++idx) {
        decode_index(idx, rest, tail);
        bool zero = first_coord == 0;
        for (int i = 0; i < n - 1; ++i) {
            w[i + 1] = tail[i];
            if (tail[i] != 0) zero = false;
        }
        if (zero) continue;
        if (even_in_root_lattice(q, w)) found.push_back(w);
    }
    return found;
}

} // namespace

bool psi_contains(LieType t, const Weight& w) {
    if (!is_dominant(w)) return false;
    Weight dw(w.size());
    for (size_t i = 0; i < w.size(); ++i) dw[i] = 2 * w[i];
    return lattice_contains(root_lattice(t), dw);
}

Int minimal_single_multiplier(LieType t, int i) {
    if (i < 1 || i > t.rank) throw std::invalid_argument("index out of range");
    IntegerLattice q = root_lattice(t);
    Int det = lattice_index(q);
    for (Int c = 1; c <= 2 * det; ++c) {
        Weight w(t.rank, 0);
        w[i - 1] = 2 * c;
        if (lattice_contains(q, w)) return c;
    }
    throw std::logic_error("no single multiplier below 2*[Lambda:Q]");
}

std::vector<Weight> monoid_box_scan_serial(LieType t, const std::vector<Int>& upper) {
    IntegerLattice q = root_lattice(t);
    std::vector<Weight> all;
    for (Int v = 0; v < upper[0]; ++v) {
        auto slab = scan_slab(q, upper, v);
        all.insert(all.end(), slab.begin(), slab.end());
    }
    return all;
}

std::vector<Weight> monoid_box_scan_parallel(LieType t, const std::vector<Int>& upper) {
    IntegerLattice q = root_lattice(t);
    int slabs = (int)upper[0];
    std::vector<std::vector<Weight>> per_slab(slabs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int v = 0; v < slabs; ++v) per_slab[v] = scan_slab(q, upper, v);
    std::vector<Weight> all;
    for (auto& slab : per_slab) all.insert(all.end(), slab.begin(), slab.end());
    return all;
}

HilbertBasis hilbert_basis(LieType t, Int budget) {
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible Lie type " + t.str());
    int n = t.rank;
    std::vector<Int> bounds(n);
    for (int i = 1; i <= n; ++i) bounds[i - 1] = minimal_single_multiplier(t, i);
    try {
        checked_box_volume(bounds, budget, "hilbert_basis(" + t.str() + ")");
    } catch (const BudgetError& e) {
        std::string hint = t.family == 'A'
            ? "; use minimal_sequences_A for large type-A ranks"
            : "";
        throw BudgetError("hilbert_basis(" + t.str() + ") box exceeds budget " +
                              std::to_string(budget) + hint,
                          e.partial_count);
    }

    // Inside the box every basis element has all coordinates < c_i; the only
    // elements touching a bound are the singles c_i * lambda_i themselves.
    std::vector<Weight> candidates = monoid_box_scan_parallel(t, bounds);
    for (int i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = bounds[i];
        candidates.push_back(std::move(w));
    }
    std::sort(candidates.begin(), candidates.end(), [](const Weight& a, const Weight& b) {
        Int sa = std::accumulate(a.begin(), a.end(), (Int)0);
        Int sb = std::accumulate(b.begin(), b.end(), (Int)0);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    IntegerLattice q = root_lattice(t);
    std::vector<Weight> minimals;
    for (const auto& cand : candidates) {
        bool decomposable = false;
        Weight rest(n);
        for (const auto& mu : minimals) {
            bool fits = true;
            bool nonzero_rest = false;
            for (int j = 0; j < n && fits; ++j) {
                rest[j] = cand[j] - mu[j];
                if (rest[j] < 0) fits = false;
                if (rest[j] != 0) nonzero_rest = true;
            }
            if (fits && nonzero_rest && even_in_root_lattice(q, rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) minimals.push_back(cand);
    }

    HilbertBasis hb;
    hb.box_bounds = bounds;
    for (const auto& w : minimals) hb.elements.push_back({w, inner_product(t, w, w)});
    std::sort(hb.elements.begin(), hb.elements.end(), [](const PsiElement& a, const PsiElement& b) {
        if (a.square_length != b.square_length) return b.square_length < a.square_length;
        return a.weight < b.weight;
    });
    return hb;
}

Int type_a_modulus(int n) { return (Int)(n + 1) / std::gcd((Int)(n + 1), (Int)2); }

Int type_a_single_multiplier(int n, int k) {
    Int r = type_a_modulus(n);
    return r / std::gcd(r, (Int)k);
}

Int type_a_special_coefficient(int n, int k) {
    Int r = type_a_modulus(n);
    if (k == 1 || (Int)k == r) throw std::domain_error("no special coefficient at k = 1 or k = r");
    return (Int)k < r ? r - k : 2 * r - k;
}

GeneratorClass classify_sequence(int n, const NSequence& t) {
    Int r = type_a_modulus(n);
    int nonzero = 0, pos = -1;
    for (int i = 0; i < n; ++i)
        if (t.entries[i] != 0) { ++nonzero; pos = i; }
    if (nonzero == 1 && t.entries[pos] == type_a_single_multiplier(n, pos + 1))
        return {GenClassTag::Single, pos + 1, t.entries[pos]};
    for (int k = 2; k <= n; ++k) {
        if ((Int)k == r) continue;
        Int dk = type_a_special_coefficient(n, k);
        NSequence e;
        e.entries.assign(n, 0);
        e.entries[0] = dk;
        e.entries[k - 1] += 1;
        if (t == e) return {GenClassTag::Special, k, dk};
    }
    return {GenClassTag::Ordinary, 0, 0};
}

std::vector<std::pair<NSequence, GeneratorClass>> minimal_sequences_A(int n, Int budget) {
    if (n < 2) throw std::invalid_argument("minimal_sequences_A needs n >= 2");
    Int r = type_a_modulus(n);
    std::vector<Int> bounds(n);
    for (int k = 1; k <= n; ++k) bounds[k - 1] = type_a_single_multiplier(n, k);
    checked_box_volume(bounds, budget, "minimal_sequences_A(" + std::to_string(n) + ")");

    // Box scan in sequence space with the weighted-degree divisibility test.
    std::vector<NSequence> members;
    Int total = 1;
    for (Int b : bounds) total *= b;
    NSequence cur;
    cur.entries.assign(n, 0);
    for (Int idx = 1; idx < total; ++idx) {
        decode_index(idx, bounds, cur.entries);
        if (cur.weighted_degree() % r == 0) members.push_back(cur);
    }
    for (int k = 1; k <= n; ++k) {
        NSequence s;
        s.entries.assign(n, 0);
        s.entries[k - 1] = bounds[k - 1];
        members.push_back(std::move(s));
    }
    std::sort(members.begin(), members.end(), [](const NSequence& a, const NSequence& b) {
        Int sa = std::accumulate(a.entries.begin(), a.entries.end(), (Int)0);
        Int sb = std::accumulate(b.entries.begin(), b.entries.end(), (Int)0);
        if (sa != sb) return sa < sb;
        return a.entries < b.entries;
    });

    std::vector<NSequence> minimals;
    for (const auto& cand : members) {
        bool decomposable = false;
        for (const auto& mu : minimals) {
            bool fits = true, nonzero_rest = false;
            Int deg_rest = 0;
            for (int j = 0; j < n && fits; ++j) {
                Int d = cand.entries[j] - mu.entries[j];
                if (d < 0) fits = false;
                if (d != 0) nonzero_rest = true;
                deg_rest += (Int)(j + 1) * d;
            }
            if (fits && nonzero_rest && deg_rest % r == 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) minimals.push_back(cand);
    }

    std::vector<std::pair<NSequence, GeneratorClass>> result;
    for (auto& m : minimals) result.emplace_back(m, classify_sequence(n, m));
    std::stable_sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        auto order = [](const GeneratorClass& g) {
            return g.tag == GenClassTag::Single ? 0 : g.tag == GenClassTag::Special ? 1 : 2;
        };
        int oa = order(a.second), ob = order(b.second);
        if (oa != ob) return oa < ob;
        if (oa < 2) return a.second.index < b.second.index;
        Int da = a.first.weighted_degree(), db = b.first.weighted_degree();
        if (da != db) return da < db;
        return a.first.entries < b.first.entries;
    });
    return result;
}

Int norm_coefficient(int n, const NSequence& t) {
    GeneratorClass gc = classify_sequence(n, t);
    if (gc.tag != GenClassTag::Ordinary)
        throw std::domain_error("norm coefficient applies to ordinary sequences only");
    Int r = type_a_modulus(n);
    Int acc = -t.entries[0];
    for (int k = 2; k <= n; ++k) {
        if ((Int)k == r) continue;
        acc += t.entries[k - 1] * type_a_special_coefficient(n, k);
    }
    if (acc % r != 0) throw std::logic_error("norm numerator not divisible by r");
    return acc / r;
}

bool generation_check(LieType t, const std::vector<Weight>& generators, const Rat& degree_bound,
                      Int budget) {
    int n = t.rank;
    // (w, w) >= w_i^2 (lambda_i, lambda_i) for dominant w, so the region is
    // boxed per coordinate.
    std::vector<Int> upper(n);
    for (int i = 1; i <= n; ++i) {
        Weight li = fundamental_weight(t, i);
        Rat len = inner_product(t, li, li);
        Int u = 0;
        while (Rat((u + 1) * (u + 1)) * len <= degree_bound) ++u;
        upper[i - 1] = u + 1;
    }
    checked_box_volume(upper, budget, "generation_check(" + t.str() + ")");

    std::vector<Weight> region = monoid_box_scan_parallel(t, upper);
    region.erase(std::remove_if(region.begin(), region.end(),
                                [&](const Weight& w) {
                                    return degree_bound < inner_product(t, w, w);
                                }),
                 region.end());
    std::sort(region.begin(), region.end(), [](const Weight& a, const Weight& b) {
        Int sa = std::accumulate(a.begin(), a.end(), (Int)0);
        Int sb = std::accumulate(b.begin(), b.end(), (Int)0);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    std::unordered_set<Weight, WeightHash> generated;
    generated.insert(zero_weight(t));
    for (const auto& psi : region) {
        bool ok = false;
        Weight rest(n);
        for (const auto& g : generators) {
            bool fits = true;
            for (int j = 0; j < n && fits; ++j) {
                rest[j] = psi[j] - g[j];
                if (rest[j] < 0) fits = false;
            }
            if (fits && generated.count(rest)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
        generated.insert(psi);
    }
    return true;
}

bool brute_force_generation_check(LieType t, const Rat& degree_bound, Int budget) {
    HilbertBasis hb = hilbert_basis(t, budget);
    std::vector<Weight> gens;
    for (const auto& e : hb.elements) gens.push_back(e.weight);
    return generation_check(t, gens, degree_bound, budget);
}

Rat default_generation_bound(LieType t) {
    HilbertBasis hb = hilbert_basis(t);
    Rat mx(0);
    for (const auto& e : hb.elements) mx = std::max(mx, e.square_length);
    return mx * Rat(2);
}

} // namespace qcenter
