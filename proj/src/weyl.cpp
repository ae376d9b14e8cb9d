#include "qcenter/weyl.hpp"

#include <stdexcept>

#include "qcenter/errors.hpp"

namespace qcenter {

Weight simple_reflection(LieType t, int i, const Weight& w) {
    const auto& cd = cartan_data(t);
    if (i < 1 || i > t.rank) throw std::invalid_argument("reflection index out of range");
    Weight res = w;
    Int wi = w[i - 1];
    for (int j = 0; j < t.rank; ++j) res[j] -= wi * cd.cartan[i - 1][j];
    return res;
}

Weight dominant_representative(LieType t, const Weight& w) {
    const auto& cd = cartan_data(t);
    Weight cur = w;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < t.rank; ++i)
            if (cur[i] < 0) { neg = i; break; }
        if (neg < 0) return cur;
        Int wi = cur[neg];
        for (int j = 0; j < t.rank; ++j) cur[j] -= wi * cd.cartan[neg][j];
    }
}

SignedDominant signed_dominant_representative(LieType t, const Weight& w) {
    const auto& cd = cartan_data(t);
    SignedDominant sd;
    sd.rep = w;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < t.rank; ++i) {
            if (sd.rep[i] == 0) { sd.regular = false; return sd; }
            if (sd.rep[i] < 0) { neg = i; break; }
        }
        if (neg < 0) return sd;
        Int wi = sd.rep[neg];
        for (int j = 0; j < t.rank; ++j) sd.rep[j] -= wi * cd.cartan[neg][j];
        sd.sign = -sd.sign;
    }
}

WeylOrbit orbit(LieType t, const Weight& w, Int size_guard) {
    const auto& cd = cartan_data(t);
    WeylOrbit o;
    o.dominant_rep = dominant_representative(t, w);
    o.elements.insert(o.dominant_rep);
    std::vector<Weight> frontier{o.dominant_rep};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < t.rank; ++i) {
                Weight s = v;
                Int vi = v[i];
                for (int j = 0; j < t.rank; ++j) s[j] -= vi * cd.cartan[i][j];
                if (o.elements.insert(s).second) {
                    if ((Int)o.elements.size() > size_guard)
                        throw BudgetError("orbit size guard exceeded for " + t.str(),
                                          (Int)o.elements.size());
                    next.push_back(std::move(s));
                }
            }
        }
        frontier = std::move(next);
    }
    return o;
}

Int orbit_size(LieType t, const Weight& w) { return orbit(t, w).size(); }

bool dominance_less(LieType t, const Weight& mu, const Weight& lambda) {
    Weight diff(t.rank);
    bool zero = true;
    for (int i = 0; i < t.rank; ++i) {
        diff[i] = lambda[i] - mu[i];
        if (diff[i] != 0) zero = false;
    }
    if (zero) return false;
    RootCoords rc = weight_to_root_coords(t, diff);
    for (const auto& c : rc)
        if (!c.is_integer() || c.num < 0) return false;
    return true;
}

} // namespace qcenter
