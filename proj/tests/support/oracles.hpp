#pragma once

// Independent oracles used only by tests. The tensor oracle implements the
// signed-reflection (Racah/Klimyk) rule, which shares no code with the
// convolution-and-peel implementation under test.

#include <map>

#include "qcenter/characters.hpp"
#include "qcenter/weyl.hpp"

namespace qcenter::test {

inline RingElement klimyk_tensor(LieType t, const Weight& lambda, const Weight& mu) {
    std::map<Weight, Int> decomposition;
    for (const auto& [nu_dom, m] : weight_multiplicities(t, lambda)) {
        for (const auto& nu : orbit(t, nu_dom).elements) {
            // shift mu + rho + nu, reflect to the dominant chamber with sign
            Weight shifted(t.rank);
            for (int j = 0; j < t.rank; ++j) shifted[j] = mu[j] + 1 + nu[j];
            SignedDominant sd = signed_dominant_representative(t, shifted);
            if (!sd.regular) continue;
            Weight target(t.rank);
            for (int j = 0; j < t.rank; ++j) target[j] = sd.rep[j] - 1;
            decomposition[target] += m * sd.sign;
        }
    }
    RingElement out;
    for (const auto& [w, c] : decomposition)
        if (c != 0) out[w] = c;
    return out;
}

} // namespace qcenter::test
