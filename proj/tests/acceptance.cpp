// Runs the full cross-verification suite and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.
#include <cstdio>

#include "qcenter/verification.hpp"

int main() {
    auto results = qcenter::run_verification_suite();
    bool all_ok = true;
    int i = 0;
    for (const auto& r : results) {
        std::printf("%s  [%d] %s: %s\n", r.ok ? "PASS" : "FAIL", ++i, r.name.c_str(),
                    r.detail.c_str());
        all_ok = all_ok && r.ok;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_ok ? 0 : 1;
}
