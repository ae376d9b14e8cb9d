// Compares the serial reference box scan against the OpenMP kernel on the
// largest monoid enumeration in the verification workload and checks the
// results agree.
#include <chrono>
#include <iostream>

#include "qcenter/monoid.hpp"

using namespace qcenter;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

} // namespace

int main() {
    struct Case {
        LieType type;
        std::vector<Int> box;
    };
    std::vector<Case> cases = {
        {make_type('A', 8), {9, 9, 3, 9, 9, 3, 9, 9}},
        {make_type('A', 6), {7, 7, 7, 7, 7, 7}},
        {make_type('E', 6), {3, 1, 3, 1, 3, 3}},
        {make_type('D', 9), {1, 1, 1, 1, 1, 1, 1, 2, 2}},
    };
    std::cout << "type      box size     serial      parallel    speedup   agree\n";
    for (const auto& c : cases) {
        Int cells = 1;
        for (Int b : c.box) cells *= b == 0 ? 1 : b;
        std::vector<Weight> serial, parallel;
        double ts = time_ms([&] { serial = monoid_box_scan_serial(c.type, c.box); });
        double tp = time_ms([&] { parallel = monoid_box_scan_parallel(c.type, c.box); });
        std::printf("%-8s %9lld %9.1f ms %9.1f ms  %7.2fx   %s\n", c.type.str().c_str(),
                    cells, ts, tp, tp > 0 ? ts / tp : 0.0,
                    serial == parallel ? "yes" : "NO");
        if (serial != parallel) return 1;
    }
    return 0;
}
