#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qcenter/verification.hpp"
#include "qcenter/weyl.hpp"

using namespace qcenter;

namespace {

std::vector<LieType> sample_types() {
    std::vector<LieType> types;
    for (int n = 1; n <= 10; ++n) types.push_back(make_type('A', n));
    for (int n = 2; n <= 10; ++n) types.push_back(make_type('B', n));
    for (int n = 2; n <= 10; ++n) types.push_back(make_type('C', n));
    for (int n = 4; n <= 10; ++n) types.push_back(make_type('D', n));
    for (int n : {6, 7, 8}) types.push_back(make_type('E', n));
    types.push_back(make_type('F', 4));
    types.push_back(make_type('G', 2));
    return types;
}

} // namespace

TEST_CASE("admissibility and construction") {
    CHECK_THROWS_AS(make_type('A', 0), std::invalid_argument);
    CHECK_THROWS_AS(make_type('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(make_type('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(make_type('F', 5), std::invalid_argument);
    CHECK_THROWS_AS(make_type('G', 3), std::invalid_argument);
    CHECK_THROWS_AS(make_type('X', 2), std::invalid_argument);
    CHECK(make_type('B', 2).str() == "B2");
}

TEST_CASE("Cartan matrices match the closed-form coordinates") {
    CHECK(cartan_matrix(make_type('G', 2)) == IntMatrix{{2, -3}, {-1, 2}});
    CHECK(cartan_matrix(make_type('A', 1)) == IntMatrix{{2}});
    CHECK(cartan_matrix(make_type('A', 2)) == IntMatrix{{2, -1}, {-1, 2}});
    for (LieType t : sample_types())
        CHECK_MESSAGE(cartan_matrix(t) == expected_simple_roots_in_weights(t), t.str());
}

TEST_CASE("fundamental weights in root coordinates match the closed forms") {
    CHECK(fundamental_weight_in_roots(make_type('G', 2), 1) == RootCoords{{2, 1}, {3, 1}});
    CHECK(fundamental_weight_in_roots(make_type('A', 2), 1) == RootCoords{{2, 3}, {1, 3}});
    CHECK(fundamental_weight_in_roots(make_type('D', 5), 4) ==
          RootCoords{{1, 2}, {1, 1}, {3, 2}, {5, 4}, {3, 4}});
    for (LieType t : sample_types()) {
        RatMatrix expected = expected_fundamental_weights_in_roots(t);
        for (int i = 1; i <= t.rank; ++i) {
            RootCoords got = fundamental_weight_in_roots(t, i);
            for (int j = 0; j < t.rank; ++j)
                CHECK_MESSAGE(got[j] == expected[j][i - 1],
                              t.str(), " lambda_", i, " entry ", j + 1);
        }
    }
}

TEST_CASE("base change round trip") {
    std::mt19937_64 rng(1);
    for (LieType t : sample_types()) {
        if (t.rank > 8) continue;
        Weight w(t.rank);
        for (auto& c : w) c = (Int)(rng() % 11) - 5;
        RootCoords rc = weight_to_root_coords(t, w);
        auto back = root_to_weight_coords(t, rc);
        for (int j = 0; j < t.rank; ++j) CHECK(back[j] == Rat{w[j], 1});
    }
    CHECK(weight_to_root_coords(make_type('A', 2), {0, 0}) == RootCoords{{0, 1}, {0, 1}});
    CHECK(weight_to_root_coords(make_type('A', 2), {1, 0}) == RootCoords{{2, 3}, {1, 3}});
    CHECK(weight_to_root_coords(make_type('A', 4), {5, 0, 0, 0}) ==
          RootCoords{{4, 1}, {3, 1}, {2, 1}, {1, 1}});
}

TEST_CASE("inner product normalization and symmetry") {
    LieType a1 = make_type('A', 1);
    CHECK(inner_product(a1, {0}, {1}) == Rat{0, 1});
    CHECK(inner_product(a1, {1}, {1}) == Rat{1, 2});

    // short simple roots have squared length 2, long ones 2*d_i
    for (LieType t : sample_types()) {
        const auto& cd = cartan_data(t);
        Int min_d = *std::min_element(cd.symmetrizer.begin(), cd.symmetrizer.end());
        CHECK(min_d == 1);
        for (int i = 1; i <= t.rank; ++i) {
            Weight alpha = simple_root_as_weight(t, i);
            CHECK(inner_product(t, alpha, alpha) == Rat{2 * cd.symmetrizer[i - 1], 1});
        }
    }

    // In the labeling used here alpha_1 of G_2 is the long root.
    LieType g2 = make_type('G', 2);
    Weight a = simple_root_as_weight(g2, 1), b = simple_root_as_weight(g2, 2);
    CHECK(inner_product(g2, a, a) == Rat{6, 1});
    CHECK(inner_product(g2, b, b) == Rat{2, 1});

    std::mt19937_64 rng(2);
    for (LieType t : sample_types()) {
        if (t.rank > 8) continue;
        Weight u(t.rank), v(t.rank);
        for (auto& c : u) c = (Int)(rng() % 9) - 4;
        for (auto& c : v) c = (Int)(rng() % 9) - 4;
        CHECK(inner_product(t, u, v) == inner_product(t, v, u));
    }
}

TEST_CASE("positive root counts") {
    CHECK(positive_roots(make_type('A', 1)).size() == 1);
    CHECK(positive_roots(make_type('A', 2)).size() == 3);
    CHECK(positive_roots(make_type('G', 2)).size() == 6);
    CHECK(positive_roots(make_type('B', 3)).size() == 9);
    CHECK(positive_roots(make_type('C', 4)).size() == 16);
    CHECK(positive_roots(make_type('D', 5)).size() == 20);
    CHECK(positive_roots(make_type('F', 4)).size() == 24);
    CHECK(positive_roots(make_type('E', 6)).size() == 36);
    // no duplicates
    for (LieType t : {make_type('B', 4), make_type('G', 2), make_type('F', 4)}) {
        auto roots = positive_roots(t);
        std::set<RootCoords> unique_set;
        for (const auto& r : roots) {
            CHECK(unique_set.insert(r).second);
        }
    }
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group_order(make_type('A', 1)) == 2);
    CHECK(weyl_group_order(make_type('A', 2)) == 6);
    CHECK(weyl_group_order(make_type('G', 2)) == 12);
    CHECK(weyl_group_order(make_type('B', 3)) == 48);
    CHECK(weyl_group_order(make_type('D', 4)) == 192);
    CHECK(weyl_group_order(make_type('F', 4)) == 1152);
    CHECK(weyl_group_order(make_type('E', 6)) == 51840);
    CHECK(weyl_group_order(make_type('E', 7)) == 2903040);
    CHECK(weyl_group_order(make_type('E', 8)) == 696729600);
}
