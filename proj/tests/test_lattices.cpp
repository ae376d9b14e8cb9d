#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcenter/lattice.hpp"

using namespace qcenter;

TEST_CASE("root and weight lattice normal forms") {
    CHECK(root_lattice(make_type('A', 1)).hnf == IntMatrix{{2}});
    CHECK(root_lattice(make_type('A', 2)).hnf == IntMatrix{{1, 1}, {0, 3}});
    // E8: root lattice equals the full weight lattice
    CHECK(root_lattice(make_type('E', 8)).hnf == weight_lattice(make_type('E', 8)).hnf);
    for (LieType t : {make_type('A', 3), make_type('B', 4), make_type('D', 5)}) {
        CHECK(weight_lattice(t).hnf == hnf_rows(weight_lattice(t).hnf)); // idempotent
        CHECK(lattice_index(weight_lattice(t)) == 1);
    }
    // lattice index of Q in Lambda = det of the Cartan matrix
    CHECK(lattice_index(root_lattice(make_type('A', 4))) == 5);
    CHECK(lattice_index(root_lattice(make_type('D', 6))) == 4);
    CHECK(lattice_index(root_lattice(make_type('E', 7))) == 2);
    CHECK(lattice_index(root_lattice(make_type('G', 2))) == 1);
}

TEST_CASE("even sublattice examples") {
    IntMatrix two_id(8, std::vector<Int>(8, 0));
    for (int i = 0; i < 8; ++i) two_id[i][i] = 2;
    CHECK(even_weight_lattice(make_type('E', 8)).hnf == two_id);
    CHECK(even_weight_lattice(make_type('A', 1)).hnf == IntMatrix{{2}});
    CHECK(even_weight_lattice(make_type('A', 2)).hnf == IntMatrix{{2, 2}, {0, 6}});
    CHECK(even_weight_lattice(make_type('A', 2)).hnf ==
          scaled_lattice(root_lattice(make_type('A', 2)), 2).hnf);
}

TEST_CASE("alpha diamond") {
    CHECK(alpha_diamond(make_type('D', 5)) == Weight{0, 0, -2, 2, 2});
    CHECK(alpha_diamond(make_type('A', 3)) == Weight{2, -2, 2});
    CHECK(alpha_diamond(make_type('A', 1)) == Weight{2});
    CHECK_THROWS_AS(alpha_diamond(make_type('B', 3)), std::domain_error);
    CHECK(lattice_contains(even_weight_lattice(make_type('D', 5)),
                           alpha_diamond(make_type('D', 5))));
}

TEST_CASE("membership") {
    IntegerLattice l = even_weight_lattice(make_type('A', 2));
    CHECK(lattice_contains(l, {0, 0}));
    CHECK_FALSE(lattice_contains(l, {1, 1})); // in Q but not in 2*Lambda
    CHECK(lattice_contains(l, {2, 2}));
}

TEST_CASE("four-way classification") {
    auto expect = [](char f, int n, LatticeCase c) {
        CHECK_MESSAGE(classify_lattice_case(make_type(f, n)) == c, f, n);
    };
    expect('E', 6, LatticeCase::TwoQ_strict);
    expect('A', 2, LatticeCase::TwoQ_strict);
    expect('A', 4, LatticeCase::TwoQ_strict);
    expect('A', 1, LatticeCase::TwoLambda_strict);
    expect('B', 5, LatticeCase::TwoLambda_strict);
    expect('C', 7, LatticeCase::TwoLambda_strict);
    expect('D', 6, LatticeCase::TwoLambda_strict);
    expect('E', 7, LatticeCase::TwoLambda_strict);
    expect('E', 8, LatticeCase::TwoQ_equals_TwoLambda);
    expect('F', 4, LatticeCase::TwoQ_equals_TwoLambda);
    expect('G', 2, LatticeCase::TwoQ_equals_TwoLambda);
    expect('A', 3, LatticeCase::TwoQ_plus_diamond);
    expect('A', 9, LatticeCase::TwoQ_plus_diamond);
    expect('D', 5, LatticeCase::TwoQ_plus_diamond);
    expect('D', 9, LatticeCase::TwoQ_plus_diamond);

    // tag's named lattice equals the intersection, for every type
    std::vector<LieType> types;
    for (int n = 1; n <= 10; ++n) types.push_back(make_type('A', n));
    for (int n = 2; n <= 10; ++n) types.push_back(make_type('B', n));
    for (int n = 2; n <= 10; ++n) types.push_back(make_type('C', n));
    for (int n = 4; n <= 10; ++n) types.push_back(make_type('D', n));
    for (int n : {6, 7, 8}) types.push_back(make_type('E', n));
    types.push_back(make_type('F', 4));
    types.push_back(make_type('G', 2));
    for (LieType t : types)
        CHECK_MESSAGE(even_weight_lattice(t) == named_case_lattice(t), t.str());
}

TEST_CASE("sandwich containments") {
    for (LieType t : {make_type('A', 5), make_type('B', 3), make_type('D', 7),
                      make_type('E', 6), make_type('G', 2)}) {
        IntegerLattice even = even_weight_lattice(t);
        IntegerLattice q = root_lattice(t);
        for (const auto& row : scaled_lattice(q, 2).hnf)
            CHECK(lattice_contains(even, row)); // 2Q inside
        for (const auto& row : even.hnf) {
            CHECK(lattice_contains(q, row)); // inside Q
        }
    }
}

TEST_CASE("odd D refinement") {
    CHECK(verify_d_odd_refinement(5));
    CHECK(verify_d_odd_refinement(7));
    CHECK(verify_d_odd_refinement(9));
}

TEST_CASE("intersection and sum properties on random lattices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + (int)(rng() % 3);
        auto random_lattice = [&] {
            for (;;) {
                IntMatrix rows(n, std::vector<Int>(n));
                for (auto& row : rows)
                    for (auto& c : row) c = (Int)(rng() % 7) - 3;
                try {
                    return lattice_from_generators(rows, n);
                } catch (const std::invalid_argument&) {
                    // singular draw; retry
                }
            }
        };
        IntegerLattice a = random_lattice(), b = random_lattice();
        IntegerLattice meet = lattice_intersection(a, b);
        IntegerLattice join = lattice_sum(a, b);
        for (const auto& row : meet.hnf) {
            CHECK(lattice_contains(a, row));
            CHECK(lattice_contains(b, row));
        }
        for (const auto& row : a.hnf) CHECK(lattice_contains(join, row));
        for (const auto& row : b.hnf) CHECK(lattice_contains(join, row));
        // |A/meet| * |A_join| = ... index multiplicativity: [Z^n:a][Z^n:b] = [Z^n:join][Z^n:meet]
        CHECK(lattice_index(a) * lattice_index(b) ==
              lattice_index(join) * lattice_index(meet));
    }
}
