#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qcenter/errors.hpp"
#include "qcenter/monoid.hpp"

using namespace qcenter;

namespace {

std::set<Weight> basis_set(LieType t) {
    std::set<Weight> s;
    for (const auto& e : hilbert_basis(t).elements) s.insert(e.weight);
    return s;
}

} // namespace

TEST_CASE("membership") {
    CHECK(psi_contains(make_type('B', 3), {0, 0, 0}));
    CHECK(psi_contains(make_type('A', 4), {1, 0, 0, 1}));
    CHECK_FALSE(psi_contains(make_type('A', 2), {1, 0}));
    CHECK_FALSE(psi_contains(make_type('A', 2), {-3, 0})); // not dominant

    // family A: membership is exactly divisibility of the weighted degree
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 8; ++n) {
        LieType t = make_type('A', n);
        Int r = n >= 2 ? type_a_modulus(n) : 1;
        for (int trial = 0; trial < 1250; ++trial) {
            Weight w(n);
            for (auto& c : w) c = (Int)(rng() % 6);
            CHECK(psi_contains(t, w) == (NSequence{w}.weighted_degree() % r == 0));
        }
    }
}

TEST_CASE("minimal single multipliers") {
    CHECK(minimal_single_multiplier(make_type('A', 4), 1) == 5);
    CHECK(minimal_single_multiplier(make_type('A', 3), 2) == 1);
    CHECK(minimal_single_multiplier(make_type('E', 6), 2) == 1);
    CHECK(minimal_single_multiplier(make_type('A', 1), 1) == 1);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(minimal_single_multiplier(make_type('A', n), k) ==
                  type_a_single_multiplier(n, k));
}

TEST_CASE("box scan kernels agree") {
    for (LieType t : {make_type('A', 5), make_type('B', 4), make_type('D', 5),
                      make_type('E', 6), make_type('G', 2)}) {
        std::vector<Int> box(t.rank, 4);
        auto serial = monoid_box_scan_serial(t, box);
        auto parallel = monoid_box_scan_parallel(t, box);
        CHECK(serial == parallel);
        for (const auto& w : serial) CHECK(psi_contains(t, w));
    }
}

TEST_CASE("basis examples") {
    CHECK(basis_set(make_type('A', 1)) == std::set<Weight>{{1}});
    CHECK(basis_set(make_type('A', 2)) == std::set<Weight>{{3, 0}, {0, 3}, {1, 1}});
    CHECK(basis_set(make_type('A', 3)) ==
          std::set<Weight>{{2, 0, 0}, {0, 1, 0}, {0, 0, 2}, {1, 0, 1}});
    CHECK(basis_set(make_type('B', 4)) ==
          std::set<Weight>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(basis_set(make_type('D', 5)) ==
          std::set<Weight>{{1, 0, 0, 0, 0},
                           {0, 1, 0, 0, 0},
                           {0, 0, 1, 0, 0},
                           {0, 0, 0, 2, 0},
                           {0, 0, 0, 0, 2},
                           {0, 0, 0, 1, 1}});
    CHECK(basis_set(make_type('G', 2)) == std::set<Weight>{{1, 0}, {0, 1}});
    CHECK(hilbert_basis(make_type('E', 6)).elements.size() == 14);
    CHECK(hilbert_basis(make_type('A', 4)).elements.size() == 14);
}

TEST_CASE("basis cardinality law and ordering") {
    for (LieType t : {make_type('B', 5), make_type('C', 6), make_type('D', 6),
                      make_type('E', 7), make_type('E', 8), make_type('F', 4)})
        CHECK((int)hilbert_basis(t).elements.size() == t.rank);
    for (int n : {5, 7, 9})
        CHECK((int)hilbert_basis(make_type('D', n)).elements.size() == n + 1);
    for (int n = 2; n <= 8; ++n)
        CHECK((int)hilbert_basis(make_type('A', n)).elements.size() >= n + 1);

    // ordering: square length descending, lexicographic tie-break
    for (LieType t : {make_type('A', 4), make_type('D', 5), make_type('E', 6)}) {
        auto hb = hilbert_basis(t);
        for (size_t i = 0; i + 1 < hb.elements.size(); ++i) {
            const auto& a = hb.elements[i];
            const auto& b = hb.elements[i + 1];
            bool ordered = a.square_length > b.square_length ||
                           (a.square_length == b.square_length && a.weight < b.weight);
            CHECK(ordered);
        }
    }
}

TEST_CASE("basis closure and minimality") {
    for (LieType t : {make_type('A', 4), make_type('D', 5), make_type('E', 6)}) {
        auto hb = hilbert_basis(t);
        for (const auto& a : hb.elements)
            for (const auto& b : hb.elements) {
                Weight sum(t.rank);
                for (int j = 0; j < t.rank; ++j) sum[j] = a.weight[j] + b.weight[j];
                CHECK(psi_contains(t, sum)); // closure
            }
        for (const auto& a : hb.elements)
            for (const auto& b : hb.elements) {
                if (a.weight == b.weight) continue;
                Weight diff(t.rank);
                bool nonneg = true;
                for (int j = 0; j < t.rank; ++j) {
                    diff[j] = a.weight[j] - b.weight[j];
                    nonneg = nonneg && diff[j] >= 0;
                }
                if (nonneg) CHECK_FALSE(psi_contains(t, diff)); // minimality
            }
    }
}

TEST_CASE("type A sequence classification") {
    CHECK(type_a_modulus(2) == 3);
    CHECK(type_a_modulus(3) == 2);
    CHECK(type_a_modulus(4) == 5);
    CHECK(type_a_special_coefficient(4, 2) == 3);
    CHECK(type_a_special_coefficient(4, 4) == 1);
    CHECK(type_a_special_coefficient(5, 4) == 2); // r=3, k=4 > r: 2r-k

    auto seqs2 = minimal_sequences_A(2);
    REQUIRE(seqs2.size() == 3);
    CHECK(seqs2[0].first.entries == Weight{3, 0});
    CHECK(seqs2[0].second.tag == GenClassTag::Single);
    CHECK(seqs2[1].first.entries == Weight{0, 3});
    CHECK(seqs2[2].first.entries == Weight{1, 1});
    CHECK(seqs2[2].second.tag == GenClassTag::Special);

    auto seqs3 = minimal_sequences_A(3);
    REQUIRE(seqs3.size() == 4);
    CHECK(seqs3[0].first.entries == Weight{2, 0, 0});
    CHECK(seqs3[1].first.entries == Weight{0, 1, 0}); // the k = r single
    CHECK(seqs3[2].first.entries == Weight{0, 0, 2});
    CHECK(seqs3[3].first.entries == Weight{1, 0, 1});

    auto seqs4 = minimal_sequences_A(4);
    int singles = 0, specials = 0, ordinary = 0;
    std::set<Weight> ordinary_set;
    for (const auto& [seq, cls] : seqs4) {
        if (cls.tag == GenClassTag::Single) ++singles;
        else if (cls.tag == GenClassTag::Special) ++specials;
        else {
            ++ordinary;
            ordinary_set.insert(seq.entries);
        }
    }
    CHECK(singles == 4);
    CHECK(specials == 3);
    CHECK(ordinary == 7);
    CHECK(ordinary_set.count({0, 1, 1, 0}) == 1);
    CHECK(ordinary_set.count({0, 0, 1, 3}) == 1);

    // ordinary sequences have zero entry at position r (when r is in range,
    // i.e. n odd; for even n the modulus is n+1)
    for (int n = 3; n <= 7; n += 2) {
        Int r = type_a_modulus(n);
        for (const auto& [seq, cls] : minimal_sequences_A(n))
            if (cls.tag == GenClassTag::Ordinary) CHECK(seq.entries[r - 1] == 0);
    }
}

TEST_CASE("norm coefficient") {
    CHECK(norm_coefficient(4, NSequence{{1, 2, 0, 0}}) == 1);
    CHECK(norm_coefficient(4, NSequence{{0, 3, 0, 1}}) == 2);
    CHECK(norm_coefficient(4, NSequence{{0, 0, 1, 3}}) == 1);
    CHECK_THROWS_AS(norm_coefficient(4, NSequence{{5, 0, 0, 0}}), std::domain_error);
}

TEST_CASE("generation oracle") {
    // bound below the smallest square length is vacuously true
    CHECK(brute_force_generation_check(make_type('D', 5), Rat{1, 2}));
    CHECK(brute_force_generation_check(make_type('A', 4), default_generation_bound(make_type('A', 4))));
    CHECK(brute_force_generation_check(make_type('D', 5), default_generation_bound(make_type('D', 5))));
    // dropping a generator must break generation
    LieType d5 = make_type('D', 5);
    std::vector<Weight> gens;
    for (const auto& e : hilbert_basis(d5).elements) gens.push_back(e.weight);
    gens.pop_back();
    CHECK_FALSE(generation_check(d5, gens, default_generation_bound(d5)));
}

TEST_CASE("budget errors carry partial counts") {
    try {
        hilbert_basis(make_type('A', 8), 10);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.partial_count >= 10);
    }
}
