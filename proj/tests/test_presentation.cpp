#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcenter/presentation.hpp"

using namespace qcenter;

namespace {

const MonoidGenerator& find_gen(const Presentation& p, const std::string& name) {
    for (const auto& g : p.generators)
        if (g.name == name) return g;
    throw std::runtime_error("missing generator " + name);
}

bool has_relation(const Presentation& p, const std::map<std::string, Int>& lhs,
                  const std::map<std::string, Int>& rhs) {
    for (const auto& rel : p.relations)
        if ((rel.lhs == lhs && rel.rhs == rhs) || (rel.lhs == rhs && rel.rhs == lhs))
            return true;
    return false;
}

} // namespace

TEST_CASE("polynomial classification") {
    CHECK(classify_polynomial(make_type('D', 6)));
    CHECK_FALSE(classify_polynomial(make_type('D', 5)));
    CHECK_FALSE(classify_polynomial(make_type('E', 6)));
    CHECK(classify_polynomial(make_type('E', 7)));
    CHECK(classify_polynomial(make_type('A', 1)));
    CHECK_FALSE(classify_polynomial(make_type('A', 2)));
    // polynomial iff the basis has exactly rank elements
    for (LieType t : {make_type('A', 3), make_type('B', 4), make_type('C', 5),
                      make_type('D', 7), make_type('G', 2), make_type('F', 4)})
        CHECK(classify_polynomial(t) == ((int)hilbert_basis(t).elements.size() == t.rank));
}

TEST_CASE("free presentations") {
    for (LieType t : {make_type('B', 3), make_type('C', 4), make_type('D', 6),
                      make_type('E', 7), make_type('G', 2), make_type('A', 1)}) {
        auto p = build_presentation(t);
        CHECK(p.is_polynomial);
        CHECK((int)p.generators.size() == t.rank);
        CHECK(p.relations.empty());
        CHECK(verify_soundness(p));
        CHECK(verify_completeness(p, p.completeness_bound));
    }
}

TEST_CASE("type A presentations") {
    auto a2 = build_presentation(make_type('A', 2));
    REQUIRE(a2.generators.size() == 3);
    CHECK(find_gen(a2, "x_1").element.weight == Weight{3, 0});
    CHECK(find_gen(a2, "x_2").element.weight == Weight{0, 3});
    CHECK(find_gen(a2, "y_2").element.weight == Weight{1, 1});
    CHECK(has_relation(a2, {{"x_1", 1}, {"x_2", 1}}, {{"y_2", 3}}));

    auto a3 = build_presentation(make_type('A', 3));
    REQUIRE(a3.generators.size() == 4);
    CHECK(has_relation(a3, {{"x_1", 1}, {"x_3", 1}}, {{"y_3", 2}}));

    auto a4 = build_presentation(make_type('A', 4));
    CHECK(a4.generators.size() == 14);
    CHECK(a4.relations.size() == 10);
    CHECK(has_relation(a4, {{"x_1", 3}, {"x_2", 1}}, {{"y_2", 5}}));
    // x_1 w = y_3^2 y_4 for the ordinary sequence (0,0,2,1): |t| = 10, norm = (2*2+1*1)/5 = 1
    Weight target = {0, 0, 2, 1};
    std::string wname;
    for (const auto& g : a4.generators)
        if (g.element.weight == target) wname = g.name;
    REQUIRE_FALSE(wname.empty());
    CHECK(has_relation(a4, {{"x_1", 1}, {wname, 1}}, {{"y_3", 2}, {"y_4", 1}}));

    for (auto* p : {&a2, &a3, &a4}) {
        CHECK(verify_soundness(*p));
        CHECK(verify_completeness(*p, p->completeness_bound));
    }
}

TEST_CASE("odd D presentations") {
    for (int n : {5, 7}) {
        auto p = build_presentation(make_type('D', n));
        CHECK_FALSE(p.is_polynomial);
        CHECK((int)p.generators.size() == n + 1);
        REQUIRE(p.relations.size() == 1);
        CHECK(has_relation(p, {{"t_" + std::to_string(n - 1), 1}, {"t_" + std::to_string(n), 1}},
                           {{"t_" + std::to_string(n + 1), 2}}));
        CHECK(verify_soundness(p));
        CHECK(verify_completeness(p, p.completeness_bound));
    }
}

TEST_CASE("E6 presentation") {
    auto p = build_presentation(make_type('E', 6));
    CHECK(p.generators.size() == 14);
    REQUIRE(p.relations.size() == 8);
    CHECK(find_gen(p, "t_1").element.weight == Weight{3, 0, 0, 0, 0, 0});
    CHECK(find_gen(p, "t_7").element.weight == Weight{1, 0, 1, 0, 0, 0});
    CHECK(has_relation(p, {{"t_1", 1}, {"t_3", 1}}, {{"t_7", 3}}));
    CHECK(has_relation(p, {{"t_8", 1}, {"t_9", 1}}, {{"t_7", 1}, {"t_10", 1}}));
    CHECK(has_relation(p, {{"t_7", 2}, {"t_8", 1}}, {{"t_1", 1}, {"t_14", 1}}));
    CHECK(verify_soundness(p));
    CHECK(verify_completeness(p, p.completeness_bound));
}

TEST_CASE("generator weights are exactly the basis") {
    for (LieType t : {make_type('A', 4), make_type('D', 5), make_type('E', 6),
                      make_type('B', 4)}) {
        auto p = build_presentation(t);
        std::set<Weight> from_pres, from_basis;
        for (const auto& g : p.generators) CHECK(from_pres.insert(g.element.weight).second);
        for (const auto& e : hilbert_basis(t).elements) from_basis.insert(e.weight);
        CHECK(from_pres == from_basis);
    }
}

TEST_CASE("negative controls") {
    auto a2 = build_presentation(make_type('A', 2));
    auto corrupted = a2;
    corrupted.relations[0].rhs.begin()->second += 1;
    CHECK_FALSE(verify_soundness(corrupted));

    auto stripped = a2;
    stripped.relations.clear();
    CHECK(verify_soundness(stripped));
    // 3lambda_1 + 3lambda_2 (weighted degree 9) factors as x_1 x_2 and as
    // y_2^3: disconnected without the relation
    CHECK_FALSE(verify_completeness(stripped, 9));
    auto counts = factorization_class_counts(stripped, 9);
    CHECK(counts.at(Weight{3, 3}) == 2);
    CHECK(counts.at(Weight{3, 0}) == 1);
}
