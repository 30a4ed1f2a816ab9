#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/divisor.hpp"

#include <algorithm>

using namespace enlattice;

TEST_SUITE("census") {

TEST_CASE("frozen counts for the three standing censuses") {
    const std::size_t lines[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    const std::size_t rulings[] = {0, 1, 2, 3, 5, 10, 27, 126, 2160};
    const std::size_t roots[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        CHECK(enumerate_lines(lat).size() == lines[n]);
        CHECK(enumerate_rulings(lat).size() == rulings[n]);
        CHECK(enumerate_roots(lat).size() == roots[n]);
    }
}

TEST_CASE("descent and reduction engines agree") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        for (auto [s, k] : {std::pair<int64_t, int64_t>{-1, -1}, {0, -2}, {-2, 0}, {-2, -2}}) {
            ClassQuery q{s, k, {}, {}};
            CHECK(enumerate_classes(lat, q, EnumEngine::Descent) ==
                  enumerate_classes(lat, q, EnumEngine::Reduction));
        }
    }
}

TEST_CASE("linear and parity constraints cut the census correctly") {
    auto lat = make_lattice(6);
    auto all = enumerate_lines(lat);
    auto R = class_H(lat) - class_L(lat, 1);

    ClassQuery meet{-1, -1, {{R, 1}}, {}};
    auto cut = enumerate_classes(lat, meet);
    std::vector<DivisorClass> expect;
    for (const auto& l : all)
        if (intersect(l, R) == 1) expect.push_back(l);
    CHECK(cut == expect);

    ClassQuery even{-1, -1, {}, std::pair<DivisorClass, int>{class_H(lat), 0}};
    auto evens = enumerate_classes(lat, even);
    expect.clear();
    for (const auto& l : all)
        if (intersect(l, class_H(lat)) % 2 == 0) expect.push_back(l);
    CHECK(evens == expect);
}

TEST_CASE("results are sorted and duplicate-free") {
    for (int n : {5, 7, 8}) {
        auto lat = make_lattice(n);
        for (const auto& v : {enumerate_lines(lat), enumerate_rulings(lat), enumerate_roots(lat)}) {
            CHECK(std::is_sorted(v.begin(), v.end()));
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        }
    }
}

TEST_CASE("provably infinite queries throw instead of truncating") {
    // K^2 = 0 at n = 9: the root condition has infinitely many solutions.
    auto lat9 = make_lattice(9);
    CHECK_THROWS_AS(enumerate_classes(lat9, ClassQuery{-2, 0, {}, {}}), UnboundedQuery);
    CHECK_THROWS_AS(enumerate_classes(lat9, ClassQuery{-2, 0, {}, {}}, EnumEngine::Reduction),
                    UnboundedQuery);
    // A pinned blowup coordinate makes the same query finite again.
    ClassQuery pinned{-2, 0, {{class_L(lat9, 9), 0}, {class_L(lat9, 8), 0}}, {}};
    pinned.linear_constraints.emplace_back(class_H(lat9), 0);
    auto sub = enumerate_classes(lat9, pinned, EnumEngine::Reduction);
    CHECK(sub.size() == 42); // differences L_i - L_j among the first seven: 7*6
}

TEST_CASE("singular fibers pair disjoint line components") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto rulings = enumerate_rulings(lat);
        auto fib = singular_fibers(lat, rulings.front());
        CHECK(fib.pairs.size() == static_cast<std::size_t>(n - 1));
        for (const auto& [a, b] : fib.pairs) {
            CHECK(a + b == rulings.front());
            CHECK(intersect(a, b) == 1);
            CHECK(intersect(a, a) == -1);
            CHECK(intersect(b, b) == -1);
        }
    }
    CHECK_THROWS_AS(singular_fibers(make_lattice(4), class_L(make_lattice(4), 1)),
                    std::invalid_argument);
}

TEST_CASE("involution pairings: counts and defining sums") {
    struct Row {
        const char* rule;
        int n;
        std::size_t count;
        int kmul;
        int64_t dot;
    };
    for (auto [rule, n, count, kmul, dot] : {Row{"bitangent", 7, 28, 1, 2},
                                             Row{"triple-point", 8, 120, 2, 3},
                                             Row{"ruling-dual", 5, 5, 1, 2}}) {
        CAPTURE(rule);
        auto lat = make_lattice(n);
        auto p = involution_pairs(lat, rule);
        CHECK(p.pairs.size() == count);
        for (const auto& [a, b] : p.pairs) {
            CHECK(a + b == -kmul * lat.K);
            CHECK(intersect(a, b) == dot);
        }
    }
    CHECK_THROWS_AS(involution_pairs(make_lattice(6), "bitangent"), std::invalid_argument);
    CHECK_THROWS_AS(involution_pairs(make_lattice(7), "no-such-rule"), std::invalid_argument);
}

TEST_CASE("repeated census calls return identical lists") {
    auto lat = make_lattice(8);
    auto a = enumerate_lines(lat);
    auto b = enumerate_lines(lat);
    CHECK(a == b);
    CHECK(a.size() == 240);
}

} // TEST_SUITE
