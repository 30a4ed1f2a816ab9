#include "doctest.h"

#include "enlattice/divisor.hpp"

#include <stdexcept>

using namespace enlattice;

TEST_SUITE("divisor") {

TEST_CASE("lattice construction and the canonical class") {
    for (int n = 0; n <= 10; ++n) {
        auto lat = make_lattice(n);
        CHECK(lat.n == n);
        CHECK(lat.rank() == n + 1);
        std::vector<int64_t> k(static_cast<std::size_t>(n) + 1, -1);
        k[0] = -3;
        CHECK(canonical_class(lat) == DivisorClass(k));
        CHECK(intersect(lat.K, lat.K) == 9 - n);
    }
    CHECK_THROWS_AS(make_lattice(-1), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(11), std::invalid_argument);
}

TEST_CASE("intersection form is diag(1, -1, ..., -1)") {
    auto lat = make_lattice(4);
    auto H = class_H(lat);
    CHECK(intersect(H, H) == 1);
    for (int i = 1; i <= 4; ++i) {
        auto Li = class_L(lat, i);
        CHECK(intersect(Li, Li) == -1);
        CHECK(intersect(H, Li) == 0);
        CHECK(intersect(Li, lat.K) == -1);
        for (int j = i + 1; j <= 4; ++j) CHECK(intersect(Li, class_L(lat, j)) == 0);
    }
    CHECK(intersect(H, lat.K) == -3);
    CHECK_THROWS_AS(class_L(lat, 0), std::invalid_argument);
    CHECK_THROWS_AS(class_L(lat, 5), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering") {
    auto lat = make_lattice(2);
    auto D = class_H(lat) - class_L(lat, 1) - class_L(lat, 2);
    CHECK(D == DivisorClass({1, 1, 1}));
    CHECK(intersect(D, D) == -1);
    CHECK(2 * D == D + D);
    CHECK(D * 2 == D + D);
    CHECK(-D == DivisorClass({-1, -1, -1}));
    CHECK(D - D == DivisorClass::zero(2));
    CHECK(D.str() == "[1,1,1]");
    CHECK(DivisorClass({0, 1, 0}) < DivisorClass({1, 0, 0}));
    CHECK_THROWS_AS(intersect(D, DivisorClass::zero(3)), std::invalid_argument);
}

TEST_CASE("K-orthogonal basis is integral with even self-intersections") {
    for (int n = 1; n <= 8; ++n) {
        auto lat = make_lattice(n);
        auto basis = kperp_basis(lat);
        CHECK(static_cast<int>(basis.size()) == n);
        for (const auto& e : basis) {
            CHECK(intersect(e, lat.K) == 0);
            CHECK(intersect(e, e) % 2 == 0);
        }
    }
}

} // TEST_SUITE
