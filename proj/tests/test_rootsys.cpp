#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/divisor.hpp"
#include "enlattice/rootsys.hpp"

#include <algorithm>

using namespace enlattice;

TEST_SUITE("rootsys") {

TEST_CASE("Dynkin types of the blowup base") {
    const char* expected[] = {"none", "none", "A1", "A2xA1", "A4", "D5", "E6", "E7", "E8"};
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        auto sys = build_root_system(make_lattice(n));
        CHECK(sys.cartan_type == expected[n]);
        CHECK(sys.roots == enumerate_roots(sys.lattice));
        CHECK(sys.cartan == cartan_matrix_of(sys.simple_roots));
        // At n = 2 the root sublattice is A1, one rank short of K-perp.
        int expected_rank = n < 2 ? 0 : (n == 2 ? 1 : n);
        CHECK(static_cast<int>(sys.simple_roots.size()) == expected_rank);
    }
}

TEST_CASE("Cartan matrices are symmetric with the right diagonal") {
    auto sys = build_root_system(make_lattice(7));
    for (int i = 0; i < sys.cartan.rank(); ++i) {
        CHECK(sys.cartan.entries[i][i] == 2);
        for (int j = 0; j < sys.cartan.rank(); ++j) {
            CHECK(sys.cartan.entries[i][j] == sys.cartan.entries[j][i]);
            if (i != j) CHECK((sys.cartan.entries[i][j] == 0 || sys.cartan.entries[i][j] == -1));
        }
    }
}

TEST_CASE("reflections are involutions preserving the form and K") {
    auto lat = make_lattice(6);
    auto sys = build_root_system(lat);
    auto lines = enumerate_lines(lat);
    for (const auto& r : sys.simple_roots) {
        CHECK(reflect(lat.K, r) == lat.K);
        for (const auto& l : lines) {
            auto im = reflect(l, r);
            CHECK(reflect(im, r) == l);
            CHECK(intersect(im, im) == -1);
            CHECK(intersect(im, lat.K) == -1);
        }
    }
    CHECK_THROWS_AS(reflect(lat.K, class_L(lat, 1)), std::domain_error);
}

TEST_CASE("weyl orbits of a root sweep the whole root census") {
    // The n = 3 system A2xA1 is disconnected, so its census splits into the
    // component orbits of sizes 6 and 2; every other rank is a single orbit.
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto sys = build_root_system(lat);
        if (n == 3) {
            std::vector<int64_t> a2{0, 1, -1, 0};
            std::vector<int64_t> a1{1, 1, 1, 1};
            auto long_orbit = weyl_orbit(DivisorClass(a2), sys);
            auto short_orbit = weyl_orbit(DivisorClass(a1), sys);
            CHECK(long_orbit.size() == 6);
            CHECK(short_orbit.size() == 2);
            std::vector<DivisorClass> both = long_orbit;
            both.insert(both.end(), short_orbit.begin(), short_orbit.end());
            std::sort(both.begin(), both.end());
            CHECK(both == sys.roots);
        } else {
            auto orbit = weyl_orbit(sys.simple_roots.front(), sys);
            CHECK(orbit == sys.roots);
        }
    }
}

TEST_CASE("weyl orbit of a line is the line census for n >= 3") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto sys = build_root_system(lat);
        CHECK(weyl_orbit(class_L(lat, 1), sys) == enumerate_lines(lat));
    }
}

TEST_CASE("on X2 the lines split into two orbits") {
    auto lat = make_lattice(2);
    auto sys = build_root_system(lat);
    auto conic = class_H(lat) - class_L(lat, 1) - class_L(lat, 2);
    auto blowups = weyl_orbit(class_L(lat, 1), sys);
    CHECK(blowups.size() == 2);
    CHECK(weyl_orbit(conic, sys) == std::vector<DivisorClass>{conic});
}

TEST_CASE("orbit caps throw instead of returning a partial orbit") {
    auto sys = build_root_system(make_lattice(6));
    CHECK_THROWS_AS(weyl_orbit(class_L(sys.lattice, 1), sys, 5), SearchTruncated);
}

TEST_CASE("weyl paths move their source to their target") {
    auto lat = make_lattice(6);
    auto sys = build_root_system(lat);
    auto from = class_L(lat, 1);
    auto lines = enumerate_lines(lat);
    for (std::size_t i = 0; i < lines.size(); i += 5) {
        auto word = weyl_path(sys, from, lines[i]);
        REQUIRE(word.has_value());
        auto cur = from;
        for (const auto& r : *word) cur = reflect(cur, r);
        CHECK(cur == lines[i]);
    }
    CHECK_FALSE(weyl_path(sys, from, lat.K).has_value());
    CHECK(weyl_path(sys, from, from)->empty());
}

TEST_CASE("weyl group orders by permutation closure") {
    const int64_t expected[] = {0, 0, 2, 12, 120, 1920, 51840};
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(weyl_group_order(build_root_system(make_lattice(n))) == expected[n]);
    }
    CHECK_THROWS_AS(weyl_group_order(build_root_system(make_lattice(7))), std::invalid_argument);
}

TEST_CASE("simple roots recovered from the full root list") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto sys = build_root_system(lat);
        auto base = simple_roots_of(lat, sys.roots);
        CHECK(base.size() == sys.simple_roots.size());
        CHECK(cartan_type_of(cartan_matrix_of(base)) == sys.cartan_type);
    }
}

} // TEST_SUITE
