#include "doctest.h"

#include "enlattice/branching.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace enlattice;

namespace {

// Sorted block ranks of a decomposition, cartan copies counted in.
std::vector<int> shape(const Decomposition& d) {
    std::vector<int> out;
    for (const auto& c : d.components) out.push_back(c.total_rank());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("branching") {

TEST_CASE("fixed line: every line verifies at every rank") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        for (const auto& l : enumerate_lines(lat)) {
            auto res = decompose_fixed_line(lat, l);
            REQUIRE(res.ok);
            REQUIRE(res.line_blocks.verified);
            REQUIRE(res.adjoint_blocks.verified);
        }
    }
}

TEST_CASE("fixed line: frozen block shapes at the last blowup class") {
    auto check = [](int n, std::vector<int> line_shape, std::vector<int> adj_shape) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto res = decompose_fixed_line(lat, class_L(lat, n));
        CHECK(shape(res.line_blocks) == line_shape);
        CHECK(shape(res.adjoint_blocks) == adj_shape);
    };
    check(3, {1, 2, 3}, {1, 3, 3, 4});
    check(4, {1, 3, 6}, {1, 6, 6, 11});
    check(5, {1, 5, 10}, {1, 10, 10, 24});
    check(6, {1, 10, 16}, {1, 16, 16, 45});
    check(7, {1, 1, 27, 27}, {1, 27, 27, 78});
    check(8, {3, 112, 133}, {3, 112, 133});
}

TEST_CASE("fixed line on X2: both orbit types decompose") {
    auto lat = make_lattice(2);
    auto blowup = decompose_fixed_line(lat, class_L(lat, 2));
    CHECK(blowup.ok);
    CHECK_FALSE(blowup.quadric_case);
    auto conic = decompose_fixed_line(lat, class_H(lat) - class_L(lat, 1) - class_L(lat, 2));
    CHECK(conic.ok);
    CHECK(conic.quadric_case);
    CHECK_THROWS_AS(decompose_fixed_line(lat, class_H(lat)), std::domain_error);
}

TEST_CASE("fixed ruling: sets, fibers, and dualities at every rank") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto rulings = enumerate_rulings(lat);
        // Spread a handful of representatives across the census.
        for (std::size_t i = 0; i < rulings.size(); i += std::max<std::size_t>(1, rulings.size() / 5)) {
            auto res = decompose_fixed_ruling(lat, rulings[i]);
            REQUIRE(res.ok);
            CHECK(res.w_classes.size() == static_cast<std::size_t>(2 * n - 2));
            if (n >= 2) {
                CHECK(res.s_plus.size() == (std::size_t{1} << (n - 2)));
                CHECK(res.s_minus.size() == (std::size_t{1} << (n - 2)));
            }
            CHECK(res.fibers.pairs.size() == static_cast<std::size_t>(n - 1));
            for (const auto& r : res.dualities) REQUIRE(r.ok);
            if (n <= 7) {
                REQUIRE(res.line_blocks.has_value());
                REQUIRE(res.line_blocks->verified);
                REQUIRE(res.ruling_blocks->verified);
                REQUIRE(res.adjoint_blocks->verified);
            } else {
                CHECK_FALSE(res.line_blocks.has_value());
            }
            auto cliff = clifford_check(lat, rulings[i]);
            CHECK(cliff.ok);
            CHECK(cliff.violations.empty());
        }
    }
}

TEST_CASE("fixed ruling: orthogonal subsystem types") {
    const char* expected[] = {"", "", "none", "A1xA1", "A3", "D4", "D5", "D6", "D7"};
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto res = decompose_fixed_ruling(lat, enumerate_rulings(lat).front());
        CHECK(res.d_sub.cartan_type == expected[n]);
    }
}

TEST_CASE("sections: both variants verify across ranks") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto R = enumerate_rulings(lat).front();
        auto ruling = decompose_fixed_ruling(lat, R);
        auto S = ruling.s_plus.front();
        auto plus = decompose_section(lat, R, S, false);
        REQUIRE(plus.ok);
        CHECK(plus.lambda.size() == static_cast<std::size_t>(n - 1));
        CHECK_FALSE(plus.minus_variant);
        auto T = ruling.s_minus.front();
        auto minus = decompose_section(lat, R, T, true);
        REQUIRE(minus.ok);
        CHECK(minus.minus_variant);
        // Lambda really is the set of fiber components meeting the section.
        for (const auto& c : plus.lambda) {
            CHECK(intersect(c, R) == 0);
            CHECK(intersect(c, S) == 1);
        }
        CHECK_THROWS_AS(decompose_section(lat, R, T, false), std::domain_error);
        CHECK_THROWS_AS(decompose_section(lat, R, S, true), std::domain_error);
    }
}

TEST_CASE("sections: subsystem fixing ruling and section") {
    const char* expected[] = {"", "", "none", "A1", "A2", "A3", "A4", "A5", "A6"};
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto R = enumerate_rulings(lat).front();
        auto S = decompose_fixed_ruling(lat, R).s_plus.front();
        CHECK(decompose_section(lat, R, S, false).a_sub.cartan_type == expected[n]);
    }
}

TEST_CASE("parity: the standard eight blowup classes") {
    auto lat = make_lattice(8);
    std::vector<DivisorClass> ls;
    for (int i = 1; i <= 8; ++i) ls.push_back(class_L(lat, i));
    auto res = decompose_parity_d8(lat, ls);
    REQUIRE(res.ok);
    CHECK(res.h_class == class_H(lat));
    CHECK(res.w_summands.size() == 16);
    CHECK(res.w_pairs.pairs.size() == 8);
    CHECK(res.even_roots.size() == 112);
    CHECK(res.spin_weights.size() == 128);
    CHECK(res.d_blocks.verified);
    CHECK(res.line_blocks.verified);
    CHECK(res.adjoint_blocks.verified);
}

TEST_CASE("parity: a Weyl-moved tuple works and bad tuples are rejected") {
    auto lat = make_lattice(8);
    auto sys = build_root_system(lat);
    auto r = class_H(lat) - class_L(lat, 1) - class_L(lat, 2) - class_L(lat, 3);
    std::vector<DivisorClass> ls;
    for (int i = 1; i <= 8; ++i) ls.push_back(reflect(class_L(lat, i), r));
    CHECK(decompose_parity_d8(lat, ls).ok);

    std::vector<DivisorClass> meeting = ls;
    meeting[0] = class_L(lat, 1); // meets the two reflected conics through point 1
    CHECK_THROWS_AS(decompose_parity_d8(lat, meeting), std::domain_error);
    std::vector<DivisorClass> seven(ls.begin(), ls.begin() + 7);
    CHECK_THROWS_AS(decompose_parity_d8(lat, seven), std::domain_error);
}

TEST_CASE("centralizer of a disjoint line pair on X8 is E7") {
    auto lat = make_lattice(8);
    auto sys = e7_centralizer(lat, class_L(lat, 7), class_L(lat, 8));
    CHECK(sys.cartan_type == "E7");
    CHECK(sys.roots.size() == 126);
    CHECK_THROWS_AS(e7_centralizer(lat, class_L(lat, 7), class_L(lat, 7)), std::domain_error);
}

TEST_CASE("named modules and spec validation reject bad input") {
    auto lat = make_lattice(6);
    CHECK_THROWS_AS(named_module(lat, "L5"), std::domain_error);
    CHECK_THROWS_AS(named_module(lat, "X6"), std::domain_error);
    CHECK_THROWS_AS(validate_spec(lat, SubalgebraSpec::fixed_line(class_H(lat))),
                    std::domain_error);
    CHECK_THROWS_AS(validate_spec(lat, SubalgebraSpec::fixed_ruling(class_L(lat, 1))),
                    std::domain_error);
    CHECK_NOTHROW(validate_spec(lat, SubalgebraSpec::fixed_line(class_L(lat, 1))));
}

TEST_CASE("small-n coincidences all verify") {
    auto checks = small_n_checks();
    CHECK(checks.size() == 5);
    std::set<std::string> ids;
    for (const auto& c : checks) {
        CAPTURE(c.id);
        CHECK(c.ok);
        ids.insert(c.id);
    }
    CHECK(ids.count("small-n/x2/ruling-shift") == 1);
    CHECK(ids.count("small-n/x3/product") == 1);
    CHECK(ids.count("small-n/x3/product-cremona") == 1);
    CHECK(ids.count("small-n/x4/root-ruling-differences") == 1);
    CHECK(ids.count("small-n/x4/cube-rulings") == 1);
}

TEST_CASE("degeneration label models all verify") {
    for (auto which : {DegenerationCase::X5TwoQuadrics, DegenerationCase::X6ThreePlanes,
                       DegenerationCase::X6PlaneQuadric, DegenerationCase::X7DoublePlane}) {
        auto rep = degeneration_counts(which);
        CAPTURE(rep.title);
        CHECK(rep.ok);
        for (const auto& id : rep.identities) {
            CAPTURE(id.id);
            CHECK(id.ok);
        }
    }
}

TEST_CASE("decomposition equality is a true multiset identity") {
    // Drop one weight from a verified decomposition and watch it fail.
    auto lat = make_lattice(4);
    auto res = decompose_fixed_line(lat, class_L(lat, 4));
    REQUIRE(res.ok);
    auto broken = res.line_blocks;
    REQUIRE_FALSE(broken.components.empty());
    REQUIRE_FALSE(broken.components.back().weights.empty());
    broken.components.back().weights.pop_back();
    CHECK_FALSE(verify_decomposition(broken));
}

} // TEST_SUITE
