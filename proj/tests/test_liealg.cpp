#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/liealg.hpp"

#include <random>

using namespace enlattice;

namespace {

LieElement random_basis(const LieAlgebra& alg, const std::vector<DivisorClass>& kperp,
                        std::mt19937_64& rng) {
    auto total = alg.system.roots.size() + kperp.size();
    auto pick = rng() % total;
    if (pick < alg.system.roots.size()) return alg.root_vector(static_cast<int>(pick));
    return alg.cartan_element(kperp[pick - alg.system.roots.size()]);
}

} // namespace

TEST_SUITE("liealg") {

TEST_CASE("cocycle: normalization, diagonal, and the commutation rule") {
    for (int n : {3, 5, 7, 8}) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto coc = build_cocycle(lat);
        auto roots = enumerate_roots(lat);
        for (std::size_t i = 0; i < roots.size(); i += 3) {
            const auto& a = roots[i];
            int diag = (intersect(a, a) / 2) % 2 == 0 ? 1 : -1;
            CHECK(coc.eval(a, a) == diag);
            for (std::size_t j = 0; j < roots.size(); j += 5) {
                const auto& b = roots[j];
                int swap = coc.eval(a, b) * coc.eval(b, a);
                int64_t e = intersect(a, b) + intersect(a, lat.K) * intersect(b, lat.K);
                CHECK(swap == (e % 2 == 0 ? 1 : -1));
                CHECK(coc.eval(a + b, a) == coc.eval(a, a) * coc.eval(b, a));
                CHECK(coc.eval(a, a + b) == coc.eval(a, a) * coc.eval(a, b));
            }
        }
    }
}

TEST_CASE("algebra dimensions") {
    const int dims[] = {0, 0, 4, 11, 24, 45, 78, 133, 248};
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto alg = build_lie_algebra(make_lattice(n));
        CHECK(alg.dim() == dims[n]);
        CHECK(alg.rank() == n + 1);
    }
}

TEST_CASE("bracket structure constants on root pairs") {
    auto lat = make_lattice(5);
    auto alg = build_lie_algebra(lat);
    const auto& roots = alg.system.roots;
    for (const auto& a : roots)
        for (const auto& b : roots) {
            auto br = bracket(alg, alg.root_vector(a), alg.root_vector(b));
            int64_t dot = intersect(a, b);
            if (a + b == DivisorClass::zero(5)) {
                // [x_a, x_{-a}] = h_a
                CHECK(br == alg.cartan_element(a));
            } else if (dot == 1) {
                auto expect = alg.root_vector(a + b);
                if (alg.cocycle.eval(a, b) < 0) expect *= Rational(-1);
                CHECK(br == expect);
            } else {
                CHECK(br.is_zero());
            }
        }
}

TEST_CASE("cartan acts diagonally and brackets to zero") {
    auto lat = make_lattice(6);
    auto alg = build_lie_algebra(lat);
    auto kperp = kperp_basis(lat);
    for (const auto& h : kperp)
        for (const auto& h2 : kperp)
            CHECK(bracket(alg, alg.cartan_element(h), alg.cartan_element(h2)).is_zero());
    for (const auto& h : kperp)
        for (std::size_t i = 0; i < alg.system.roots.size(); i += 7) {
            const auto& d = alg.system.roots[i];
            auto br = bracket(alg, alg.cartan_element(h), alg.root_vector(d));
            auto expect = alg.root_vector(d);
            expect *= Rational(intersect(h, d));
            CHECK(br == expect);
        }
    CHECK_THROWS_AS(alg.cartan_element(class_H(lat)), std::domain_error);
    CHECK_THROWS_AS(alg.root_vector(lat.K), std::domain_error);
}

TEST_CASE("jacobi identity is exact on the full basis at n = 3, 4") {
    for (int n : {3, 4}) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto alg = build_lie_algebra(lat);
        std::vector<LieElement> basis;
        for (std::size_t i = 0; i < alg.system.roots.size(); ++i)
            basis.push_back(alg.root_vector(static_cast<int>(i)));
        for (const auto& e : kperp_basis(lat)) basis.push_back(alg.cartan_element(e));
        REQUIRE(static_cast<int>(basis.size()) == alg.dim());
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    auto s = bracket(alg, bracket(alg, x, y), z);
                    s += bracket(alg, bracket(alg, y, z), x);
                    s += bracket(alg, bracket(alg, z, x), y);
                    REQUIRE(s.is_zero());
                }
    }
}

TEST_CASE("jacobi identity sampled at n = 7, 8") {
    for (int n : {7, 8}) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto alg = build_lie_algebra(lat);
        auto kperp = kperp_basis(lat);
        std::mt19937_64 rng(20240 + static_cast<unsigned>(n));
        for (int t = 0; t < 2000; ++t) {
            auto x = random_basis(alg, kperp, rng);
            auto y = random_basis(alg, kperp, rng);
            auto z = random_basis(alg, kperp, rng);
            auto s = bracket(alg, bracket(alg, x, y), z);
            s += bracket(alg, bracket(alg, y, z), x);
            s += bracket(alg, bracket(alg, z, x), y);
            REQUIRE(s.is_zero());
        }
    }
}

TEST_CASE("kappa is symmetric, invariant, and definite on the cartan") {
    auto lat = make_lattice(6);
    auto alg = build_lie_algebra(lat);
    auto kperp = kperp_basis(lat);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 500; ++t) {
        auto x = random_basis(alg, kperp, rng);
        auto y = random_basis(alg, kperp, rng);
        auto z = random_basis(alg, kperp, rng);
        CHECK(kappa(alg, x, y) == kappa(alg, y, x));
        CHECK(kappa(alg, bracket(alg, x, y), z) == kappa(alg, x, bracket(alg, y, z)));
    }
    // kappa on the cartan is the intersection form, which is negative
    // definite on K-perp.
    for (const auto& e : kperp) {
        CHECK(kappa(alg, alg.cartan_element(e), alg.cartan_element(e)) < Rational(0));
        CHECK(kappa(alg, alg.cartan_element(e), alg.cartan_element(e)) ==
              Rational(intersect(e, e)));
    }
}

TEST_CASE("opposite root vectors pair under kappa") {
    auto lat = make_lattice(5);
    auto alg = build_lie_algebra(lat);
    for (const auto& d : alg.system.roots) {
        auto v = kappa(alg, alg.root_vector(d), alg.root_vector(-d));
        CHECK(v != Rational(0));
        for (const auto& e : alg.system.roots)
            if (!(e == -d)) CHECK(kappa(alg, alg.root_vector(d), alg.root_vector(e)) == Rational(0));
    }
}

} // TEST_SUITE
