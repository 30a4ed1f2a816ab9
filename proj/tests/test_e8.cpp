#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/liealg.hpp"

#include <algorithm>
#include <random>

using namespace enlattice;

namespace {

struct E8Fixture {
    PicardLattice lat = make_lattice(8);
    LieAlgebra alg = build_lie_algebra(lat);
    E8Parity p = build_e8_parity(alg);

    E8Element basis_element(std::size_t idx) const {
        E8Element e;
        e.d8 = alg.zero();
        auto kperp = kperp_basis(lat);
        if (idx < kperp.size()) {
            e.d8 = alg.cartan_element(kperp[idx]);
        } else if (idx < kperp.size() + p.even_roots.size()) {
            e.d8 = alg.root_vector(p.even_roots[idx - kperp.size()]);
        } else {
            e.spin[static_cast<int>(idx - kperp.size() - p.even_roots.size())] = Rational(1);
        }
        return e;
    }

    std::size_t basis_size() const { return 8 + p.even_roots.size() + p.spin_weights.size(); }

    bool is_zero(const E8Element& e) const { return e.d8.is_zero() && e.spin.empty(); }
};

E8Element add(E8Element a, const E8Element& b) {
    a.d8 += b.d8;
    for (const auto& [k, v] : b.spin) {
        auto it = a.spin.find(k);
        if (it == a.spin.end()) {
            a.spin[k] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) a.spin.erase(it);
        }
    }
    return a;
}

} // namespace

TEST_SUITE("e8") {

TEST_CASE("parity splits the roots and lines in half by H-degree") {
    E8Fixture f;
    CHECK(f.p.even_roots.size() == 112);
    CHECK(f.p.spin_weights.size() == 128);
    CHECK(f.basis_size() == 248);
    for (const auto& d : f.p.even_roots) CHECK(intersect(d, class_H(f.lat)) % 2 == 0);
    for (const auto& l : f.p.spin_weights) CHECK(intersect(l, class_H(f.lat)) % 2 == 0);
}

TEST_CASE("the spinor model root set equals the root census") {
    E8Fixture f;
    auto rs = e8_root_set(f.p);
    std::sort(rs.begin(), rs.end());
    CHECK(rs == enumerate_roots(f.lat));
}

TEST_CASE("the scalar spinor pairing is the unit triple-point matching") {
    E8Fixture f;
    const auto& w = f.p.spin_weights;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            std::map<int, Rational> u{{static_cast<int>(i), Rational(1)}};
            std::map<int, Rational> v{{static_cast<int>(j), Rational(1)}};
            auto sc = e8_spin_products(f.p, u, v).first;
            if (intersect(w[i], w[j]) == 3) {
                CHECK(w[i] + w[j] == -2 * f.lat.K);
                CHECK(sc == Rational(1));
            } else {
                CHECK(sc.is_zero());
            }
        }
}

TEST_CASE("gamma is antisymmetric and kappa-dual to the spin action") {
    E8Fixture f;
    std::mt19937_64 rng(8018);
    auto kperp = kperp_basis(f.lat);
    for (int t = 0; t < 400; ++t) {
        std::map<int, Rational> u{{static_cast<int>(rng() % 128), Rational(1)}};
        std::map<int, Rational> v{{static_cast<int>(rng() % 128), Rational(1)}};
        auto [s1, g1] = e8_spin_products(f.p, u, v);
        auto [s2, g2] = e8_spin_products(f.p, v, u);
        CHECK(s1 == s2);
        auto sum = g1;
        sum += g2;
        CHECK(sum.is_zero());
        // kappa(gamma(u,v), a) = scalar(a.u, v) for any even-part a.
        LieElement a = (rng() % 2) ? f.alg.root_vector(f.p.even_roots[rng() % 112])
                                   : f.alg.cartan_element(kperp[rng() % kperp.size()]);
        auto lhs = kappa(f.alg, g1, a);
        auto rhs = e8_spin_products(f.p, e8_spin_act(f.p, a, u), v).first;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the spin action is a module action for the even part") {
    E8Fixture f;
    std::mt19937_64 rng(512);
    auto kperp = kperp_basis(f.lat);
    auto draw = [&]() -> LieElement {
        if (rng() % 3 == 0) return f.alg.cartan_element(kperp[rng() % kperp.size()]);
        return f.alg.root_vector(f.p.even_roots[rng() % f.p.even_roots.size()]);
    };
    for (int t = 0; t < 2000; ++t) {
        auto a = draw(), b = draw();
        std::map<int, Rational> u{{static_cast<int>(rng() % 128), Rational(1)}};
        auto lhs = e8_spin_act(f.p, bracket(f.alg, a, b), u);
        auto rhs = e8_spin_act(f.p, a, e8_spin_act(f.p, b, u));
        for (const auto& [k, val] : e8_spin_act(f.p, b, e8_spin_act(f.p, a, u))) {
            auto it = rhs.find(k);
            if (it == rhs.end()) {
                rhs[k] = -val;
            } else {
                it->second -= val;
                if (it->second.is_zero()) rhs.erase(it);
            }
        }
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("jacobi holds for the reassembled bracket, sampled") {
    E8Fixture f;
    std::mt19937_64 rng(24824);
    for (int t = 0; t < 3000; ++t) {
        auto x = f.basis_element(rng() % f.basis_size());
        auto y = f.basis_element(rng() % f.basis_size());
        auto z = f.basis_element(rng() % f.basis_size());
        auto s = e8_bracket_via_d8(f.p, e8_bracket_via_d8(f.p, x, y), z);
        s = add(s, e8_bracket_via_d8(f.p, e8_bracket_via_d8(f.p, y, z), x));
        s = add(s, e8_bracket_via_d8(f.p, e8_bracket_via_d8(f.p, z, x), y));
        REQUIRE(f.is_zero(s));
    }
}

TEST_CASE("brackets of opposite spinors land in the even part") {
    E8Fixture f;
    const auto& w = f.p.spin_weights;
    for (std::size_t i = 0; i < w.size(); i += 7) {
        auto partner = -2 * f.lat.K - w[i];
        int j = f.p.spin_of(partner);
        REQUIRE(j >= 0);
        E8Element x, y;
        x.d8 = f.alg.zero();
        y.d8 = f.alg.zero();
        x.spin[static_cast<int>(i)] = Rational(1);
        y.spin[j] = Rational(1);
        auto br = e8_bracket_via_d8(f.p, x, y);
        CHECK(br.spin.empty());
        CHECK_FALSE(br.d8.is_zero());
    }
}

TEST_CASE("odd-parity even-part support is rejected") {
    E8Fixture f;
    DivisorClass odd_root = class_H(f.lat) - class_L(f.lat, 1) - class_L(f.lat, 2) -
                            class_L(f.lat, 3);
    REQUIRE(intersect(odd_root, class_H(f.lat)) % 2 != 0);
    E8Element x, y;
    x.d8 = f.alg.root_vector(odd_root);
    y.d8 = f.alg.zero();
    CHECK_THROWS_AS(e8_bracket_via_d8(f.p, x, y), std::domain_error);
}

} // TEST_SUITE
