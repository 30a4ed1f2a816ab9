#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/liealg.hpp"

#include <array>
#include <random>

using namespace enlattice;

namespace {

struct Setup {
    PicardLattice lat;
    LieAlgebra alg;
    WeightModule mod;
};

Setup setup(int n, const char* name) {
    auto lat = make_lattice(n);
    auto alg = build_lie_algebra(lat);
    auto mod = build_module(alg, name);
    return {lat, alg, mod};
}

} // namespace

TEST_SUITE("forms") {

TEST_CASE("q5 is the symmetric unit pairing on dual ruling pairs") {
    auto [lat, alg, R5] = setup(5, "R5");
    for (const auto& a : R5.weights)
        for (const auto& b : R5.weights) {
            auto v = form_q5(alg, R5, basis_vector(R5, a), basis_vector(R5, b));
            CHECK(v == form_q5(alg, R5, basis_vector(R5, b), basis_vector(R5, a)));
            if (a + b == -1 * lat.K)
                CHECK((v == Rational(1) || v == Rational(-1)));
            else
                CHECK(v.is_zero());
        }
}

TEST_CASE("q7 is antisymmetric and supported on bitangent pairs") {
    auto [lat, alg, L7] = setup(7, "L7");
    int support = 0;
    for (const auto& a : L7.weights)
        for (const auto& b : L7.weights) {
            auto v = form_q7(alg, L7, basis_vector(L7, a), basis_vector(L7, b));
            auto w = form_q7(alg, L7, basis_vector(L7, b), basis_vector(L7, a));
            CHECK(v == -w);
            if (a + b == -1 * lat.K) {
                CHECK((v == Rational(1) || v == Rational(-1)));
                ++support;
            } else {
                CHECK(v.is_zero());
            }
        }
    CHECK(support == 56); // 28 pairs, both orders
}

TEST_CASE("c6 is symmetric and supported exactly on the 45 triangles") {
    auto [lat, alg, L6] = setup(6, "L6");
    const auto& w = L6.weights;
    const auto mk = -1 * lat.K;
    int support = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j < w.size(); ++j)
            for (std::size_t k = j; k < w.size(); ++k) {
                auto u = basis_vector(L6, w[i]), v = basis_vector(L6, w[j]),
                     x = basis_vector(L6, w[k]);
                auto val = form_c6(alg, L6, u, v, x);
                if (w[i] + w[j] + w[k] == mk) {
                    CHECK_FALSE(val.is_zero());
                    ++support;
                } else {
                    CHECK(val.is_zero());
                }
                CHECK(val == form_c6(alg, L6, v, u, x));
                CHECK(val == form_c6(alg, L6, x, v, u));
            }
    CHECK(support == 45);
}

TEST_CASE("forms reject the wrong module") {
    auto [lat, alg, L5] = setup(5, "L5");
    auto u = basis_vector(L5, L5.weights.front());
    CHECK_THROWS_AS(form_q5(alg, L5, u, u), std::domain_error);
}

TEST_CASE("invariance under the algebra action") {
    // Bilinear: g(xu, v) + g(u, xv) = 0, exhaustively over root vectors.
    {
        auto [lat, alg, R5] = setup(5, "R5");
        for (const auto& d : alg.system.roots) {
            auto x = alg.root_vector(d);
            for (const auto& a : R5.weights)
                for (const auto& b : R5.weights) {
                    auto u = basis_vector(R5, a), v = basis_vector(R5, b);
                    auto s = form_q5(alg, R5, act(alg, R5, x, u), v) +
                             form_q5(alg, R5, u, act(alg, R5, x, v));
                    REQUIRE(s.is_zero());
                }
        }
    }
    {
        auto [lat, alg, L7] = setup(7, "L7");
        std::mt19937_64 rng(4242);
        for (int t = 0; t < 20000; ++t) {
            auto x = alg.root_vector(static_cast<int>(rng() % alg.system.roots.size()));
            auto u = basis_vector(L7, L7.weights[rng() % L7.weights.size()]);
            auto v = basis_vector(L7, L7.weights[rng() % L7.weights.size()]);
            REQUIRE((form_q7(alg, L7, act(alg, L7, x, u), v) +
                     form_q7(alg, L7, u, act(alg, L7, x, v)))
                        .is_zero());
        }
    }
    // Trilinear derivation rule for c6, sampled.
    {
        auto [lat, alg, L6] = setup(6, "L6");
        std::mt19937_64 rng(363);
        for (int t = 0; t < 20000; ++t) {
            auto x = alg.root_vector(static_cast<int>(rng() % alg.system.roots.size()));
            auto u = basis_vector(L6, L6.weights[rng() % L6.weights.size()]);
            auto v = basis_vector(L6, L6.weights[rng() % L6.weights.size()]);
            auto w = basis_vector(L6, L6.weights[rng() % L6.weights.size()]);
            auto s = form_c6(alg, L6, act(alg, L6, x, u), v, w) +
                     form_c6(alg, L6, u, act(alg, L6, x, v), w) +
                     form_c6(alg, L6, u, v, act(alg, L6, x, w));
            REQUIRE(s.is_zero());
        }
    }
    // Quadrilinear derivation rule for f7, sampled on and off the support.
    {
        auto [lat, alg, L7] = setup(7, "L7");
        auto support = [&](std::mt19937_64& rng) {
            // Draw a support quadruple: a line, a triangle completion, and
            // the final class forced by the anticanonical sum.
            const auto& w = L7.weights;
            while (true) {
                auto a = w[rng() % w.size()], b = w[rng() % w.size()], c = w[rng() % w.size()];
                auto d = -2 * lat.K - a - b - c;
                if (L7.weight_of(d) >= 0) return std::array<DivisorClass, 4>{a, b, c, d};
            }
        };
        std::mt19937_64 rng(777);
        for (int t = 0; t < 4000; ++t) {
            std::array<DivisorClass, 4> q;
            if (t % 2 == 0) {
                q = support(rng);
            } else {
                const auto& w = L7.weights;
                q = {w[rng() % w.size()], w[rng() % w.size()], w[rng() % w.size()],
                     w[rng() % w.size()]};
            }
            auto x = alg.root_vector(static_cast<int>(rng() % alg.system.roots.size()));
            auto u = basis_vector(L7, q[0]), v = basis_vector(L7, q[1]),
                 y = basis_vector(L7, q[2]), z = basis_vector(L7, q[3]);
            auto s = form_f7(alg, L7, act(alg, L7, x, u), v, y, z) +
                     form_f7(alg, L7, u, act(alg, L7, x, v), y, z) +
                     form_f7(alg, L7, u, v, act(alg, L7, x, y), z) +
                     form_f7(alg, L7, u, v, y, act(alg, L7, x, z));
            REQUIRE(s.is_zero());
        }
    }
}

TEST_CASE("f7 is symmetric in all arguments on a probe slice") {
    auto [lat, alg, L7] = setup(7, "L7");
    const auto& w = L7.weights;
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        DivisorClass a = w[rng() % w.size()], b = w[rng() % w.size()], c = w[rng() % w.size()];
        auto d = -2 * lat.K - a - b - c;
        if (L7.weight_of(d) < 0) continue;
        auto u = basis_vector(L7, a), v = basis_vector(L7, b), x = basis_vector(L7, c),
             y = basis_vector(L7, d);
        auto base = form_f7(alg, L7, u, v, x, y);
        CHECK(base == form_f7(alg, L7, v, u, x, y));
        CHECK(base == form_f7(alg, L7, x, v, u, y));
        CHECK(base == form_f7(alg, L7, y, v, x, u));
        CHECK(base == form_f7(alg, L7, u, x, v, y));
        CHECK(base == form_f7(alg, L7, u, y, x, v));
        CHECK(base == form_f7(alg, L7, u, v, y, x));
    }
}

} // TEST_SUITE
