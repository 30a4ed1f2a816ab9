// Independent oracles.  Everything in this file recomputes its expected
// values from the raw definitions (coefficient arithmetic, brute-force scans,
// a local determinant), never through the code paths under test, so a bug in
// an engine cannot hide behind the same bug in the check.
#include "doctest.h"

#include "enlattice/census.hpp"
#include "enlattice/liealg.hpp"
#include "enlattice/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

using namespace enlattice;

namespace {

// Raw form values from the stored coefficients (a; b1..bn) of a H - sum b_i L_i.
int64_t raw_self(const std::vector<int64_t>& c) {
    int64_t s = c[0] * c[0];
    for (std::size_t i = 1; i < c.size(); ++i) s -= c[i] * c[i];
    return s;
}

int64_t raw_kdeg(const std::vector<int64_t>& c) {
    int64_t s = -3 * c[0];
    for (std::size_t i = 1; i < c.size(); ++i) s += c[i];
    return s;
}

// Every class with all coefficients in [-bound, bound] matching (s, k).
std::vector<DivisorClass> brute_census(int n, int64_t s, int64_t k, int64_t bound) {
    std::vector<DivisorClass> out;
    std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, -bound);
    while (true) {
        if (raw_self(c) == s && raw_kdeg(c) == k) out.emplace_back(c);
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = -bound;
        if (i == c.size()) break;
        ++c[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Fraction-free determinant, local to this file.
int64_t bareiss_det(std::vector<std::vector<int64_t>> m) {
    const std::size_t k = m.size();
    int64_t sign = 1, prev = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (m[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < k && m[p][i] == 0) ++p;
            if (p == k) return 0;
            std::swap(m[i], m[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r)
            for (std::size_t c = i + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return k == 0 ? 1 : sign * m[k - 1][k - 1];
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("brute-force censuses at small rank match both engines") {
    // Census coefficients stay well inside the bound at these ranks, so the
    // windowed scan sees the complete class set.
    const int64_t expected_lines[] = {0, 1, 3, 6, 10};
    const int64_t expected_rulings[] = {0, 1, 2, 3, 5};
    const int64_t expected_roots[] = {0, 0, 2, 8, 20};
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto lat = make_lattice(n);
        auto lines = brute_census(n, -1, -1, 8);
        auto rulings = brute_census(n, 0, -2, 8);
        auto roots = brute_census(n, -2, 0, 8);
        CHECK(static_cast<int64_t>(lines.size()) == expected_lines[n]);
        CHECK(static_cast<int64_t>(rulings.size()) == expected_rulings[n]);
        CHECK(static_cast<int64_t>(roots.size()) == expected_roots[n]);
        CHECK(lines == enumerate_lines(lat));
        CHECK(rulings == enumerate_rulings(lat));
        CHECK(roots == enumerate_roots(lat));
        CHECK(lines == enumerate_classes(lat, {-1, -1, {}, {}}, EnumEngine::Reduction));
        CHECK(roots == enumerate_classes(lat, {-2, 0, {}, {}}, EnumEngine::Reduction));
    }
}

TEST_CASE("census classes satisfy their defining equations recomputed raw") {
    for (int n = 5; n <= 8; ++n) {
        auto lat = make_lattice(n);
        for (const auto& l : enumerate_lines(lat)) {
            REQUIRE(raw_self(l.coeffs()) == -1);
            REQUIRE(raw_kdeg(l.coeffs()) == -1);
        }
        for (const auto& r : enumerate_roots(lat)) {
            REQUIRE(raw_self(r.coeffs()) == -2);
            REQUIRE(raw_kdeg(r.coeffs()) == 0);
        }
    }
}

TEST_CASE("2-gons on X7 by pair scan: 28") {
    auto lat = make_lattice(7);
    auto lines = enumerate_lines(lat);
    const auto mk = -1 * lat.K;
    int64_t by_sum = 0, by_dot = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] + lines[j] == mk) ++by_sum;
            if (intersect(lines[i], lines[j]) == 2) ++by_dot;
        }
    CHECK(by_sum == 28);
    CHECK(by_dot == 28); // meeting twice already forces the anticanonical sum
    CHECK(find_dgons(lat, 2).size() == 28);
}

TEST_CASE("3-gons on X6 by triple scan: 45") {
    auto lat = make_lattice(6);
    auto lines = enumerate_lines(lat);
    const auto mk = -1 * lat.K;
    int64_t by_sum = 0, by_dots = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (intersect(lines[i], lines[j]) != 1) continue;
            for (std::size_t k = j + 1; k < lines.size(); ++k) {
                if (intersect(lines[i], lines[k]) != 1) continue;
                if (intersect(lines[j], lines[k]) != 1) continue;
                ++by_dots;
                if (lines[i] + lines[j] + lines[k] == mk) ++by_sum;
            }
        }
    CHECK(by_dots == 45);
    CHECK(by_sum == 45); // pairwise meeting forces the anticanonical sum
    CHECK(find_dgons(lat, 3).size() == 45);
}

TEST_CASE("4-gons on X5 by quadruple scan: 40") {
    auto lat = make_lattice(5);
    auto lines = enumerate_lines(lat);
    const auto mk = -1 * lat.K;
    std::set<std::vector<DivisorClass>> quads;
    const std::size_t m = lines.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t l = k + 1; l < m; ++l) {
                    if (!(lines[i] + lines[j] + lines[k] + lines[l] == mk)) continue;
                    // A 4-cycle: two disjoint diagonal pairs, all other dots 1.
                    int64_t d[6] = {intersect(lines[i], lines[j]), intersect(lines[i], lines[k]),
                                    intersect(lines[i], lines[l]), intersect(lines[j], lines[k]),
                                    intersect(lines[j], lines[l]), intersect(lines[k], lines[l])};
                    std::multiset<int64_t> dots(d, d + 6);
                    if (dots != std::multiset<int64_t>{0, 0, 1, 1, 1, 1}) continue;
                    // The meeting graph is a 4-cycle exactly when the two
                    // disjoint pairs form a perfect matching of the indices.
                    const int pi[6] = {0, 0, 0, 1, 1, 2}, pj[6] = {1, 2, 3, 2, 3, 3};
                    int zero_degree[4] = {0, 0, 0, 0};
                    for (int t = 0; t < 6; ++t)
                        if (d[t] == 0) {
                            ++zero_degree[pi[t]];
                            ++zero_degree[pj[t]];
                        }
                    if (zero_degree[0] != 1 || zero_degree[1] != 1 || zero_degree[2] != 1 ||
                        zero_degree[3] != 1)
                        continue;
                    quads.insert({lines[i], lines[j], lines[k], lines[l]});
                }
    CHECK(quads.size() == 40);
    auto found = find_dgons(lat, 4);
    CHECK(found.size() == 40);
    std::set<std::vector<DivisorClass>> found_sets;
    for (auto g : found) {
        std::sort(g.begin(), g.end());
        found_sets.insert(g);
    }
    CHECK(found_sets == quads);
}

TEST_CASE("no d-gons above the forcing rank") {
    CHECK(find_dgons(make_lattice(6), 2).empty());
    CHECK(find_dgons(make_lattice(5), 3).empty());
    CHECK(find_dgons(make_lattice(4), 4).empty());
}

TEST_CASE("Cartan determinants from the blowup base") {
    // det of the Cartan matrix per rank, computed by a local elimination.
    const int64_t expected[] = {0, 0, 2, 6, 5, 4, 3, 2, 1};
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto sys = build_root_system(make_lattice(n));
        std::vector<std::vector<int64_t>> m;
        for (const auto& row : sys.cartan.entries)
            m.emplace_back(row.begin(), row.end());
        CHECK(bareiss_det(std::move(m)) == expected[n]);
    }
}

TEST_CASE("full quartic scan on X7: support is exactly the two stated cases") {
    auto lat = make_lattice(7);
    auto alg = build_lie_algebra(lat);
    auto L7 = build_module(alg, "L7");
    const auto& w = L7.weights;
    const std::size_t m = w.size();
    REQUIRE(m == 56);
    const auto target = -2 * lat.K;

    // Combinatorial route: distinct quadruples summing to -2K, classified by
    // their six pairwise dots.  The pairwise-meeting count splits by degree
    // pattern as 105 + 105 + 210 + 210.
    std::set<std::vector<std::size_t>> all_meet, two_pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t l = k + 1; l < m; ++l) {
                    if (!(w[i] + w[j] + w[k] + w[l] == target)) continue;
                    int64_t d[6] = {intersect(w[i], w[j]), intersect(w[i], w[k]),
                                    intersect(w[i], w[l]), intersect(w[j], w[k]),
                                    intersect(w[j], w[l]), intersect(w[k], w[l])};
                    std::multiset<int64_t> dots(d, d + 6);
                    if (dots == std::multiset<int64_t>{1, 1, 1, 1, 1, 1})
                        all_meet.insert({i, j, k, l});
                    else if (dots == std::multiset<int64_t>{0, 0, 1, 1, 2, 2})
                        two_pairs.insert({i, j, k, l});
                }
    CHECK(all_meet.size() == 630);
    CHECK(two_pairs.size() == 378);

    // Value route: evaluate the quartic on every index multiset and record
    // the nonzero ones.  Beyond the distinct quadruples, the only repeated
    // multisets that may carry a value are the squares of bitangent couples
    // {l, l, l', l'}; the sum rule 2a + c + d = -2K forces c = d = -K - a
    // there, so no other repetition pattern can contribute.
    std::set<std::vector<std::size_t>> nonzero, diagonal;
    std::vector<ModuleVec> basis;
    basis.reserve(m);
    for (const auto& x : w) basis.push_back(basis_vector(L7, x));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            for (std::size_t k = j; k < m; ++k)
                for (std::size_t l = k; l < m; ++l) {
                    auto val = form_f7(alg, L7, basis[i], basis[j], basis[k], basis[l]);
                    if (val.is_zero()) continue;
                    REQUIRE(w[i] + w[j] + w[k] + w[l] == target);
                    if (i == j) {
                        REQUIRE(k == l);
                        REQUIRE(j < k);
                        REQUIRE(w[k] == -lat.K - w[i]);
                        REQUIRE(val == Rational(-3));
                        diagonal.insert({i, k});
                    } else {
                        REQUIRE(j < k);
                        REQUIRE(k < l);
                        nonzero.insert({i, j, k, l});
                    }
                }
    CHECK(diagonal.size() == 28);
    std::set<std::vector<std::size_t>> expected = all_meet;
    expected.insert(two_pairs.begin(), two_pairs.end());
    CHECK(nonzero.size() == 1008);
    CHECK(nonzero == expected);
}

TEST_CASE("bilinear form Gram matrices are unimodular by local elimination") {
    // q5 on the 10 rulings of X5 and q7 on the 56 lines of X7.
    {
        auto lat = make_lattice(5);
        auto alg = build_lie_algebra(lat);
        auto R5 = build_module(alg, "R5");
        const std::size_t m = R5.weights.size();
        std::vector<std::vector<int64_t>> g(m, std::vector<int64_t>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                auto v = form_q5(alg, R5, basis_vector(R5, R5.weights[i]),
                                 basis_vector(R5, R5.weights[j]));
                REQUIRE(v.is_integer());
                g[i][j] = v.num();
            }
        auto d = bareiss_det(std::move(g));
        CHECK((d == 1 || d == -1));
    }
    {
        auto lat = make_lattice(7);
        auto alg = build_lie_algebra(lat);
        auto L7 = build_module(alg, "L7");
        const std::size_t m = L7.weights.size();
        std::vector<std::vector<int64_t>> g(m, std::vector<int64_t>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                auto v = form_q7(alg, L7, basis_vector(L7, L7.weights[i]),
                                 basis_vector(L7, L7.weights[j]));
                REQUIRE(v.is_integer());
                g[i][j] = v.num();
            }
        auto d = bareiss_det(std::move(g));
        CHECK((d == 1 || d == -1));
    }
}

} // TEST_SUITE
