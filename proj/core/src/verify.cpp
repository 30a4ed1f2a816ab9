#include "enlattice/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace enlattice {

namespace {

// Frozen census and dimension tables, indexed by n.  These are the anchor
// values everything else is cross-checked against; the engines must reproduce
// them, not the other way around.
constexpr int64_t kLines[9] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
constexpr int64_t kRulings[9] = {0, 1, 2, 3, 5, 10, 27, 126, 2160};
constexpr int64_t kRootCount[9] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
constexpr int64_t kDim[9] = {0, 1, 4, 11, 24, 45, 78, 133, 248};
constexpr int64_t kWeylOrder[7] = {0, 0, 2, 12, 120, 1920, 51840};

// Anticanonical d-gon counts at the first rank where they appear (n = 9-d).
constexpr int64_t kBitangentPairs = 28; // d=2, n=7
constexpr int64_t kTriangles = 45;      // d=3, n=6
constexpr int64_t kQuadrilaterals = 40; // d=4, n=5

// f7 support: 630 quadruples of pairwise meeting lines (by degree pattern,
// 105 + 105 + 210 + 210 for {3,1,1,1}, {0,2,2,2}, {1,1,2,2}, {0,1,2,3}) and
// 378 = C(28,2) unions of two bitangent couples, 1008 in total.
constexpr int64_t kF7Case1 = 630;
constexpr int64_t kF7Case2 = 378;

// Dynkin types of the two section subsystems, indexed by n.
const char* const kDType[9] = {"", "", "none", "A1xA1", "A3", "D4", "D5", "D6", "D7"};
const char* const kAType[9] = {"", "", "none", "A1", "A2", "A3", "A4", "A5", "A6"};

IdentityResult rec(std::string id, std::string label, int64_t lhs, int64_t rhs,
                   std::string detail = "") {
    IdentityResult r;
    r.id = std::move(id);
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ok = lhs == rhs;
    r.detail = std::move(detail);
    return r;
}

IdentityResult flag(std::string id, std::string label, bool ok, std::string detail = "") {
    return rec(std::move(id), std::move(label), ok ? 1 : 0, 1, std::move(detail));
}

std::string num(int64_t v) { return std::to_string(v); }

std::string tag(int n) { return "/n" + std::to_string(n); }

bool set_equal(std::vector<DivisorClass> a, std::vector<DivisorClass> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::mt19937_64 make_rng(const VerifyOptions& opt, uint64_t salt) {
    return std::mt19937_64(opt.seed * 0x9e3779b97f4a7c15ULL + salt);
}

int clamp_n(const VerifyOptions& opt) { return std::clamp(opt.n_max, 0, 8); }

// |det| by fraction-free (Bareiss) elimination; every division is exact, so
// integer matrices stay integer throughout.
int64_t det_abs(std::vector<std::vector<int64_t>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    int64_t prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = k;
        while (piv < n && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)] == 0)
            ++piv;
        if (piv == n) return 0;
        if (piv != k) std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(k)]);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                auto& row = a[static_cast<std::size_t>(i)];
                const auto& rk = a[static_cast<std::size_t>(k)];
                row[static_cast<std::size_t>(j)] =
                    (row[static_cast<std::size_t>(j)] * rk[static_cast<std::size_t>(k)] -
                     row[static_cast<std::size_t>(k)] * rk[static_cast<std::size_t>(j)]) /
                    prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    int64_t d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return d < 0 ? -d : d;
}

LieElement random_basis_element(const LieAlgebra& alg, const std::vector<DivisorClass>& kperp,
                                std::mt19937_64& rng) {
    const int nroots = static_cast<int>(alg.system.roots.size());
    std::uniform_int_distribution<int> pick(0, nroots + static_cast<int>(kperp.size()) - 1);
    int idx = pick(rng);
    if (idx < nroots) return alg.root_vector(idx);
    return alg.cartan_element(kperp[static_cast<std::size_t>(idx - nroots)]);
}

ModuleVec random_basis_vec(const WeightModule& m, const std::vector<DivisorClass>& kperp,
                           std::mt19937_64& rng) {
    const int nw = static_cast<int>(m.weights.size());
    std::uniform_int_distribution<int> pick(0, m.total_rank() - 1);
    int idx = pick(rng);
    if (idx < nw) return basis_vector(m, m.weights[static_cast<std::size_t>(idx)]);
    return zero_block_vector(m, kperp[static_cast<std::size_t>(idx - nw)]);
}

bool jacobi_holds(const LieAlgebra& alg, const LieElement& x, const LieElement& y,
                  const LieElement& z) {
    LieElement s = bracket(alg, bracket(alg, x, y), z);
    s += bracket(alg, bracket(alg, y, z), x);
    s += bracket(alg, bracket(alg, z, x), y);
    return s.is_zero();
}

// ---------------------------------------------------------------------------
// census

void suite_census(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    for (int n = 0; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        out.push_back(rec("census/lines" + tag(n), "line count on X" + std::to_string(n),
                          static_cast<int64_t>(enumerate_lines(lat).size()), kLines[n]));
        out.push_back(rec("census/rulings" + tag(n), "ruling count on X" + std::to_string(n),
                          static_cast<int64_t>(enumerate_rulings(lat).size()), kRulings[n]));
        out.push_back(rec("census/roots" + tag(n), "root count on X" + std::to_string(n),
                          static_cast<int64_t>(enumerate_roots(lat).size()), kRootCount[n]));
    }
    // The two engines must agree query by query, not just on totals.
    static const int64_t shapes[3][2] = {{-1, -1}, {0, -2}, {-2, 0}};
    static const char* const shape_name[3] = {"lines", "rulings", "roots"};
    for (int n = 2; n <= std::min(nmax, 6); ++n) {
        auto lat = make_lattice(n);
        for (int s = 0; s < 3; ++s) {
            ClassQuery q{shapes[s][0], shapes[s][1], {}, {}};
            auto a = enumerate_classes(lat, q, EnumEngine::Descent);
            auto b = enumerate_classes(lat, q, EnumEngine::Reduction);
            out.push_back(flag("census/engines/" + std::string(shape_name[s]) + tag(n),
                               "descent and reduction engines agree", a == b,
                               num(static_cast<int64_t>(a.size())) + " classes"));
        }
    }
    // Constrained queries: the engine answer must match a direct filter of
    // the unconstrained census.
    for (int n : {4, 6}) {
        if (n > nmax) continue;
        auto lat = make_lattice(n);
        DivisorClass R = class_H(n) - class_L(n, 1);
        ClassQuery q{-1, -1, {{R, 1}}, {}};
        auto direct = enumerate_classes(lat, q);
        std::vector<DivisorClass> filtered;
        for (const auto& l : enumerate_lines(lat))
            if (intersect(l, R) == 1) filtered.push_back(l);
        out.push_back(flag("census/constrained" + tag(n),
                           "constrained query equals filtered census", direct == filtered,
                           num(static_cast<int64_t>(direct.size())) + " classes"));
    }
}

// ---------------------------------------------------------------------------
// dimensions

void suite_dimensions(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto alg = build_lie_algebra(lat);
        out.push_back(rec("dim/algebra" + tag(n), "dim of the fiber algebra at n=" + num(n),
                          alg.dim(), kDim[n]));
        out.push_back(rec("dim/adjoint-module" + tag(n),
                          "adjoint weight module rank equals the algebra dimension",
                          named_module(lat, "LE" + std::to_string(n)).total_rank(), kDim[n]));
    }
    if (nmax >= 7) {
        auto lat = make_lattice(7);
        out.push_back(rec("dim/r7-anchor", "R7 is the 133 of n=7",
                          named_module(lat, "R7").total_rank(), 133));
    }
    if (nmax >= 8) {
        auto lat = make_lattice(8);
        out.push_back(rec("dim/l8-anchor", "L8 is the 248 of n=8",
                          named_module(lat, "L8").total_rank(), 248));
    }
}

// ---------------------------------------------------------------------------
// jacobi

void suite_jacobi(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    auto rng = make_rng(opt, 3);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto alg = build_lie_algebra(lat);
        auto kperp = kperp_basis(lat);
        const int nr = static_cast<int>(alg.system.roots.size());

        int64_t anti_fails = 0;
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nr; ++j) {
                LieElement s = bracket(alg, alg.root_vector(i), alg.root_vector(j));
                s += bracket(alg, alg.root_vector(j), alg.root_vector(i));
                if (!s.is_zero()) ++anti_fails;
            }
        out.push_back(rec("jacobi/antisymmetry" + tag(n),
                          "bracket is antisymmetric on all ordered root pairs", anti_fails, 0,
                          num(int64_t(nr) * nr) + " pairs"));

        const bool exhaustive = n <= 5 || (opt.exhaustive && n <= 6);
        int64_t fails = 0;
        int64_t evals = 0;
        if (exhaustive) {
            for (int i = 0; i < nr; ++i)
                for (int j = 0; j < nr; ++j)
                    for (int k = 0; k < nr; ++k) {
                        ++evals;
                        if (!jacobi_holds(alg, alg.root_vector(i), alg.root_vector(j),
                                          alg.root_vector(k)))
                            ++fails;
                    }
        } else {
            std::uniform_int_distribution<int> pick(0, nr - 1);
            for (int64_t s = 0; s < opt.samples; ++s) {
                ++evals;
                if (!jacobi_holds(alg, alg.root_vector(pick(rng)), alg.root_vector(pick(rng)),
                                  alg.root_vector(pick(rng))))
                    ++fails;
            }
        }
        out.push_back(rec("jacobi/identity" + tag(n), "Jacobi identity on root-vector triples",
                          fails, 0,
                          num(evals) + (exhaustive ? " triples, exhaustive" : " sampled triples")));

        int64_t kappa_fails = 0;
        const int64_t ks = std::min<int64_t>(opt.samples, 2000);
        for (int64_t s = 0; s < ks; ++s) {
            LieElement x = random_basis_element(alg, kperp, rng);
            LieElement y = random_basis_element(alg, kperp, rng);
            LieElement z = random_basis_element(alg, kperp, rng);
            if (kappa(alg, bracket(alg, x, y), z) != kappa(alg, x, bracket(alg, y, z)))
                ++kappa_fails;
        }
        out.push_back(rec("jacobi/kappa-invariance" + tag(n),
                          "kappa([x,y],z) = kappa(x,[y,z]) on sampled triples", kappa_fails, 0,
                          num(ks) + " samples"));
    }
}

// ---------------------------------------------------------------------------
// modules

void suite_modules(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    auto rng = make_rng(opt, 4);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto alg = build_lie_algebra(lat);
        auto kperp = kperp_basis(lat);
        std::vector<std::string> names = {"L" + std::to_string(n)};
        if (n <= 7) names.push_back("R" + std::to_string(n));
        for (const auto& name : names) {
            auto m = build_module(alg, name);
            int64_t expect = name[0] == 'L' ? kLines[n] + (n == 8 ? 8 : 0)
                                            : kRulings[n] + (n == 7 ? 7 : 0);
            out.push_back(rec("modules/rank/" + name, "total rank of " + name, m.total_rank(),
                              expect));
            auto census = named_module(lat, name);
            out.push_back(flag("modules/weights/" + name,
                               name + " weight set matches the census module",
                               m.weights == census.weights && m.cartan_mult == census.cartan_mult));

            int64_t fails = 0;
            const int64_t ss = std::min<int64_t>(opt.samples, 2000);
            for (int64_t s = 0; s < ss; ++s) {
                LieElement x = random_basis_element(alg, kperp, rng);
                LieElement y = random_basis_element(alg, kperp, rng);
                ModuleVec v = random_basis_vec(m, kperp, rng);
                ModuleVec lhs = act(alg, m, bracket(alg, x, y), v);
                ModuleVec rhs = act(alg, m, x, act(alg, m, y, v));
                rhs -= act(alg, m, y, act(alg, m, x, v));
                if (!(lhs == rhs)) ++fails;
            }
            out.push_back(rec("modules/action-axiom/" + name,
                              "[x,y]v = x(yv) - y(xv) on sampled triples for " + name, fails, 0,
                              num(ss) + " samples"));
        }
        if (n <= 7) {
            auto Ln = build_module(alg, "L" + std::to_string(n));
            auto Rn = build_module(alg, "R" + std::to_string(n));
            int64_t fails = 0;
            const int64_t ss = std::min<int64_t>(opt.samples, 2000);
            for (int64_t s = 0; s < ss; ++s) {
                LieElement x = random_basis_element(alg, kperp, rng);
                ModuleVec u = random_basis_vec(Ln, kperp, rng);
                ModuleVec v = random_basis_vec(Ln, kperp, rng);
                ModuleVec lhs = act(alg, Rn, x, cn_product(alg, Ln, Rn, u, v));
                ModuleVec rhs = cn_product(alg, Ln, Rn, act(alg, Ln, x, u), v);
                rhs += cn_product(alg, Ln, Rn, u, act(alg, Ln, x, v));
                if (!(lhs == rhs)) ++fails;
            }
            out.push_back(rec("modules/product-equivariance" + tag(n),
                              "x(u*v) = (xu)*v + u*(xv) for the line product", fails, 0,
                              num(ss) + " samples"));
        }
    }
}

// ---------------------------------------------------------------------------
// forms

using BilinearForm = Rational (*)(const LieAlgebra&, const WeightModule&, const ModuleVec&,
                                  const ModuleVec&);

void bilinear_form_records(const std::string& prefix, const LieAlgebra& alg,
                           const WeightModule& m, BilinearForm form, bool antisym,
                           std::vector<IdentityResult>& out) {
    const auto& K = alg.system.lattice.K;
    const int nw = static_cast<int>(m.weights.size());
    std::vector<ModuleVec> basis;
    basis.reserve(static_cast<std::size_t>(nw));
    for (const auto& w : m.weights) basis.push_back(basis_vector(m, w));

    std::vector<std::vector<int64_t>> gram(static_cast<std::size_t>(nw),
                                           std::vector<int64_t>(static_cast<std::size_t>(nw)));
    int64_t non_integer = 0;
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j) {
            Rational v = form(alg, m, basis[static_cast<std::size_t>(i)],
                              basis[static_cast<std::size_t>(j)]);
            if (!v.is_integer()) ++non_integer;
            else gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.num();
        }
    out.push_back(rec(prefix + "/integral", "all Gram entries are integers", non_integer, 0));

    int64_t sym_fails = 0;
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j) {
            int64_t a = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            int64_t b = gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a != (antisym ? -b : b)) ++sym_fails;
        }
    out.push_back(rec(prefix + (antisym ? "/antisymmetric" : "/symmetric"),
                      std::string("Gram matrix is ") + (antisym ? "antisymmetric" : "symmetric"),
                      sym_fails, 0));

    // Support must be the perfect matching w' = -K - w with unit values.
    int64_t matching_fails = 0;
    for (int i = 0; i < nw; ++i) {
        int partner = m.weight_of(DivisorClass::zero(m.lattice.n) - K -
                                  m.weights[static_cast<std::size_t>(i)]);
        for (int j = 0; j < nw; ++j) {
            int64_t v = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (j == partner ? (v != 1 && v != -1) : v != 0) ++matching_fails;
        }
    }
    out.push_back(rec(prefix + "/matching",
                      "support is the perfect matching w' = -K - w with values +-1",
                      matching_fails, 0, num(nw) + " weights"));
    out.push_back(rec(prefix + "/unimodular", "|det| of the Gram matrix", det_abs(gram), 1));

    // Infinitesimal invariance, exhaustively over the algebra basis.
    int64_t inv_fails = 0;
    auto kperp = kperp_basis(m.lattice);
    std::vector<LieElement> gens;
    for (int d = 0; d < static_cast<int>(alg.system.roots.size()); ++d)
        gens.push_back(alg.root_vector(d));
    for (const auto& e : kperp) gens.push_back(alg.cartan_element(e));
    for (const auto& x : gens)
        for (int i = 0; i < nw; ++i)
            for (int j = i; j < nw; ++j) {
                Rational v = form(alg, m, act(alg, m, x, basis[static_cast<std::size_t>(i)]),
                                  basis[static_cast<std::size_t>(j)]) +
                             form(alg, m, basis[static_cast<std::size_t>(i)],
                                  act(alg, m, x, basis[static_cast<std::size_t>(j)]));
                if (!v.is_zero()) ++inv_fails;
            }
    out.push_back(rec(prefix + "/invariance",
                      "q(xu,v) + q(u,xv) = 0 for every basis x and weight pair", inv_fails, 0,
                      num(static_cast<int64_t>(gens.size()) * nw * (nw + 1) / 2) + " checks"));
}

// Unordered weight-index quadruples summing to target, found through pair
// sums; exact and much cheaper than the quartic scan.
std::set<std::array<int, 4>> quadruples_summing_to(const std::vector<DivisorClass>& w,
                                                   const DivisorClass& target) {
    std::map<DivisorClass, std::vector<std::pair<int, int>>> by_sum;
    const int nw = static_cast<int>(w.size());
    for (int i = 0; i < nw; ++i)
        for (int j = i + 1; j < nw; ++j)
            by_sum[w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)]].push_back(
                {i, j});
    std::set<std::array<int, 4>> out;
    for (const auto& [s, ps] : by_sum) {
        auto it = by_sum.find(target - s);
        if (it == by_sum.end()) continue;
        for (auto [i, j] : ps)
            for (auto [k, l] : it->second) {
                if (i == k || i == l || j == k || j == l) continue;
                std::array<int, 4> q{i, j, k, l};
                std::sort(q.begin(), q.end());
                out.insert(q);
            }
    }
    return out;
}

// 1 = all six mutual intersections are 1; 2 = two disjoint bitangent couples
// (intersection multiset {2,2,1,1,0,0}); 0 = neither.
int f7_case_of(const std::vector<DivisorClass>& w, const std::array<int, 4>& q) {
    static const int pa[6] = {0, 0, 0, 1, 1, 2};
    static const int pb[6] = {1, 2, 3, 2, 3, 3};
    std::array<int64_t, 6> p{};
    for (int t = 0; t < 6; ++t)
        p[static_cast<std::size_t>(t)] =
            intersect(w[static_cast<std::size_t>(q[static_cast<std::size_t>(pa[t])])],
                      w[static_cast<std::size_t>(q[static_cast<std::size_t>(pb[t])])]);
    std::array<int64_t, 6> s = p;
    std::sort(s.begin(), s.end());
    if (s == std::array<int64_t, 6>{1, 1, 1, 1, 1, 1}) return 1;
    if (s == std::array<int64_t, 6>{0, 0, 1, 1, 2, 2}) {
        int t1 = -1, t2 = -1;
        for (int t = 0; t < 6; ++t)
            if (p[static_cast<std::size_t>(t)] == 2) (t1 < 0 ? t1 : t2) = t;
        bool disjoint = pa[t1] != pa[t2] && pa[t1] != pb[t2] && pb[t1] != pa[t2] &&
                        pb[t1] != pb[t2];
        return disjoint ? 2 : 0;
    }
    return 0;
}

void suite_forms(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    auto rng = make_rng(opt, 5);

    if (nmax >= 5) {
        auto alg = build_lie_algebra(make_lattice(5));
        auto m = build_module(alg, "R5");
        bilinear_form_records("forms/q5", alg, m, &form_q5, false, out);
    }

    if (nmax >= 6) {
        auto lat = make_lattice(6);
        auto alg = build_lie_algebra(lat);
        auto m = build_module(alg, "L6");
        auto kperp = kperp_basis(lat);
        const auto& K = lat.K;
        const int nw = static_cast<int>(m.weights.size());
        std::vector<ModuleVec> basis;
        for (const auto& w : m.weights) basis.push_back(basis_vector(m, w));

        // Support: nonzero exactly on distinct triples summing to -K, on all
        // index triples with repetition allowed.
        std::vector<std::array<int, 3>> support;
        int64_t support_fails = 0;
        for (int i = 0; i < nw; ++i)
            for (int j = i; j < nw; ++j)
                for (int k = j; k < nw; ++k) {
                    bool anti = m.weights[static_cast<std::size_t>(i)] +
                                        m.weights[static_cast<std::size_t>(j)] +
                                        m.weights[static_cast<std::size_t>(k)] ==
                                    DivisorClass::zero(6) - K;
                    Rational v = form_c6(alg, m, basis[static_cast<std::size_t>(i)],
                                         basis[static_cast<std::size_t>(j)],
                                         basis[static_cast<std::size_t>(k)]);
                    if (v.is_zero() == anti) ++support_fails;
                    if (anti && !v.is_zero()) support.push_back({i, j, k});
                }
        out.push_back(rec("forms/c6/support-rule",
                          "c6 is nonzero exactly on triples summing to -K", support_fails, 0));
        out.push_back(rec("forms/c6/support-count", "number of anticanonical triangles",
                          static_cast<int64_t>(support.size()), kTriangles));

        // The support triangles are exactly the 3-gons of the incidence graph.
        std::set<std::vector<DivisorClass>> gons;
        for (auto g : find_dgons(lat, 3)) {
            std::sort(g.begin(), g.end());
            gons.insert(g);
        }
        std::set<std::vector<DivisorClass>> sup;
        for (const auto& t : support) {
            std::vector<DivisorClass> v = {m.weights[static_cast<std::size_t>(t[0])],
                                           m.weights[static_cast<std::size_t>(t[1])],
                                           m.weights[static_cast<std::size_t>(t[2])]};
            std::sort(v.begin(), v.end());
            sup.insert(v);
        }
        out.push_back(flag("forms/c6/support-is-triangles",
                           "c6 support equals the 3-gon list", gons == sup));

        int64_t sym_fails = 0;
        for (const auto& t : support) {
            std::array<int, 3> p = t;
            std::sort(p.begin(), p.end());
            Rational ref = form_c6(alg, m, basis[static_cast<std::size_t>(p[0])],
                                   basis[static_cast<std::size_t>(p[1])],
                                   basis[static_cast<std::size_t>(p[2])]);
            do {
                Rational v = form_c6(alg, m, basis[static_cast<std::size_t>(p[0])],
                                     basis[static_cast<std::size_t>(p[1])],
                                     basis[static_cast<std::size_t>(p[2])]);
                if (v != ref) ++sym_fails;
            } while (std::next_permutation(p.begin(), p.end()));
        }
        out.push_back(rec("forms/c6/symmetric", "c6 agrees on all argument orderings", sym_fails,
                          0));

        // Derivation rule, exhaustively on support x roots plus random triples.
        int64_t inv_fails = 0;
        int64_t inv_checks = 0;
        std::vector<LieElement> gens;
        for (int d = 0; d < static_cast<int>(alg.system.roots.size()); ++d)
            gens.push_back(alg.root_vector(d));
        for (const auto& e : kperp) gens.push_back(alg.cartan_element(e));
        auto derivation_zero = [&](const LieElement& x, const ModuleVec& u, const ModuleVec& v,
                                   const ModuleVec& w) {
            Rational s = form_c6(alg, m, act(alg, m, x, u), v, w);
            s += form_c6(alg, m, u, act(alg, m, x, v), w);
            s += form_c6(alg, m, u, v, act(alg, m, x, w));
            return s.is_zero();
        };
        for (const auto& x : gens)
            for (const auto& t : support) {
                ++inv_checks;
                if (!derivation_zero(x, basis[static_cast<std::size_t>(t[0])],
                                     basis[static_cast<std::size_t>(t[1])],
                                     basis[static_cast<std::size_t>(t[2])]))
                    ++inv_fails;
            }
        std::uniform_int_distribution<int> pw(0, nw - 1);
        std::uniform_int_distribution<int> pg(0, static_cast<int>(gens.size()) - 1);
        for (int64_t s = 0; s < opt.samples; ++s) {
            ++inv_checks;
            if (!derivation_zero(gens[static_cast<std::size_t>(pg(rng))],
                                 basis[static_cast<std::size_t>(pw(rng))],
                                 basis[static_cast<std::size_t>(pw(rng))],
                                 basis[static_cast<std::size_t>(pw(rng))]))
                ++inv_fails;
        }
        out.push_back(rec("forms/c6/invariance", "c6 derivation rule vanishes", inv_fails, 0,
                          num(inv_checks) + " checks"));
    }

    if (nmax >= 7) {
        auto lat = make_lattice(7);
        auto alg = build_lie_algebra(lat);
        auto m = build_module(alg, "L7");
        auto kperp = kperp_basis(lat);
        bilinear_form_records("forms/q7", alg, m, &form_q7, true, out);

        const auto& K = lat.K;
        const int nw = static_cast<int>(m.weights.size());
        std::vector<ModuleVec> basis;
        for (const auto& w : m.weights) basis.push_back(basis_vector(m, w));

        const DivisorClass target = DivisorClass::zero(7) - 2 * K;
        auto support = quadruples_summing_to(m.weights, target);
        int64_t case1 = 0, case2 = 0, case_other = 0, zero_on_support = 0;
        std::set<std::string> values;
        for (const auto& q : support) {
            int c = f7_case_of(m.weights, q);
            if (c == 1) ++case1;
            else if (c == 2) ++case2;
            else ++case_other;
            Rational v = form_f7(alg, m, basis[static_cast<std::size_t>(q[0])],
                                 basis[static_cast<std::size_t>(q[1])],
                                 basis[static_cast<std::size_t>(q[2])],
                                 basis[static_cast<std::size_t>(q[3])]);
            if (v.is_zero()) ++zero_on_support;
            else values.insert(v.str());
        }
        std::string vals;
        for (const auto& v : values) vals += (vals.empty() ? "" : ",") + v;
        out.push_back(rec("forms/f7/case1-count", "quadruples of pairwise meeting lines", case1,
                          kF7Case1));
        out.push_back(rec("forms/f7/case2-count", "pairs of bitangent couples", case2, kF7Case2));
        out.push_back(rec("forms/f7/support-cases",
                          "every anticanonical quadruple is one of the two cases", case_other, 0,
                          num(static_cast<int64_t>(support.size())) + " quadruples"));
        out.push_back(rec("forms/f7/nonzero-on-support", "f7 does not vanish on its support",
                          zero_on_support, 0, "values {" + vals + "}"));

        // Off-support vanishing: exhaustive quartic scan on request, sampled
        // otherwise.
        int64_t off_fails = 0;
        int64_t off_checks = 0;
        if (opt.exhaustive) {
            for (int i = 0; i < nw; ++i)
                for (int j = i + 1; j < nw; ++j)
                    for (int k = j + 1; k < nw; ++k)
                        for (int l = k + 1; l < nw; ++l) {
                            bool in_support = support.count({i, j, k, l}) > 0;
                            Rational v =
                                form_f7(alg, m, basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)],
                                        basis[static_cast<std::size_t>(k)],
                                        basis[static_cast<std::size_t>(l)]);
                            ++off_checks;
                            if (v.is_zero() == in_support) ++off_fails;
                        }
        } else {
            std::uniform_int_distribution<int> pw(0, nw - 1);
            while (off_checks < opt.samples) {
                std::array<int, 4> q{pw(rng), pw(rng), pw(rng), pw(rng)};
                std::sort(q.begin(), q.end());
                if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]) continue;
                ++off_checks;
                bool in_support = support.count(q) > 0;
                Rational v = form_f7(alg, m, basis[static_cast<std::size_t>(q[0])],
                                     basis[static_cast<std::size_t>(q[1])],
                                     basis[static_cast<std::size_t>(q[2])],
                                     basis[static_cast<std::size_t>(q[3])]);
                if (v.is_zero() == in_support) ++off_fails;
            }
        }
        out.push_back(rec("forms/f7/support-rule",
                          "f7 vanishes exactly off the anticanonical quadruples", off_fails, 0,
                          num(off_checks) + (opt.exhaustive ? " quadruples, exhaustive"
                                                            : " sampled quadruples")));

        // Symmetry on a slice of support plus random quadruples.
        int64_t sym_fails = 0;
        {
            std::vector<std::array<int, 4>> probe(support.begin(), support.end());
            std::uniform_int_distribution<int> pw(0, nw - 1);
            for (int64_t s = 0; s < 50; ++s)
                probe.push_back({pw(rng), pw(rng), pw(rng), pw(rng)});
            for (std::size_t pi = 0; pi < probe.size(); pi += (probe.size() / 64 + 1)) {
                std::array<int, 4> p = probe[pi];
                std::sort(p.begin(), p.end());
                Rational ref = form_f7(alg, m, basis[static_cast<std::size_t>(p[0])],
                                       basis[static_cast<std::size_t>(p[1])],
                                       basis[static_cast<std::size_t>(p[2])],
                                       basis[static_cast<std::size_t>(p[3])]);
                do {
                    Rational v = form_f7(alg, m, basis[static_cast<std::size_t>(p[0])],
                                         basis[static_cast<std::size_t>(p[1])],
                                         basis[static_cast<std::size_t>(p[2])],
                                         basis[static_cast<std::size_t>(p[3])]);
                    if (v != ref) ++sym_fails;
                } while (std::next_permutation(p.begin(), p.end()));
            }
        }
        out.push_back(rec("forms/f7/symmetric", "f7 agrees on all argument orderings", sym_fails,
                          0));

        // Derivation rule on sampled (generator, quadruple) pairs, alternating
        // support quadruples with uniform ones so the nonzero stratum is hit.
        std::vector<std::array<int, 4>> sup_list(support.begin(), support.end());
        std::vector<LieElement> gens;
        for (int d = 0; d < static_cast<int>(alg.system.roots.size()); ++d)
            gens.push_back(alg.root_vector(d));
        for (const auto& e : kperp) gens.push_back(alg.cartan_element(e));
        std::uniform_int_distribution<int> pg(0, static_cast<int>(gens.size()) - 1);
        std::uniform_int_distribution<int> pw(0, nw - 1);
        std::uniform_int_distribution<std::size_t> psup(0, sup_list.size() - 1);
        int64_t inv_fails = 0;
        for (int64_t s = 0; s < opt.samples; ++s) {
            std::array<int, 4> q;
            if (s % 2 == 0 && !sup_list.empty()) q = sup_list[psup(rng)];
            else q = {pw(rng), pw(rng), pw(rng), pw(rng)};
            const LieElement& x = gens[static_cast<std::size_t>(pg(rng))];
            std::array<ModuleVec, 4> v = {basis[static_cast<std::size_t>(q[0])],
                                          basis[static_cast<std::size_t>(q[1])],
                                          basis[static_cast<std::size_t>(q[2])],
                                          basis[static_cast<std::size_t>(q[3])]};
            Rational sum = form_f7(alg, m, act(alg, m, x, v[0]), v[1], v[2], v[3]);
            sum += form_f7(alg, m, v[0], act(alg, m, x, v[1]), v[2], v[3]);
            sum += form_f7(alg, m, v[0], v[1], act(alg, m, x, v[2]), v[3]);
            sum += form_f7(alg, m, v[0], v[1], v[2], act(alg, m, x, v[3]));
            if (!sum.is_zero()) ++inv_fails;
        }
        out.push_back(rec("forms/f7/invariance", "f7 derivation rule vanishes", inv_fails, 0,
                          num(opt.samples) + " samples"));
    }
}

// ---------------------------------------------------------------------------
// pairings

void suite_pairings(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    struct Case {
        int n;
        const char* rule;
        int64_t count;
        int64_t meet;
        int64_t k_mult; // pair sums to -k_mult * K
        bool rulings;
    };
    static const Case cases[] = {
        {5, "ruling-dual", 5, 2, 1, true},
        {7, "bitangent", 28, 2, 1, false},
        {8, "triple-point", 120, 3, 2, false},
    };
    for (const auto& c : cases) {
        if (c.n > nmax) continue;
        auto lat = make_lattice(c.n);
        auto p = involution_pairs(lat, c.rule);
        out.push_back(rec(std::string("pairings/") + c.rule + "/count",
                          std::string(c.rule) + " pair count",
                          static_cast<int64_t>(p.pairs.size()), c.count));
        int64_t bad = 0;
        std::unordered_set<DivisorClass, DivisorClassHash> seen;
        for (const auto& [a, b] : p.pairs) {
            if (a + b != DivisorClass::zero(c.n) - c.k_mult * lat.K) ++bad;
            if (intersect(a, b) != c.meet) ++bad;
            seen.insert(a);
            seen.insert(b);
        }
        out.push_back(rec(std::string("pairings/") + c.rule + "/rule",
                          "pairs sum to the anticanonical multiple and meet correctly", bad, 0));
        int64_t universe = c.rulings ? kRulings[c.n] : kLines[c.n];
        out.push_back(rec(std::string("pairings/") + c.rule + "/coverage",
                          "every class appears in exactly one pair",
                          static_cast<int64_t>(seen.size()), universe));
    }
    // Singular fibers of the first ruling at each rank.
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        DivisorClass R = enumerate_rulings(lat).front();
        auto f = singular_fibers(lat, R);
        out.push_back(rec("pairings/fibers" + tag(n), "singular fiber count of a ruling",
                          static_cast<int64_t>(f.pairs.size()), n - 1));
        int64_t bad = 0;
        for (const auto& [a, b] : f.pairs) {
            if (a + b != R || intersect(a, b) != 1) ++bad;
            if (intersect(a, R) != 0 || intersect(b, R) != 0) ++bad;
        }
        out.push_back(rec("pairings/fibers-rule" + tag(n),
                          "fiber components sum to R and meet once", bad, 0));
    }
}

// ---------------------------------------------------------------------------
// dgons

void suite_dgons(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    static const int64_t expect_at_top[5] = {0, 0, kBitangentPairs, kTriangles, kQuadrilaterals};
    for (int d = 2; d <= 4; ++d) {
        for (int n = 2; n <= std::min(nmax, 9 - d); ++n) {
            auto lat = make_lattice(n);
            auto gons = find_dgons(lat, d);
            int64_t expect = n == 9 - d ? expect_at_top[d] : 0;
            out.push_back(rec("dgons/count/d" + num(d) + tag(n),
                              num(d) + "-gon count in the incidence graph",
                              static_cast<int64_t>(gons.size()), expect));
            if (gons.empty()) continue;
            int64_t bad = 0;
            for (const auto& g : gons) {
                DivisorClass s = DivisorClass::zero(n);
                for (const auto& v : g) s = s + v;
                if (s != DivisorClass::zero(n) - lat.K) ++bad;
            }
            out.push_back(rec("dgons/anticanonical/d" + num(d) + tag(n),
                              "every " + num(d) + "-gon sums to -K", bad, 0));
        }
    }
    // Cross-tie: the 2-gons at n=7 are the bitangent pairs.
    if (nmax >= 7) {
        auto lat = make_lattice(7);
        auto gons = find_dgons(lat, 2);
        auto pairs = involution_pairs(lat, "bitangent");
        std::set<std::pair<DivisorClass, DivisorClass>> a, b;
        for (const auto& g : gons) a.insert({std::min(g[0], g[1]), std::max(g[0], g[1])});
        for (const auto& [x, y] : pairs.pairs) b.insert({std::min(x, y), std::max(x, y)});
        out.push_back(flag("dgons/bitangent-tie", "2-gons at n=7 equal the bitangent pairing",
                           a == b));
    }
}

// ---------------------------------------------------------------------------
// weyl

void suite_weyl(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto sys = build_root_system(lat);
        auto lines = enumerate_lines(lat);
        if (n == 2) {
            // The unique root is L1-L2, whose reflection fixes H-L1-L2, so the
            // three lines split into orbits of sizes 2 and 1.
            auto orb_e = weyl_orbit(class_L(2, 2), sys);
            auto orb_c = weyl_orbit(class_H(2) - class_L(2, 1) - class_L(2, 2), sys);
            out.push_back(rec("weyl/blowup-orbit/n2", "the two blowup classes form one orbit",
                              static_cast<int64_t>(orb_e.size()), 2));
            out.push_back(rec("weyl/conic-orbit/n2", "H-L1-L2 is fixed by the only reflection",
                              static_cast<int64_t>(orb_c.size()), 1));
            std::vector<DivisorClass> uni = orb_e;
            uni.insert(uni.end(), orb_c.begin(), orb_c.end());
            out.push_back(flag("weyl/orbit-union/n2", "the two orbits cover the line census",
                               set_equal(uni, lines)));
        } else {
            auto orb = weyl_orbit(class_L(n, n), sys);
            out.push_back(flag("weyl/line-orbit" + tag(n),
                               "lines form a single Weyl orbit", set_equal(orb, lines),
                               num(static_cast<int64_t>(orb.size())) + " classes"));
        }
        if (n <= 6)
            out.push_back(rec("weyl/group-order" + tag(n), "Weyl group order at n=" + num(n),
                              weyl_group_order(sys), kWeylOrder[n]));
    }
}

// ---------------------------------------------------------------------------
// fixed-line

void suite_fixed_line(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    static const std::vector<int64_t> line_shape[9] = {
        {}, {}, {1, 1, 1}, {1, 2, 3}, {1, 3, 6}, {1, 5, 10}, {1, 10, 16}, {1, 1, 27, 27},
        {3, 112, 133}};
    static const std::vector<int64_t> adj_shape[9] = {
        {}, {}, {1, 1, 1, 1}, {1, 3, 3, 4}, {1, 6, 6, 11}, {1, 10, 10, 24}, {1, 16, 16, 45},
        {1, 27, 27, 78}, {3, 112, 133}};
    auto shape_of = [](const Decomposition& d) {
        std::vector<int64_t> s;
        for (const auto& c : d.components) s.push_back(c.total_rank());
        std::sort(s.begin(), s.end());
        return s;
    };
    auto shape_str = [](const std::vector<int64_t>& s) {
        std::string r;
        for (auto v : s) r += (r.empty() ? "" : "+") + num(v);
        return r;
    };
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto lines = enumerate_lines(lat);
        int64_t fails = 0;
        std::string first;
        for (const auto& l : lines) {
            auto r = decompose_fixed_line(lat, l);
            if (!r.ok) {
                ++fails;
                if (first.empty()) first = l.str();
            }
        }
        out.push_back(rec("branch/fixed-line/all" + tag(n),
                          "every line decomposition verifies", fails, 0,
                          num(static_cast<int64_t>(lines.size())) + " lines" +
                              (first.empty() ? "" : ", first failure at " + first)));

        auto rep = decompose_fixed_line(lat, class_L(n, n));
        out.push_back(flag("branch/fixed-line/line-shape" + tag(n),
                           "line module block ranks at the last blowup class",
                           shape_of(rep.line_blocks) == line_shape[n],
                           shape_str(shape_of(rep.line_blocks))));
        out.push_back(flag("branch/fixed-line/adjoint-shape" + tag(n),
                           "adjoint block ranks at the last blowup class",
                           shape_of(rep.adjoint_blocks) == adj_shape[n],
                           shape_str(shape_of(rep.adjoint_blocks))));
        if (n == 2) {
            auto q = decompose_fixed_line(lat, class_H(2) - class_L(2, 1) - class_L(2, 2));
            out.push_back(flag("branch/fixed-line/quadric", "the conic blowdown case verifies",
                               q.quadric_case && q.ok));
        }
    }
}

// ---------------------------------------------------------------------------
// fixed-ruling

void suite_fixed_ruling(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        auto rulings = enumerate_rulings(lat);
        auto lines = enumerate_lines(lat);
        auto roots = enumerate_roots(lat);
        const int64_t w_size = 2 * n - 2;
        const int64_t s_size = int64_t(1) << (n - 2);

        // Cheap sweep over every ruling: set sizes, fibers, Clifford closure,
        // and the spinor dualities, straight from the cached censuses.
        int64_t size_fails = 0, fiber_fails = 0, cliff_fails = 0, dual_fails = 0;
        int64_t cliff_pairs = 0;
        for (const auto& R : rulings) {
            std::vector<DivisorClass> W, Sp, Sm;
            for (const auto& l : lines) {
                int64_t t = intersect(l, R);
                if (t == 0) W.push_back(l);
                else if (t == 1) Sp.push_back(l);
            }
            for (const auto& r : roots)
                if (intersect(r, R) == 1) Sm.push_back(r);
            if (static_cast<int64_t>(W.size()) != w_size ||
                static_cast<int64_t>(Sp.size()) != s_size ||
                static_cast<int64_t>(Sm.size()) != s_size)
                ++size_fails;

            std::unordered_set<DivisorClass, DivisorClassHash> w_set(W.begin(), W.end());
            std::unordered_set<DivisorClass, DivisorClassHash> sp_set(Sp.begin(), Sp.end());
            std::unordered_set<DivisorClass, DivisorClassHash> sm_set(Sm.begin(), Sm.end());
            int64_t fibers = 0;
            for (const auto& C : W) {
                DivisorClass C2 = R - C;
                if (C < C2 && w_set.count(C2)) ++fibers;
            }
            if (fibers != n - 1) ++fiber_fails;

            auto cr = clifford_check(lat, R);
            cliff_pairs += cr.pairs_checked;
            if (!cr.ok) ++cliff_fails;

            if (n % 2 == 0) {
                DivisorClass shift = (n / 2 - 4) * R - lat.K;
                for (const auto& S : Sp)
                    if (!sm_set.count(shift - S)) ++dual_fails;
                for (const auto& T : Sm)
                    if (!sp_set.count(shift - T)) ++dual_fails;
            } else {
                int64_t mm = (n - 1) / 2;
                DivisorClass shift_p = (mm - 3) * R - lat.K;
                DivisorClass shift_m = (mm - 4) * R - lat.K;
                for (const auto& S : Sp)
                    if (!sp_set.count(shift_p - S)) ++dual_fails;
                for (const auto& T : Sm)
                    if (!sm_set.count(shift_m - T)) ++dual_fails;
            }
        }
        std::string swept = num(static_cast<int64_t>(rulings.size())) + " rulings";
        out.push_back(rec("branch/fixed-ruling/sizes" + tag(n),
                          "|W| = 2n-2 and |S+| = |S-| = 2^(n-2) for every ruling", size_fails, 0,
                          swept));
        out.push_back(rec("branch/fixed-ruling/fibers" + tag(n),
                          "every ruling has n-1 singular fibers", fiber_fails, 0, swept));
        out.push_back(rec("branch/fixed-ruling/clifford" + tag(n),
                          "Clifford closure holds for every ruling", cliff_fails, 0,
                          swept + ", " + num(cliff_pairs) + " pairs"));
        out.push_back(rec("branch/fixed-ruling/duality" + tag(n),
                          "spinor duality shifts map S+ and S- onto their targets", dual_fails, 0,
                          swept));

        // Full decompositions: exhaustive where cheap, representatives at the
        // top ranks unless asked for everything.
        std::vector<DivisorClass> chosen;
        bool full = n <= 6 || opt.exhaustive;
        if (full) chosen = rulings;
        else
            chosen = {rulings.front(), rulings[rulings.size() / 2], rulings.back()};
        int64_t dec_fails = 0;
        std::string dtype;
        for (const auto& R : chosen) {
            auto r = decompose_fixed_ruling(lat, R);
            if (dtype.empty()) dtype = r.d_sub.cartan_type;
            if (!r.ok) ++dec_fails;
        }
        out.push_back(rec("branch/fixed-ruling/full" + tag(n),
                          "full ruling decompositions verify", dec_fails, 0,
                          num(static_cast<int64_t>(chosen.size())) + " rulings" +
                              (full ? ", exhaustive" : ", representatives")));
        out.push_back(flag("branch/fixed-ruling/subsystem-type" + tag(n),
                           "roots orthogonal to the ruling have the expected type",
                           dtype == kDType[n], dtype));
    }
}

// ---------------------------------------------------------------------------
// sections

void suite_sections(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    const int nmax = clamp_n(opt);
    for (int n = 2; n <= nmax; ++n) {
        auto lat = make_lattice(n);
        DivisorClass R = enumerate_rulings(lat).front();
        std::vector<DivisorClass> s_plus, s_minus;
        for (const auto& l : enumerate_lines(lat))
            if (intersect(l, R) == 1) s_plus.push_back(l);
        for (const auto& r : enumerate_roots(lat))
            if (intersect(r, R) == 1) s_minus.push_back(r);

        const bool full = n <= 6 || opt.exhaustive;
        auto choose = [&](const std::vector<DivisorClass>& v) {
            if (full) return v;
            return std::vector<DivisorClass>{v.front(), v.back()};
        };
        std::string atype;
        for (int variant = 0; variant < 2; ++variant) {
            const auto& pool = variant == 0 ? s_plus : s_minus;
            int64_t fails = 0;
            for (const auto& sec : choose(pool)) {
                auto res = decompose_section(lat, R, sec, variant == 1);
                if (atype.empty()) atype = res.a_sub.cartan_type;
                if (!res.ok) ++fails;
            }
            out.push_back(rec(std::string("branch/sections/") +
                                  (variant == 0 ? "line" : "root") + tag(n),
                              std::string("section decompositions verify (") +
                                  (variant == 0 ? "line" : "norm -2") + " sections)",
                              fails, 0,
                              num(static_cast<int64_t>(choose(pool).size())) + " sections" +
                                  (full ? ", exhaustive" : ", representatives")));
        }
        out.push_back(flag("branch/sections/subsystem-type" + tag(n),
                           "roots orthogonal to ruling and section have the expected type",
                           atype == kAType[n], atype));
    }
}

// ---------------------------------------------------------------------------
// parity

bool e8_is_zero(const E8Element& x) {
    if (!x.d8.is_zero()) return false;
    for (const auto& [k, v] : x.spin) {
        (void)k;
        if (!v.is_zero()) return false;
    }
    return true;
}

E8Element e8_basis_element(const E8Parity& p, const std::vector<DivisorClass>& kperp, int idx) {
    E8Element e;
    e.d8 = p.algebra.zero();
    if (idx < 8) {
        e.d8 = p.algebra.cartan_element(kperp[static_cast<std::size_t>(idx)]);
    } else if (idx < 8 + static_cast<int>(p.even_roots.size())) {
        e.d8 = p.algebra.root_vector(
            p.algebra.root_of(p.even_roots[static_cast<std::size_t>(idx - 8)]));
    } else {
        e.spin[idx - 8 - static_cast<int>(p.even_roots.size())] = Rational(1);
    }
    return e;
}

void suite_parity(const VerifyOptions& opt, std::vector<IdentityResult>& out) {
    if (clamp_n(opt) < 8) {
        out.push_back(flag("parity/skipped", "parity checks need n_max = 8", true,
                           "nothing to verify below n = 8"));
        return;
    }
    auto rng = make_rng(opt, 12);
    auto lat = make_lattice(8);
    auto alg = build_lie_algebra(lat);
    auto kperp = kperp_basis(lat);

    std::vector<DivisorClass> std_lines;
    for (int i = 1; i <= 8; ++i) std_lines.push_back(class_L(8, i));
    auto pr = decompose_parity_d8(lat, std_lines);
    out.push_back(flag("parity/standard-tuple", "parity decomposition at the blowup classes",
                       pr.ok,
                       num(static_cast<int64_t>(pr.even_roots.size())) + " even roots, " +
                           num(static_cast<int64_t>(pr.spin_weights.size())) + " spinor weights"));

    // A Weyl-moved tuple: reflect everything in H-L1-L2-L3.
    DivisorClass r0 = class_H(8) - class_L(8, 1) - class_L(8, 2) - class_L(8, 3);
    std::vector<DivisorClass> moved;
    for (const auto& l : std_lines) moved.push_back(reflect(l, r0));
    auto pr2 = decompose_parity_d8(lat, moved);
    out.push_back(flag("parity/moved-tuple", "parity decomposition after a Weyl reflection",
                       pr2.ok));

    auto p = build_e8_parity(alg);
    out.push_back(rec("parity/even-roots", "even-degree root count",
                      static_cast<int64_t>(p.even_roots.size()), 112));
    out.push_back(rec("parity/spin-weights", "even-degree line count",
                      static_cast<int64_t>(p.spin_weights.size()), 128));
    out.push_back(flag("parity/root-set", "even roots plus shifted spinor weights reproduce "
                                          "the root census",
                       set_equal(e8_root_set(p), enumerate_roots(lat))));

    // Scalar pairing support and gamma antisymmetry, exhaustively on basis
    // pairs.
    int64_t scalar_fails = 0, gamma_fails = 0;
    const int ns = static_cast<int>(p.spin_weights.size());
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            std::map<int, Rational> u{{i, Rational(1)}}, v{{j, Rational(1)}};
            auto [s_uv, g_uv] = e8_spin_products(p, u, v);
            bool partner = intersect(p.spin_weights[static_cast<std::size_t>(i)],
                                     p.spin_weights[static_cast<std::size_t>(j)]) == 3;
            if (s_uv != (partner ? Rational(1) : Rational())) ++scalar_fails;
            if (j < i) continue;
            auto [s_vu, g_vu] = e8_spin_products(p, v, u);
            (void)s_vu;
            LieElement sum = g_uv + g_vu;
            if (!sum.is_zero()) ++gamma_fails;
        }
    out.push_back(rec("parity/scalar-pairing",
                      "spinor scalar pairing is the unit perfect matching", scalar_fails, 0));
    out.push_back(rec("parity/gamma-antisymmetric", "gamma(u,v) = -gamma(v,u)", gamma_fails, 0));

    // Spinor action axiom on sampled pairs of LD8 basis elements.
    int64_t act_fails = 0;
    const int64_t as = std::min<int64_t>(opt.samples, 5000);
    std::uniform_int_distribution<int> pd(0, 8 + static_cast<int>(p.even_roots.size()) - 1);
    std::uniform_int_distribution<int> ps(0, ns - 1);
    for (int64_t s = 0; s < as; ++s) {
        LieElement a = e8_basis_element(p, kperp, pd(rng)).d8;
        LieElement b = e8_basis_element(p, kperp, pd(rng)).d8;
        std::map<int, Rational> u{{ps(rng), Rational(1)}};
        auto lhs = e8_spin_act(p, bracket(alg, a, b), u);
        auto r1 = e8_spin_act(p, a, e8_spin_act(p, b, u));
        for (auto& [k, val] : e8_spin_act(p, b, e8_spin_act(p, a, u))) {
            auto it = r1.find(k);
            if (it == r1.end()) {
                if (!val.is_zero()) r1.emplace(k, Rational() - val);
            } else {
                it->second -= val;
                if (it->second.is_zero()) r1.erase(it);
            }
        }
        if (lhs != r1) ++act_fails;
    }
    out.push_back(rec("parity/spin-action-axiom", "[a,b]u = a(bu) - b(au) on the half spinor",
                      act_fails, 0, num(as) + " samples"));

    // Jacobi for the reassembled bracket on sampled basis triples.
    int64_t jac_fails = 0;
    const int64_t js = std::min<int64_t>(opt.samples, 20000);
    std::uniform_int_distribution<int> pe(0, 8 + static_cast<int>(p.even_roots.size()) + ns - 1);
    for (int64_t s = 0; s < js; ++s) {
        E8Element x = e8_basis_element(p, kperp, pe(rng));
        E8Element y = e8_basis_element(p, kperp, pe(rng));
        E8Element z = e8_basis_element(p, kperp, pe(rng));
        E8Element t1 = e8_bracket_via_d8(p, e8_bracket_via_d8(p, x, y), z);
        E8Element t2 = e8_bracket_via_d8(p, e8_bracket_via_d8(p, y, z), x);
        E8Element t3 = e8_bracket_via_d8(p, e8_bracket_via_d8(p, z, x), y);
        E8Element sum;
        sum.d8 = t1.d8 + t2.d8 + t3.d8;
        for (const auto* t : {&t1, &t2, &t3})
            for (const auto& [k, val] : t->spin) sum.spin[k] += val;
        for (auto it = sum.spin.begin(); it != sum.spin.end();)
            it = it->second.is_zero() ? sum.spin.erase(it) : std::next(it);
        if (!e8_is_zero(sum)) ++jac_fails;
    }
    out.push_back(rec("parity/jacobi-via-d8", "Jacobi identity for the spinor-model bracket",
                      jac_fails, 0, num(js) + " sampled triples"));

    auto e7 = e7_centralizer(lat, class_L(8, 1), class_L(8, 2));
    out.push_back(flag("parity/e7-centralizer", "roots orthogonal to L1-L2 form an E7 system",
                       e7.cartan_type == "E7" && e7.roots.size() == 126, e7.cartan_type));
}

// ---------------------------------------------------------------------------
// small-n and degenerations

void suite_small_n(const VerifyOptions&, std::vector<IdentityResult>& out) {
    for (auto& r : small_n_checks()) out.push_back(std::move(r));
}

void suite_degenerations(const VerifyOptions&, std::vector<IdentityResult>& out) {
    for (auto c : {DegenerationCase::X5TwoQuadrics, DegenerationCase::X6ThreePlanes,
                   DegenerationCase::X6PlaneQuadric, DegenerationCase::X7DoublePlane}) {
        auto rep = degeneration_counts(c);
        for (auto& r : rep.identities) out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------------------
// dispatch

using SuiteFn = void (*)(const VerifyOptions&, std::vector<IdentityResult>&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

constexpr SuiteEntry kSuiteTable[] = {
    {"census", &suite_census},
    {"dimensions", &suite_dimensions},
    {"jacobi", &suite_jacobi},
    {"modules", &suite_modules},
    {"forms", &suite_forms},
    {"pairings", &suite_pairings},
    {"dgons", &suite_dgons},
    {"weyl", &suite_weyl},
    {"fixed-line", &suite_fixed_line},
    {"fixed-ruling", &suite_fixed_ruling},
    {"sections", &suite_sections},
    {"parity", &suite_parity},
    {"small-n", &suite_small_n},
    {"degenerations", &suite_degenerations},
};

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kSuiteTable) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    const SuiteEntry* entry = nullptr;
    for (const auto& e : kSuiteTable)
        if (name == e.name) entry = &e;
    if (!entry) throw std::domain_error("run_suite: unknown suite '" + name + "'");

    SuiteResult res;
    res.suite = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        entry->fn(opt, res.identities);
    } catch (const std::exception& e) {
        res.identities.push_back(
            flag(name + "/exception", "suite ran to completion", false, e.what()));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.ok = std::all_of(res.identities.begin(), res.identities.end(),
                         [](const IdentityResult& r) { return r.ok; });
    return res;
}

std::vector<SuiteResult> run_suites(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace enlattice
