#include "enlattice/census.hpp"

#include "enlattice/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <unordered_set>

namespace enlattice {

namespace {

using i128 = __int128;

// Integer interval {x : A x^2 + B x + C <= 0} for A > 0; empty if none.
struct IntInterval {
    int64_t lo = 0, hi = -1;
    bool empty() const { return lo > hi; }
};

IntInterval quad_interval(int64_t A, int64_t B, int64_t C) {
    // Solutions lie between the real roots; find them by floating guess and
    // exact integer fixup so rounding can never clip a solution.
    IntInterval iv;
    i128 disc = i128(B) * B - i128(4) * A * C;
    if (disc < 0) return iv;
    double sq = std::sqrt(static_cast<double>(disc));
    auto val = [&](int64_t x) { return i128(A) * x * x + i128(B) * x + C; };
    auto lo = static_cast<int64_t>(std::floor((-double(B) - sq) / (2.0 * double(A)))) - 2;
    auto hi = static_cast<int64_t>(std::ceil((-double(B) + sq) / (2.0 * double(A)))) + 2;
    while (lo <= hi && val(lo) > 0) ++lo;
    while (hi >= lo && val(hi) > 0) --hi;
    iv.lo = lo;
    iv.hi = hi;
    return iv;
}

struct ConstraintRow {
    std::vector<int64_t> coeff; // D.C as a function of (a, b1..bn): (C0, -C1, ..., -Cn)
    int64_t target = 0;
    std::vector<int64_t> suffix_sq; // suffix_sq[j] = sum_{i >= j} coeff[i]^2
};

ConstraintRow make_row(const DivisorClass& C, int64_t target, int rank) {
    ConstraintRow r;
    r.coeff.resize(static_cast<std::size_t>(rank));
    r.coeff[0] = C[0];
    for (int i = 1; i < rank; ++i) r.coeff[static_cast<std::size_t>(i)] = -C[static_cast<std::size_t>(i)];
    r.target = target;
    r.suffix_sq.assign(static_cast<std::size_t>(rank) + 1, 0);
    for (int i = rank - 1; i >= 0; --i)
        r.suffix_sq[static_cast<std::size_t>(i)] =
            r.suffix_sq[static_cast<std::size_t>(i) + 1] + r.coeff[static_cast<std::size_t>(i)] * r.coeff[static_cast<std::size_t>(i)];
    return r;
}

// ---------------------------------------------------------------------------
// Engine 1: descent over (a, b1..bn).

class DescentEnum {
public:
    DescentEnum(const PicardLattice& lat, const ClassQuery& q) : lat_(lat), q_(q) {
        rank_ = lat.n + 1;
        for (const auto& [C, v] : q.linear_constraints) rows_.push_back(make_row(C, v, rank_));
        if (q.parity_constraint) parity_row_ = make_row(q.parity_constraint->first, q.parity_constraint->second, rank_);
    }

    // The a-interval from (3a + k)^2 <= n (a^2 - s); nullopt when infinite.
    static std::optional<IntInterval> a_interval(int n, int64_t s, int64_t k) {
        const int64_t A = 9 - n;
        if (n == 0) {
            // D = aH: need 3a = -k exactly and a^2 = s.
            IntInterval iv{0, -1};
            if (k % 3 == 0) {
                int64_t a = -k / 3;
                if (a * a == s) iv = {a, a};
            }
            return iv;
        }
        if (A > 0) return quad_interval(A, 6 * k, k * k + int64_t(n) * s);
        if (A == 0 && k == 0) {
            if (9 * s > 0) return IntInterval{0, -1}; // Cauchy-Schwarz fails for every a
            return std::nullopt;
        }
        return std::nullopt; // genuinely infinite a-range
    }

    std::vector<DivisorClass> run() {
        auto iv = a_interval(lat_.n, q_.self_int, q_.k_int);
        if (!iv)
            throw UnboundedQuery("descent engine: a-interval is infinite for n=" + std::to_string(lat_.n));
        std::vector<DivisorClass> out;
        if (iv->empty()) return out;
        cur_.assign(static_cast<std::size_t>(rank_), 0);
        for (int64_t a = iv->lo; a <= iv->hi; ++a) {
            cur_[0] = a;
            const int64_t s1 = 3 * a + q_.k_int;   // required sum of b_i
            const int64_t s2 = a * a - q_.self_int; // required sum of b_i^2
            if (s2 < 0) continue;
            partial_.assign(rows_.size(), 0);
            for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] = rows_[r].coeff[0] * a;
            parity_partial_ = parity_row_ ? parity_row_->coeff[0] * a : 0;
            descend(1, s1, s2, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void descend(int idx, int64_t s1, int64_t s2, std::vector<DivisorClass>& out) {
        const int r = rank_ - idx; // coordinates still free
        if (r == 0) {
            if (s1 != 0 || s2 != 0) return;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (partial_[i] != rows_[i].target) return;
            if (parity_row_) {
                int64_t p = parity_partial_ - parity_row_->target;
                if (p % 2 != 0) return;
            }
            out.push_back(DivisorClass(cur_));
            return;
        }
        // Feasible b-range for this coordinate: r b^2 - 2 s1 b + (s1^2 - (r-1) s2) <= 0.
        IntInterval bv;
        if (r == 1) {
            if (s1 * s1 != s2) return;
            bv = {s1, s1};
        } else {
            bv = quad_interval(r, -2 * s1, s1 * s1 - int64_t(r - 1) * s2);
            if (bv.empty()) return;
        }
        for (int64_t b = bv.lo; b <= bv.hi; ++b) {
            const int64_t ns2 = s2 - b * b;
            if (ns2 < 0) continue;
            const int64_t ns1 = s1 - b;
            cur_[static_cast<std::size_t>(idx)] = b;
            bool ok = true;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const auto& row = rows_[i];
                const int64_t step = row.coeff[static_cast<std::size_t>(idx)] * b;
                partial_[i] += step;
                const int64_t need = row.target - partial_[i];
                const int64_t c2 = row.suffix_sq[static_cast<std::size_t>(idx) + 1];
                // |need| <= sqrt(c2 * remaining sum of squares), Cauchy-Schwarz.
                if (i128(need) * need > i128(c2) * ns2) {
                    ok = false;
                    // undo partials updated so far (including i)
                    for (std::size_t j = 0; j <= i; ++j)
                        partial_[j] -= rows_[j].coeff[static_cast<std::size_t>(idx)] * b;
                    break;
                }
            }
            if (!ok) continue;
            if (parity_row_) parity_partial_ += parity_row_->coeff[static_cast<std::size_t>(idx)] * b;
            descend(idx + 1, ns1, ns2, out);
            if (parity_row_) parity_partial_ -= parity_row_->coeff[static_cast<std::size_t>(idx)] * b;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                partial_[i] -= rows_[i].coeff[static_cast<std::size_t>(idx)] * b;
        }
    }

    const PicardLattice& lat_;
    const ClassQuery& q_;
    int rank_ = 0;
    std::vector<ConstraintRow> rows_;
    std::optional<ConstraintRow> parity_row_;
    std::vector<int64_t> cur_;
    std::vector<int64_t> partial_;
    int64_t parity_partial_ = 0;
};

// ---------------------------------------------------------------------------
// Engine 2: affine reduction.  Solve the linear rows over Z, restrict the
// intersection form to the solution coset, enumerate the definite remainder.

// Column-operation Hermite solve of M x = t over the integers.
// Returns false if no integer solution; otherwise x0 is one solution and
// kernel holds a basis of the integer null space.
bool solve_integer_system(std::vector<std::vector<int64_t>> M, std::vector<int64_t> t,
                          std::vector<std::vector<int64_t>>& x0_out,
                          std::vector<std::vector<int64_t>>& kernel_out) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    // U tracks the column operations; columns of U parametrize Z^cols.
    std::vector<std::vector<int64_t>> U(cols, std::vector<int64_t>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1; // U stored column-major: U[c] is a column
    auto col_addmul = [&](std::size_t dst, std::size_t src, int64_t f) {
        for (std::size_t r = 0; r < rows; ++r) M[r][dst] += f * M[r][src];
        for (std::size_t r = 0; r < cols; ++r) U[dst][r] += f * U[src][r];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][a], M[r][b]);
        std::swap(U[a], U[b]);
    };
    std::size_t pivot_col = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // Euclidean elimination across columns pivot_col..cols-1 on row r.
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot_col; c < cols; ++c)
                if (M[r][c] != 0 && (best == cols || std::llabs(M[r][c]) < std::llabs(M[r][best]))) best = c;
            if (best == cols) break; // row r is zero on active columns
            col_swap(pivot_col, best);
            bool clean = true;
            for (std::size_t c = pivot_col + 1; c < cols; ++c) {
                if (M[r][c] == 0) continue;
                col_addmul(c, pivot_col, -(M[r][c] / M[r][pivot_col]));
                if (M[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot_col < cols && M[r][pivot_col] != 0) {
            pivots.emplace_back(r, pivot_col);
            ++pivot_col;
        }
    }
    // Back-substitute: y has one entry per pivot column; remaining columns free.
    std::vector<int64_t> y(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        i128 acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += i128(M[r][c]) * y[c];
        i128 res = i128(t[r]) - acc;
        auto piv = std::find_if(pivots.begin(), pivots.end(), [&](auto& p) { return p.first == r; });
        if (piv == pivots.end()) {
            if (res != 0) return false; // inconsistent row
            continue;
        }
        int64_t d = M[r][piv->second];
        if (res % d != 0) return false; // rational but not integral solution
        y[piv->second] = static_cast<int64_t>(res / d);
    }
    std::vector<int64_t> x0(cols, 0);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < cols; ++r) x0[r] += U[c][r] * y[c];
    x0_out.assign(1, std::move(x0));
    kernel_out.clear();
    std::unordered_set<std::size_t> used;
    for (auto& p : pivots) used.insert(p.second);
    for (std::size_t c = 0; c < cols; ++c)
        if (!used.count(c)) kernel_out.push_back(U[c]);
    return true;
}

int64_t form_on_coords(const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
    int64_t s = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

// Leading-principal-minor test for positive definiteness (Bareiss, exact).
bool positive_definite(const std::vector<std::vector<int64_t>>& P) {
    const std::size_t d = P.size();
    std::vector<std::vector<i128>> a(d, std::vector<i128>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i][j] = P[i][j];
    i128 prev = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (a[k][k] <= 0) return false; // leading minor chain must stay positive
        for (std::size_t i = k + 1; i < d; ++i)
            for (std::size_t j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

class ReductionEnum {
public:
    ReductionEnum(const PicardLattice& lat, const ClassQuery& q) : lat_(lat), q_(q) {}

    std::vector<DivisorClass> run() {
        const int rank = lat_.n + 1;
        std::vector<std::vector<int64_t>> M;
        std::vector<int64_t> t;
        auto push = [&](const DivisorClass& C, int64_t v) {
            ConstraintRow r = make_row(C, v, rank);
            M.push_back(r.coeff);
            t.push_back(v);
        };
        push(lat_.K, q_.k_int);
        for (const auto& [C, v] : q_.linear_constraints) push(C, v);

        std::vector<std::vector<int64_t>> x0v, kernel;
        if (!solve_integer_system(M, t, x0v, kernel)) return {};
        const auto& x0 = x0v[0];
        const std::size_t d = kernel.size();

        // Value of the form on the coset x0 + z.N:  c0 + 2 b.z + z^T Q z.
        int64_t c0 = form_on_coords(x0, x0);
        std::vector<int64_t> b(d);
        std::vector<std::vector<int64_t>> Q(d, std::vector<int64_t>(d));
        for (std::size_t i = 0; i < d; ++i) {
            b[i] = form_on_coords(x0, kernel[i]);
            for (std::size_t j = 0; j < d; ++j) Q[i][j] = form_on_coords(kernel[i], kernel[j]);
        }

        std::vector<DivisorClass> out;
        if (d == 0) {
            if (c0 == q_.self_int) emit(x0, {}, kernel, out);
            std::sort(out.begin(), out.end());
            return out;
        }
        std::vector<std::vector<int64_t>> P(d, std::vector<int64_t>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) P[i][j] = -Q[i][j];
        if (!positive_definite(P))
            throw UnboundedQuery("reduction engine: constrained form is not negative definite; "
                                 "the class family is infinite");

        // Want z^T P z - 2 b.z = c0 - s.  Complete the square over Q:
        // (z - z*)^T P (z - z*) = radius, z* = P^{-1} b.
        std::vector<Rational> zstar = solve_pd(P, b);
        Rational radius = Rational(c0 - q_.self_int);
        for (std::size_t i = 0; i < d; ++i) radius += Rational(b[i]) * zstar[i];
        if (radius < Rational(0)) return out;

        // Rational Cholesky P = sum_i dch[i] (y_i + sum_{j>i} R_ij y_j)^2.
        std::vector<std::vector<Rational>> R(d, std::vector<Rational>(d));
        std::vector<Rational> dch(d);
        cholesky(P, R, dch);

        std::vector<int64_t> z(d, 0);
        fp_descend(static_cast<int>(d) - 1, radius, R, dch, zstar, z, Q, b, c0, kernel, x0, out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // P = R^T diag(dch) R with R unit upper-triangular, all rational, exact.
    static void cholesky(const std::vector<std::vector<int64_t>>& P,
                         std::vector<std::vector<Rational>>& R, std::vector<Rational>& dch) {
        const std::size_t d = P.size();
        std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) A[i][j] = Rational(P[i][j]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) R[i][j] = Rational(i == j ? 1 : 0);
        for (std::size_t k = 0; k < d; ++k) {
            dch[k] = A[k][k];
            for (std::size_t j = k + 1; j < d; ++j) R[k][j] = A[k][j] / dch[k];
            for (std::size_t i = k + 1; i < d; ++i)
                for (std::size_t j = k + 1; j < d; ++j)
                    A[i][j] -= dch[k] * R[k][i] * R[k][j];
        }
    }

    // Solve P z = b for positive-definite integer P, exact rational result.
    static std::vector<Rational> solve_pd(std::vector<std::vector<int64_t>> P, std::vector<int64_t> b) {
        const std::size_t d = P.size();
        std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d + 1));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) A[i][j] = Rational(P[i][j]);
            A[i][d] = Rational(b[i]);
        }
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t piv = k;
            while (piv < d && A[piv][k].is_zero()) ++piv;
            if (piv == d) throw std::logic_error("solve_pd: singular matrix");
            std::swap(A[k], A[piv]);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == k || A[i][k].is_zero()) continue;
                Rational f = A[i][k] / A[k][k];
                for (std::size_t j = k; j <= d; ++j) A[i][j] -= f * A[k][j];
            }
        }
        std::vector<Rational> z(d);
        for (std::size_t i = 0; i < d; ++i) z[i] = A[i][d] / A[i][i];
        return z;
    }

    void fp_descend(int i, Rational remaining, const std::vector<std::vector<Rational>>& R,
                    const std::vector<Rational>& dch, const std::vector<Rational>& zstar,
                    std::vector<int64_t>& z, const std::vector<std::vector<int64_t>>& Q,
                    const std::vector<int64_t>& b, int64_t c0,
                    const std::vector<std::vector<int64_t>>& kernel, const std::vector<int64_t>& x0,
                    std::vector<DivisorClass>& out) {
        const std::size_t d = z.size();
        if (i < 0) {
            // Exact check of the original integer equation.
            i128 v = c0;
            for (std::size_t a = 0; a < d; ++a) {
                v += i128(2) * b[a] * z[a];
                for (std::size_t c = 0; c < d; ++c) v += i128(Q[a][c]) * z[a] * z[c];
            }
            if (v != q_.self_int) return;
            emit(x0, z, kernel, out);
            return;
        }
        // offset_i = sum_{j>i} R[i][j] (z_j - zstar_j); level = dch[i] (z_i - zstar_i + offset)^2
        Rational offset(0);
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < d; ++j)
            offset += R[static_cast<std::size_t>(i)][j] * (Rational(z[j]) - zstar[j]);
        // dch[i] (z_i - center)^2 <= remaining, center = zstar_i - offset.
        Rational center = zstar[static_cast<std::size_t>(i)] - offset;
        Rational bound2 = remaining / dch[static_cast<std::size_t>(i)];
        // Integer range around the rational center with (z - center)^2 <= bound2.
        double cf = static_cast<double>(center.num()) / static_cast<double>(center.den());
        double bf = std::sqrt(std::max(0.0, static_cast<double>(bound2.num()) / static_cast<double>(bound2.den())));
        auto lo = static_cast<int64_t>(std::floor(cf - bf)) - 1;
        auto hi = static_cast<int64_t>(std::ceil(cf + bf)) + 1;
        auto fits = [&](int64_t v) {
            Rational dz = Rational(v) - center;
            return dz * dz <= bound2;
        };
        while (lo <= hi && !fits(lo)) ++lo;
        while (hi >= lo && !fits(hi)) --hi;
        for (int64_t v = lo; v <= hi; ++v) {
            z[static_cast<std::size_t>(i)] = v;
            Rational dz = Rational(v) - center;
            Rational used = dch[static_cast<std::size_t>(i)] * dz * dz;
            fp_descend(i - 1, remaining - used, R, dch, zstar, z, Q, b, c0, kernel, x0, out);
        }
        z[static_cast<std::size_t>(i)] = 0;
    }

    void emit(const std::vector<int64_t>& x0, const std::vector<int64_t>& z,
              const std::vector<std::vector<int64_t>>& kernel, std::vector<DivisorClass>& out) {
        std::vector<int64_t> coords = x0;
        for (std::size_t j = 0; j < z.size(); ++j)
            for (std::size_t r = 0; r < coords.size(); ++r) coords[r] += z[j] * kernel[j][r];
        DivisorClass D(coords);
        if (q_.parity_constraint) {
            int64_t p = intersect(D, q_.parity_constraint->first) - q_.parity_constraint->second;
            if (p % 2 != 0) return;
        }
        out.push_back(std::move(D));
    }

    const PicardLattice& lat_;
    const ClassQuery& q_;
};

} // namespace

int64_t search_budget() {
    static const int64_t value = [] {
        if (const char* e = std::getenv("ENLATTICE_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(e, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<int64_t>(v);
        }
        return int64_t(10'000'000);
    }();
    return value;
}

std::vector<DivisorClass> enumerate_classes(const PicardLattice& lat, const ClassQuery& q, EnumEngine engine) {
    for (const auto& [C, v] : q.linear_constraints)
        if (C.lattice_rank() != lat.n)
            throw std::invalid_argument("enumerate_classes: constraint class rank mismatch");
    if (q.parity_constraint && q.parity_constraint->first.lattice_rank() != lat.n)
        throw std::invalid_argument("enumerate_classes: parity class rank mismatch");
    // Adjunction parity: D^2 + D.K = a^2 - 3a - sum(b_i^2 - b_i) is always even,
    // so odd queries are empty regardless of n.
    if (((q.self_int + q.k_int) % 2 + 2) % 2 == 1) return {};

    switch (engine) {
    case EnumEngine::Descent:
        return DescentEnum(lat, q).run();
    case EnumEngine::Reduction:
        return ReductionEnum(lat, q).run();
    case EnumEngine::Auto:
    default:
        if (DescentEnum::a_interval(lat.n, q.self_int, q.k_int))
            return DescentEnum(lat, q).run();
        return ReductionEnum(lat, q).run();
    }
}

namespace {

// The three canonical censuses are pure functions of the rank and get hit
// constantly by the branching layer (every fixed-line or fixed-ruling
// decomposition re-reads them), so memoize per (rank, shape).
const std::vector<DivisorClass>& canonical_census(const PicardLattice& lat, int shape) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<DivisorClass>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({lat.n, shape});
    if (it != cache.end()) return it->second;
    static const int64_t params[3][2] = {{-1, -1}, {0, -2}, {-2, 0}};
    auto out = enumerate_classes(lat, ClassQuery{params[shape][0], params[shape][1], {}, {}});
    return cache.emplace(std::make_pair(lat.n, shape), std::move(out)).first->second;
}

} // namespace

std::vector<DivisorClass> enumerate_lines(const PicardLattice& lat) {
    return canonical_census(lat, 0);
}
std::vector<DivisorClass> enumerate_rulings(const PicardLattice& lat) {
    return canonical_census(lat, 1);
}
std::vector<DivisorClass> enumerate_roots(const PicardLattice& lat) {
    return canonical_census(lat, 2);
}

Pairing singular_fibers(const PicardLattice& lat, const DivisorClass& R) {
    if (R.lattice_rank() != lat.n) throw std::invalid_argument("singular_fibers: rank mismatch");
    if (intersect(R, R) != 0 || intersect(R, lat.K) != -2)
        throw std::invalid_argument("singular_fibers: " + R.str() + " is not a ruling class");
    std::vector<DivisorClass> W;
    for (const auto& C : enumerate_lines(lat))
        if (intersect(C, R) == 0) W.push_back(C);
    std::unordered_set<DivisorClass, DivisorClassHash> in_w(W.begin(), W.end());
    Pairing p{"singular-fiber", {}};
    for (const auto& C : W) {
        DivisorClass C2 = R - C;
        if (C < C2 && in_w.count(C2)) p.pairs.emplace_back(C, C2);
    }
    std::sort(p.pairs.begin(), p.pairs.end());
    return p;
}

Pairing involution_pairs(const PicardLattice& lat, const std::string& rule) {
    Pairing p{rule, {}};
    auto match = [&](const std::vector<DivisorClass>& set, const DivisorClass& shift) {
        std::unordered_set<DivisorClass, DivisorClassHash> in(set.begin(), set.end());
        for (const auto& x : set) {
            DivisorClass y = shift - x;
            if (!in.count(y))
                throw std::runtime_error("involution_pairs: " + x.str() + " has no partner");
            if (x < y) p.pairs.emplace_back(x, y);
        }
    };
    if (rule == "bitangent") {
        if (lat.n != 7) throw std::invalid_argument("involution_pairs: bitangent requires n=7");
        match(enumerate_lines(lat), -lat.K);
    } else if (rule == "triple-point") {
        if (lat.n != 8) throw std::invalid_argument("involution_pairs: triple-point requires n=8");
        match(enumerate_lines(lat), -2 * canonical_class(lat));
    } else if (rule == "ruling-dual") {
        if (lat.n != 5) throw std::invalid_argument("involution_pairs: ruling-dual requires n=5");
        match(enumerate_rulings(lat), -lat.K);
    } else {
        throw std::invalid_argument("involution_pairs: unknown rule '" + rule + "'");
    }
    std::sort(p.pairs.begin(), p.pairs.end());
    return p;
}

std::vector<std::vector<DivisorClass>> find_dgons(const PicardLattice& lat, int d) {
    if (d < 2 || d > 8) throw std::invalid_argument("find_dgons: d must be in 2..8");
    auto lines = enumerate_lines(lat);
    const int m = static_cast<int>(lines.size());
    std::vector<std::vector<int8_t>> mult(static_cast<std::size_t>(m), std::vector<int8_t>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int64_t v = intersect(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]);
            mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int8_t>(std::clamp<int64_t>(v, -8, 8));
        }

    std::vector<std::vector<DivisorClass>> out;
    if (d == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 2)
                    out.push_back({lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]});
        std::sort(out.begin(), out.end());
        return out;
    }

    const int64_t budget = search_budget();
    int64_t nodes = 0;
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(d));

    // Simple-cycle DFS canonicalized by: smallest vertex first, and
    // second vertex smaller than the last (fixes direction).
    auto extend = [&](auto&& self, int depth) -> void {
        if (++nodes > budget)
            throw SearchTruncated("find_dgons: node budget " + std::to_string(budget) +
                                  " exceeded (raise ENLATTICE_BUDGET)");
        const int last = path.back();
        if (depth == d) {
            if (mult[static_cast<std::size_t>(last)][static_cast<std::size_t>(path[0])] != 1) return;
            if (path[1] > path.back()) return; // direction canonicalization
            std::vector<DivisorClass> cyc;
            cyc.reserve(static_cast<std::size_t>(d));
            for (int v : path) cyc.push_back(lines[static_cast<std::size_t>(v)]);
            out.push_back(std::move(cyc));
            return;
        }
        // The vertex added at depth d-1 closes the cycle, so it must be
        // adjacent (not disjoint) to path[0]; skip that index here and let the
        // closure test at depth == d handle it.
        const int disjoint_from = (depth == d - 1) ? 1 : 0;
        for (int w = path[0] + 1; w < m; ++w) {
            if (mult[static_cast<std::size_t>(last)][static_cast<std::size_t>(w)] != 1) continue;
            bool ok = true;
            for (int i = disjoint_from; i + 1 < depth; ++i) {
                // non-consecutive vertices must be disjoint; also excludes repeats
                if (mult[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])][static_cast<std::size_t>(w)] != 0 ||
                    path[static_cast<std::size_t>(i)] == w) {
                    ok = false;
                    break;
                }
            }
            if (!ok || w == last) continue;
            path.push_back(w);
            self(self, depth + 1);
            path.pop_back();
        }
    };
    for (int v = 0; v < m; ++v) {
        path.assign(1, v);
        extend(extend, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace enlattice
