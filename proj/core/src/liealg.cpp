#include "enlattice/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace enlattice {

namespace {

// Intersection pairing between a rational vector (Pic coordinates) and a class.
Rational pair_rc(const std::vector<Rational>& h, const DivisorClass& D) {
    Rational s = h[0] * Rational(D[0]);
    for (std::size_t i = 1; i < h.size(); ++i) s -= h[i] * Rational(D[i]);
    return s;
}

Rational pair_rr(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

void add_coeff(std::map<int, Rational>& m, int k, const Rational& v) {
    auto it = m.find(k);
    if (it == m.end()) {
        if (!v.is_zero()) m.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
}

std::vector<Rational> zero_vec(int rank) { return std::vector<Rational>(static_cast<std::size_t>(rank)); }

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// Cocycle.

std::vector<int64_t> SignCocycle::coords_of(const DivisorClass& a) const {
    const std::size_t rank = basis.size();
    std::vector<int64_t> c(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) c[i] += coord[i][j] * a[j];
    return c;
}

int SignCocycle::eval(const DivisorClass& a, const DivisorClass& b) const {
    auto ca = coords_of(a), cb = coords_of(b);
    int bit = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if ((ca[i] & 1) == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            if (cb[j] & 1) bit ^= table_bit[i][j];
    }
    return bit ? -1 : 1;
}

SignCocycle build_cocycle(const PicardLattice& lat) {
    SignCocycle c;
    c.lattice = lat;
    c.basis = kperp_basis(lat);
    c.basis.push_back(lat.n == 0 ? class_H(0) : class_L(lat.n, lat.n)); // odd-norm completion
    const std::size_t rank = c.basis.size();

    // Invert the basis matrix (columns = basis vectors) over the rationals;
    // the basis is unimodular so the inverse must come out integral.
    std::vector<std::vector<Rational>> aug(rank, std::vector<Rational>(2 * rank));
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) aug[i][j] = Rational(c.basis[j][i]);
        aug[i][rank + i] = Rational(1);
    }
    for (std::size_t k = 0; k < rank; ++k) {
        std::size_t piv = k;
        while (piv < rank && aug[piv][k].is_zero()) ++piv;
        if (piv == rank) throw std::logic_error("build_cocycle: basis is singular");
        std::swap(aug[k], aug[piv]);
        Rational d = aug[k][k];
        for (std::size_t j = 0; j < 2 * rank; ++j) aug[k][j] = aug[k][j] / d;
        for (std::size_t i = 0; i < rank; ++i) {
            if (i == k || aug[i][k].is_zero()) continue;
            Rational f = aug[i][k];
            for (std::size_t j = 0; j < 2 * rank; ++j) aug[i][j] -= f * aug[k][j];
        }
    }
    c.coord.assign(rank, std::vector<int64_t>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            if (!aug[i][rank + j].is_integer())
                throw std::logic_error("build_cocycle: basis is not unimodular");
            c.coord[i][j] = aug[i][rank + j].num();
        }

    c.table_bit.assign(rank, std::vector<uint8_t>(rank, 0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            int64_t q;
            if (i < j)
                q = 0;
            else if (i > j)
                q = intersect(c.basis[i], c.basis[j]);
            else {
                int64_t norm = intersect(c.basis[i], c.basis[i]);
                q = (norm % 2 == 0) ? norm / 2 : 0;
            }
            c.table_bit[i][j] = static_cast<uint8_t>(((q % 2) + 2) % 2);
        }

    // Self-check both identities on all basis pairs before handing it out.
    const DivisorClass K = lat.K;
    for (std::size_t i = 0; i < rank; ++i) {
        const auto& a = c.basis[i];
        int64_t norm = intersect(a, a);
        if (norm % 2 == 0) {
            int want = ((norm / 2) % 2 == 0) ? 1 : -1;
            if (c.eval(a, a) != want) throw std::logic_error("build_cocycle: diagonal identity failed");
        }
        for (std::size_t j = 0; j < rank; ++j) {
            const auto& b = c.basis[j];
            int64_t e = intersect(a, b) + intersect(a, K) * intersect(b, K);
            int want = (((e % 2) + 2) % 2 == 0) ? 1 : -1;
            if (c.eval(a, b) * c.eval(b, a) != want)
                throw std::logic_error("build_cocycle: skew identity failed");
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Elements.

bool LieElement::is_zero() const { return roots.empty() && all_zero(cartan); }

LieElement& LieElement::operator+=(const LieElement& o) {
    if (cartan.size() < o.cartan.size()) cartan.resize(o.cartan.size());
    for (std::size_t i = 0; i < o.cartan.size(); ++i) cartan[i] += o.cartan[i];
    for (const auto& [k, v] : o.roots) add_coeff(roots, k, v);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (cartan.size() < o.cartan.size()) cartan.resize(o.cartan.size());
    for (std::size_t i = 0; i < o.cartan.size(); ++i) cartan[i] -= o.cartan[i];
    for (const auto& [k, v] : o.roots) add_coeff(roots, k, -v);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        roots.clear();
        for (auto& x : cartan) x = Rational(0);
        return *this;
    }
    for (auto& x : cartan) x *= s;
    for (auto& [k, v] : roots) v *= s;
    return *this;
}

int LieAlgebra::root_of(const DivisorClass& D) const {
    auto it = root_index.find(D);
    return it == root_index.end() ? -1 : it->second;
}

LieElement LieAlgebra::zero() const {
    LieElement e;
    e.cartan = zero_vec(rank());
    return e;
}

LieElement LieAlgebra::cartan_element(const DivisorClass& D) const {
    if (intersect(D, system.lattice.K) != 0)
        throw std::domain_error("cartan_element: " + D.str() + " is not orthogonal to K");
    LieElement e = zero();
    for (int i = 0; i < rank(); ++i) e.cartan[static_cast<std::size_t>(i)] = Rational(D[static_cast<std::size_t>(i)]);
    return e;
}

LieElement LieAlgebra::root_vector(const DivisorClass& D) const {
    int i = root_of(D);
    if (i < 0) throw std::domain_error("root_vector: " + D.str() + " is not a root");
    return root_vector(i);
}

LieElement LieAlgebra::root_vector(int index) const {
    if (index < 0 || index >= static_cast<int>(system.roots.size()))
        throw std::domain_error("root_vector: index out of range");
    LieElement e = zero();
    e.roots[index] = Rational(1);
    return e;
}

LieAlgebra build_lie_algebra(const PicardLattice& lat) {
    LieAlgebra alg;
    alg.system = build_root_system(lat);
    alg.cocycle = build_cocycle(lat);
    for (int i = 0; i < static_cast<int>(alg.system.roots.size()); ++i)
        alg.root_index[alg.system.roots[static_cast<std::size_t>(i)]] = i;
    return alg;
}

LieElement bracket(const LieAlgebra& alg, const LieElement& x, const LieElement& y) {
    if (static_cast<int>(x.cartan.size()) != alg.rank() || static_cast<int>(y.cartan.size()) != alg.rank())
        throw std::domain_error("bracket: operands are not elements of this algebra");
    LieElement out = alg.zero();
    const auto& roots = alg.system.roots;
    // [h, x_E] and [x_D, h'] parts
    for (const auto& [ei, c] : y.roots) {
        Rational f = pair_rc(x.cartan, roots[static_cast<std::size_t>(ei)]) * c;
        add_coeff(out.roots, ei, f);
    }
    for (const auto& [di, c] : x.roots) {
        Rational f = pair_rc(y.cartan, roots[static_cast<std::size_t>(di)]) * c;
        add_coeff(out.roots, di, -f);
    }
    // root-root part
    for (const auto& [di, cx] : x.roots) {
        const DivisorClass& D = roots[static_cast<std::size_t>(di)];
        for (const auto& [ei, cy] : y.roots) {
            const DivisorClass& E = roots[static_cast<std::size_t>(ei)];
            Rational f = cx * cy;
            if (E == -D) {
                // [x_D, x_{-D}] = h_D
                for (int i = 0; i < alg.rank(); ++i)
                    out.cartan[static_cast<std::size_t>(i)] += f * Rational(D[static_cast<std::size_t>(i)]);
            } else if (intersect(D, E) == 1) {
                int si = alg.root_of(D + E);
                if (si < 0) throw std::logic_error("bracket: root sum missing from root set");
                add_coeff(out.roots, si, Rational(alg.cocycle.eval(D, E)) * f);
            }
        }
    }
    return out;
}

Rational kappa(const LieAlgebra& alg, const LieElement& x, const LieElement& y) {
    Rational s = pair_rr(x.cartan, y.cartan);
    for (const auto& [di, cx] : x.roots) {
        int ni = alg.root_of(-alg.system.roots[static_cast<std::size_t>(di)]);
        auto it = y.roots.find(ni);
        if (it != y.roots.end()) s += cx * it->second;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Modules.

int WeightModule::weight_of(const DivisorClass& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

WeightModule make_module(std::string name, const PicardLattice& lat,
                         std::vector<DivisorClass> weights, int cartan_mult, DivisorClass twist) {
    WeightModule m;
    m.name = std::move(name);
    m.lattice = lat;
    std::sort(weights.begin(), weights.end());
    m.weights = std::move(weights);
    m.cartan_mult = cartan_mult;
    m.twist = twist.coeffs().empty() ? DivisorClass::zero(lat.n) : twist;
    for (int i = 0; i < static_cast<int>(m.weights.size()); ++i) m.index[m.weights[static_cast<std::size_t>(i)]] = i;
    return m;
}

WeightModule build_module(const LieAlgebra& alg, const std::string& name) {
    const PicardLattice& lat = alg.system.lattice;
    if (name.size() != 2 || (name[0] != 'L' && name[0] != 'R') || name[1] - '0' != lat.n)
        throw std::domain_error("build_module: unknown module '" + name + "' for n=" + std::to_string(lat.n));
    const bool lines = name[0] == 'L';
    if (!lines && lat.n == 8) throw std::domain_error("build_module: R8 is not constructed");
    auto weights = lines ? enumerate_lines(lat) : enumerate_rulings(lat);
    const bool adjoint_type = (lines && lat.n == 8) || (!lines && lat.n == 7);
    return make_module(name, lat, std::move(weights), adjoint_type ? lat.n : 0,
                       adjoint_type ? -lat.K : DivisorClass::zero(lat.n));
}

bool ModuleVec::is_zero() const { return coeff.empty() && all_zero(zero_block); }

ModuleVec& ModuleVec::operator+=(const ModuleVec& o) {
    if (zero_block.size() < o.zero_block.size()) zero_block.resize(o.zero_block.size());
    for (std::size_t i = 0; i < o.zero_block.size(); ++i) zero_block[i] += o.zero_block[i];
    for (const auto& [k, v] : o.coeff) add_coeff(coeff, k, v);
    return *this;
}

ModuleVec& ModuleVec::operator-=(const ModuleVec& o) {
    if (zero_block.size() < o.zero_block.size()) zero_block.resize(o.zero_block.size());
    for (std::size_t i = 0; i < o.zero_block.size(); ++i) zero_block[i] -= o.zero_block[i];
    for (const auto& [k, v] : o.coeff) add_coeff(coeff, k, -v);
    return *this;
}

ModuleVec& ModuleVec::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeff.clear();
        for (auto& x : zero_block) x = Rational(0);
        return *this;
    }
    for (auto& [k, v] : coeff) v *= s;
    for (auto& x : zero_block) x *= s;
    return *this;
}

ModuleVec basis_vector(const WeightModule& m, const DivisorClass& w) {
    int i = m.weight_of(w);
    if (i < 0) throw std::domain_error("basis_vector: " + w.str() + " is not a weight of " + m.name);
    ModuleVec v;
    v.coeff[i] = Rational(1);
    if (m.cartan_mult > 0) v.zero_block = zero_vec(m.lattice.n + 1);
    return v;
}

ModuleVec zero_block_vector(const WeightModule& m, const DivisorClass& e) {
    if (m.cartan_mult == 0)
        throw std::domain_error("zero_block_vector: " + m.name + " has no zero-weight block");
    if (intersect(e, m.lattice.K) != 0)
        throw std::domain_error("zero_block_vector: class must be orthogonal to K");
    ModuleVec v;
    v.zero_block = zero_vec(m.lattice.n + 1);
    for (int i = 0; i <= m.lattice.n; ++i) v.zero_block[static_cast<std::size_t>(i)] = Rational(e[static_cast<std::size_t>(i)]);
    return v;
}

ModuleVec act(const LieAlgebra& alg, const WeightModule& m, const LieElement& x, const ModuleVec& v) {
    if (m.lattice.n != alg.system.lattice.n)
        throw std::domain_error("act: module and algebra lattices differ");
    const auto& roots = alg.system.roots;
    ModuleVec out;
    if (m.cartan_mult == 0) {
        if (!v.zero_block.empty()) throw std::domain_error("act: vector has a zero block but " + m.name + " does not");
        for (const auto& [wi, c] : v.coeff) {
            const DivisorClass& w = m.weights[static_cast<std::size_t>(wi)];
            add_coeff(out.coeff, wi, pair_rc(x.cartan, w) * c);
            // root vectors shift the weight when the target is a weight
        }
        for (const auto& [di, cd] : x.roots) {
            const DivisorClass& D = roots[static_cast<std::size_t>(di)];
            for (const auto& [wi, c] : v.coeff) {
                const DivisorClass& w = m.weights[static_cast<std::size_t>(wi)];
                int ti = m.weight_of(w + D);
                if (ti >= 0) add_coeff(out.coeff, ti, Rational(alg.cocycle.eval(D, w)) * cd * c);
            }
        }
        return out;
    }

    // Adjoint-type: transport into the algebra (v_w -> x_{w+K}, zero block e
    // -> h_e), bracket there, transport back.  The twist by O(-K) is exactly
    // this shift of weights, and the Cartan cannot see it since h.K = 0.
    const DivisorClass K = m.lattice.K;
    LieElement img = alg.zero();
    for (const auto& [wi, c] : v.coeff) {
        int ri = alg.root_of(m.weights[static_cast<std::size_t>(wi)] + K);
        if (ri < 0) throw std::logic_error("act: weight+K is not a root in adjoint-type module");
        add_coeff(img.roots, ri, c);
    }
    if (!v.zero_block.empty())
        for (std::size_t i = 0; i < v.zero_block.size(); ++i) img.cartan[i] += v.zero_block[i];
    LieElement b = bracket(alg, x, img);
    for (const auto& [ri, c] : b.roots) {
        int wi = m.weight_of(roots[static_cast<std::size_t>(ri)] - K);
        if (wi < 0) throw std::logic_error("act: root-K is not a weight in adjoint-type module");
        add_coeff(out.coeff, wi, c);
    }
    out.zero_block = b.cartan;
    return out;
}

// ---------------------------------------------------------------------------
// Forms.

namespace {

void require_module(const WeightModule& m, const char* name, int n, const char* caller) {
    if (m.name != name || m.lattice.n != n)
        throw std::domain_error(std::string(caller) + ": expects module " + name);
}

// q7-transpose of the action: the LE7-valued product of two L7 vectors.
// kappa(Y, c7(u,v)) = q7(Y.u, v) for all Y gives the explicit coefficients
// below (root part on meeting pairs at E = l+m+K, Cartan part on bitangent
// pairs, with the K/2 shift projecting l into K-perp).
LieElement c7_elem(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                   const ModuleVec& v) {
    const DivisorClass K = alg.system.lattice.K;
    LieElement out = alg.zero();
    for (const auto& [li, cu] : u.coeff) {
        const DivisorClass& l = m.weights[static_cast<std::size_t>(li)];
        for (const auto& [mi, cv] : v.coeff) {
            const DivisorClass& l2 = m.weights[static_cast<std::size_t>(mi)];
            int64_t t = intersect(l, l2);
            if (t == 1) {
                DivisorClass E = l + l2 + K;
                int ri = alg.root_of(E);
                if (ri < 0) throw std::logic_error("c7: l+m+K is not a root");
                int sgn = alg.cocycle.eval(-E, l) * alg.cocycle.eval(-K - l2, K);
                add_coeff(out.roots, ri, Rational(sgn) * cu * cv);
            } else if (t == 2) {
                // l2 = -K-l: contribute eps(l,K) (l + K/2) to the Cartan part
                Rational f = Rational(alg.cocycle.eval(l, K)) * cu * cv;
                for (int i = 0; i <= alg.system.lattice.n; ++i)
                    out.cartan[static_cast<std::size_t>(i)] +=
                        f * (Rational(l[static_cast<std::size_t>(i)]) +
                             Rational(K[static_cast<std::size_t>(i)], 2));
            }
        }
    }
    return out;
}

} // namespace

Rational form_q5(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v) {
    require_module(m, "R5", 5, "form_q5");
    const DivisorClass K = alg.system.lattice.K;
    Rational s;
    for (const auto& [ri, cu] : u.coeff) {
        const DivisorClass& R = m.weights[static_cast<std::size_t>(ri)];
        int pi = m.weight_of(-K - R);
        if (pi < 0) continue;
        auto it = v.coeff.find(pi);
        if (it != v.coeff.end()) s += Rational(alg.cocycle.eval(R, K)) * cu * it->second;
    }
    return s;
}

Rational form_q7(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v) {
    require_module(m, "L7", 7, "form_q7");
    const DivisorClass K = alg.system.lattice.K;
    Rational s;
    for (const auto& [li, cu] : u.coeff) {
        const DivisorClass& l = m.weights[static_cast<std::size_t>(li)];
        int pi = m.weight_of(-K - l);
        if (pi < 0) continue;
        auto it = v.coeff.find(pi);
        if (it != v.coeff.end()) s += Rational(alg.cocycle.eval(l, K)) * cu * it->second;
    }
    return s;
}

Rational form_c6(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v, const ModuleVec& w) {
    require_module(m, "L6", 6, "form_c6");
    const DivisorClass K = alg.system.lattice.K;
    Rational s;
    for (const auto& [i1, c1] : u.coeff) {
        const DivisorClass& l1 = m.weights[static_cast<std::size_t>(i1)];
        for (const auto& [i2, c2] : v.coeff) {
            const DivisorClass& l2 = m.weights[static_cast<std::size_t>(i2)];
            if (intersect(l1, l2) != 1) continue;
            int i3 = m.weight_of(-K - l1 - l2);
            if (i3 < 0) continue;
            auto it = w.coeff.find(i3);
            if (it == w.coeff.end()) continue;
            int sgn = alg.cocycle.eval(l1, l2) * alg.cocycle.eval(l1 + l2, K);
            s += Rational(sgn) * c1 * c2 * it->second;
        }
    }
    return s;
}

Rational form_f7(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v, const ModuleVec& w, const ModuleVec& z) {
    require_module(m, "L7", 7, "form_f7");
    Rational s;
    s += kappa(alg, c7_elem(alg, m, u, v), c7_elem(alg, m, w, z));
    s += kappa(alg, c7_elem(alg, m, u, w), c7_elem(alg, m, v, z));
    s += kappa(alg, c7_elem(alg, m, u, z), c7_elem(alg, m, v, w));
    return s;
}

ModuleVec cn_product(const LieAlgebra& alg, const WeightModule& Ln, const WeightModule& Rn,
                     const ModuleVec& u, const ModuleVec& v) {
    const int n = alg.system.lattice.n;
    if (n < 1 || n > 7) throw std::domain_error("cn_product: needs 1 <= n <= 7");
    require_module(Ln, ("L" + std::to_string(n)).c_str(), n, "cn_product");
    require_module(Rn, ("R" + std::to_string(n)).c_str(), n, "cn_product");
    ModuleVec out;
    if (n == 7) {
        // Transport the LE7-valued transpose product into R7 = LE7 twisted by -K.
        LieElement e = c7_elem(alg, Ln, u, v);
        const DivisorClass K = alg.system.lattice.K;
        for (const auto& [ri, c] : e.roots) {
            int wi = Rn.weight_of(alg.system.roots[static_cast<std::size_t>(ri)] - K);
            if (wi < 0) throw std::logic_error("cn_product: root-K is not a ruling");
            add_coeff(out.coeff, wi, c);
        }
        out.zero_block = e.cartan;
        return out;
    }
    for (const auto& [i1, c1] : u.coeff) {
        const DivisorClass& l1 = Ln.weights[static_cast<std::size_t>(i1)];
        for (const auto& [i2, c2] : v.coeff) {
            const DivisorClass& l2 = Ln.weights[static_cast<std::size_t>(i2)];
            if (intersect(l1, l2) != 1) continue;
            int wi = Rn.weight_of(l1 + l2);
            if (wi < 0) throw std::logic_error("cn_product: meeting lines must sum to a ruling");
            add_coeff(out.coeff, wi, Rational(alg.cocycle.eval(l1, l2)) * c1 * c2);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// E8 through D8.

int E8Parity::spin_of(const DivisorClass& l) const {
    auto it = spin_index.find(l);
    return it == spin_index.end() ? -1 : it->second;
}

E8Parity build_e8_parity(const LieAlgebra& alg) {
    if (alg.system.lattice.n != 8) throw std::domain_error("build_e8_parity: needs n=8");
    E8Parity p;
    p.algebra = alg;
    const DivisorClass H = class_H(8);
    for (const auto& D : alg.system.roots)
        if (intersect(D, H) % 2 == 0) p.even_roots.push_back(D);
    for (const auto& l : enumerate_lines(alg.system.lattice))
        if (((intersect(l, H) % 2) + 2) % 2 == 0) p.spin_weights.push_back(l);
    std::sort(p.spin_weights.begin(), p.spin_weights.end());
    for (int i = 0; i < static_cast<int>(p.spin_weights.size()); ++i)
        p.spin_index[p.spin_weights[static_cast<std::size_t>(i)]] = i;
    return p;
}

std::map<int, Rational> e8_spin_act(const E8Parity& p, const LieElement& a,
                                    const std::map<int, Rational>& u) {
    const LieAlgebra& alg = p.algebra;
    std::map<int, Rational> out;
    for (const auto& [li, c] : u) {
        const DivisorClass& l = p.spin_weights[static_cast<std::size_t>(li)];
        add_coeff(out, li, pair_rc(a.cartan, l) * c);
    }
    for (const auto& [di, cd] : a.roots) {
        const DivisorClass& D = alg.system.roots[static_cast<std::size_t>(di)];
        for (const auto& [li, c] : u) {
            const DivisorClass& l = p.spin_weights[static_cast<std::size_t>(li)];
            int ti = p.spin_of(l + D);
            if (ti >= 0) add_coeff(out, ti, Rational(alg.cocycle.eval(D, l)) * cd * c);
        }
    }
    return out;
}

std::pair<Rational, LieElement> e8_spin_products(const E8Parity& p,
                                                 const std::map<int, Rational>& u,
                                                 const std::map<int, Rational>& v) {
    const LieAlgebra& alg = p.algebra;
    const DivisorClass K = alg.system.lattice.K;
    Rational scalar;
    LieElement gamma = alg.zero();
    for (const auto& [li, cu] : u) {
        const DivisorClass& l = p.spin_weights[static_cast<std::size_t>(li)];
        for (const auto& [mi, cv] : v) {
            const DivisorClass& m = p.spin_weights[static_cast<std::size_t>(mi)];
            int64_t t = intersect(l, m);
            if (t == 3) {
                // m = -l-2K: the scalar pairing, and the Cartan part of gamma
                scalar += cu * cv;
                Rational f = cu * cv;
                for (int i = 0; i <= 8; ++i)
                    gamma.cartan[static_cast<std::size_t>(i)] +=
                        f * Rational(l[static_cast<std::size_t>(i)] + K[static_cast<std::size_t>(i)]);
            } else if (t == 2) {
                DivisorClass E = l + m + 2 * K;
                int ri = alg.root_of(E);
                if (ri < 0) throw std::logic_error("e8_spin_products: l+m+2K is not a root");
                add_coeff(gamma.roots, ri, Rational(alg.cocycle.eval(-E, l)) * cu * cv);
            }
        }
    }
    return {scalar, gamma};
}

E8Element e8_bracket_via_d8(const E8Parity& p, const E8Element& x, const E8Element& y) {
    const LieAlgebra& alg = p.algebra;
    const DivisorClass H = class_H(8);
    auto check_even = [&](const LieElement& a) {
        for (const auto& [ri, c] : a.roots) {
            (void)c;
            if (intersect(alg.system.roots[static_cast<std::size_t>(ri)], H) % 2 != 0)
                throw std::domain_error("e8_bracket_via_d8: LD8 part has odd-parity support");
        }
    };
    check_even(x.d8);
    check_even(y.d8);
    E8Element out;
    out.d8 = bracket(alg, x.d8, y.d8);
    auto [sc, gamma] = e8_spin_products(p, x.spin, y.spin);
    (void)sc; // the scalar pairing is not part of the bracket
    out.d8 += gamma;
    out.spin = e8_spin_act(p, x.d8, y.spin);
    for (const auto& [k, val] : e8_spin_act(p, y.d8, x.spin)) add_coeff(out.spin, k, -val);
    return out;
}

std::vector<DivisorClass> e8_root_set(const E8Parity& p) {
    std::vector<DivisorClass> out = p.even_roots;
    const DivisorClass K = p.algebra.system.lattice.K;
    for (const auto& l : p.spin_weights) out.push_back(l + K);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace enlattice
