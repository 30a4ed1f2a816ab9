#include "enlattice/divisor.hpp"

#include <stdexcept>

namespace enlattice {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("DivisorClass: rank mismatch in +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("DivisorClass: rank mismatch in -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(int64_t k) {
    for (auto& x : c_) x *= k;
    return *this;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string DivisorClass::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    s += ']';
    return s;
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const {
    // FNV-1a over the coefficient words.
    std::size_t h = 1469598103934665603ull;
    for (int64_t v : d.coeffs()) {
        auto u = static_cast<uint64_t>(v);
        for (int k = 0; k < 8; ++k) {
            h ^= (u >> (8 * k)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

PicardLattice make_lattice(int n) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("make_lattice: n must satisfy 0 <= n <= 10, got " + std::to_string(n));
    std::vector<int64_t> k(static_cast<std::size_t>(n) + 1, -1);
    k[0] = -3;
    return PicardLattice{n, DivisorClass(std::move(k))};
}

int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
    if (d1.size() != d2.size())
        throw std::invalid_argument("intersect: rank mismatch (" + std::to_string(d1.lattice_rank()) +
                                    " vs " + std::to_string(d2.lattice_rank()) + ")");
    int64_t s = d1[0] * d2[0];
    for (std::size_t i = 1; i < d1.size(); ++i) s -= d1[i] * d2[i];
    return s;
}

DivisorClass canonical_class(const PicardLattice& lat) { return lat.K; }

DivisorClass class_H(int n) {
    std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    return DivisorClass(std::move(c));
}

DivisorClass class_L(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("class_L: index out of range");
    std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(i)] = -1; // L_i = 0*H - (-1)*L_i
    return DivisorClass(std::move(c));
}

std::vector<DivisorClass> kperp_basis(const PicardLattice& lat) {
    const int n = lat.n;
    std::vector<DivisorClass> basis;
    basis.reserve(static_cast<std::size_t>(n));
    if (n == 0) return basis;
    if (n == 1) {
        // 3a = b1; smallest primitive solution (1; 3), self-intersection -8.
        basis.push_back(DivisorClass({1, 3}));
        return basis;
    }
    if (n == 2) {
        // L1 - L2 and a second generator so that {K, basis} spans Pic:
        // (1; 1, 2) has D.K = -3 + 3 = 0 and completes a unimodular triple.
        basis.push_back(DivisorClass({0, 1, -1}));
        basis.push_back(DivisorClass({1, 1, 2}));
        return basis;
    }
    // n >= 3: the standard simple roots of E_n already span K-perp integrally.
    {
        std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, 0);
        c[0] = 1;
        c[1] = c[2] = c[3] = 1;
        basis.push_back(DivisorClass(std::move(c))); // H - L1 - L2 - L3
    }
    for (int i = 1; i < n; ++i) {
        std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, 0);
        c[static_cast<std::size_t>(i)] = -1;
        c[static_cast<std::size_t>(i) + 1] = 1;
        basis.push_back(DivisorClass(std::move(c))); // L_i - L_{i+1}
    }
    return basis;
}

} // namespace enlattice
