#pragma once
// Picard lattice of a blown-up projective plane and divisor-class arithmetic.
//
// A class is stored as an integer coefficient vector (a, b1, ..., bn) and
// means a*H - sum_i b_i*L_i, where H is the pullback of the hyperplane class
// and L_1..L_n are the exceptional classes of the n blown-up points.  The
// intersection form is diag(1, -1, ..., -1), so
//
//   D . D' = a a' - sum_i b_i b_i'.
//
// Everything downstream (enumeration, root systems, the Lie algebra and its
// modules, the branching verifiers) works with these vectors.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace enlattice {

class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) {}

    // Zero class on X_n (n+1 coefficients).
    static DivisorClass zero(int n) { return DivisorClass(std::vector<int64_t>(n + 1, 0)); }

    int lattice_rank() const { return static_cast<int>(c_.size()) - 1; } // = n
    std::size_t size() const { return c_.size(); }                       // = n + 1

    int64_t operator[](std::size_t i) const { return c_[i]; }
    int64_t& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(int64_t k);
    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend DivisorClass operator*(DivisorClass x, int64_t k) { return x *= k; }
    friend DivisorClass operator*(int64_t k, DivisorClass x) { return x *= k; }
    DivisorClass operator-() const;

    // Componentwise; classes of different rank never compare equal, and the
    // ordering is lexicographic on (a, b1..bn) after length.  This is the
    // canonical order used for every sorted output.
    bool operator==(const DivisorClass&) const = default;
    auto operator<=>(const DivisorClass&) const = default;

    // Compact JSON-style rendering: "[a,b1,...,bn]".
    std::string str() const;

private:
    std::vector<int64_t> c_;
};

struct DivisorClassHash {
    std::size_t operator()(const DivisorClass& d) const;
};

struct PicardLattice {
    int n = 0;          // number of blown-up points, 0 <= n <= 10
    DivisorClass K;     // canonical class (-3; -1, ..., -1)

    int rank() const { return n + 1; }
};

// Lattice for X_n.  Enumeration works for 0 <= n <= 10; the E_n structure
// built on top (rootsys/liealg) additionally requires n <= 8.
PicardLattice make_lattice(int n);

// Intersection pairing a1*a2 - sum_i b1i*b2i.  Throws on rank mismatch.
int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const PicardLattice& lat);

// n classes spanning the orthogonal complement of K over the integers
// (not just over Q: every D with D.K = 0 is an integer combination).
// All returned classes have even self-intersection; that is what the sign
// cocycle construction needs.
std::vector<DivisorClass> kperp_basis(const PicardLattice& lat);

// Convenience constructors for the standard basis classes.
DivisorClass class_H(int n);
DivisorClass class_L(int n, int i); // 1-based i
inline DivisorClass class_H(const PicardLattice& lat) { return class_H(lat.n); }
inline DivisorClass class_L(const PicardLattice& lat, int i) { return class_L(lat.n, i); }

} // namespace enlattice
