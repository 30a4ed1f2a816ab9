// Fiberwise Lie algebra over the root datum: sign cocycle, bracket, weight
// modules with their actions, invariant forms, and the D8-spinor model of E8.
//
// Scalars are exact rationals throughout; every identity here is an exact
// integer statement and floating point would only hide sign errors.
#pragma once

#include "enlattice/divisor.hpp"
#include "enlattice/rational.hpp"
#include "enlattice/rootsys.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace enlattice {

// ---------------------------------------------------------------------------
// Sign cocycle.
//
// Built on an ordered basis (the K-perp basis followed by one completion
// vector): +1 above the diagonal, (-1)^(f_i . f_j) below, and on the diagonal
// (-1)^(f.f/2) for even-norm vectors, +1 for the odd-norm completion.  The
// bimultiplicative extension then satisfies, for all classes,
//
//   eps(a,b) eps(b,a) = (-1)^(a.b + (a.K)(b.K))
//   eps(a,a)          = (-1)^(a.a/2)     whenever a.a is even
//
// which restricts to the usual skew identity (-1)^(a.b) on K-perp.  The
// correction term (a.K)(b.K) matters: two classes of odd K-degree meeting
// once pair symmetrically, which is what makes the cubic on L6 symmetric.
struct SignCocycle {
    PicardLattice lattice;
    std::vector<DivisorClass> basis;             // K-perp basis + completion, a Z-basis of Pic
    std::vector<std::vector<uint8_t>> table_bit; // eps(f_i,f_j) = (-1)^table_bit[i][j]
    std::vector<std::vector<int64_t>> coord;     // coord * (class coefficients) = basis coordinates

    // +1 or -1; both arguments may be arbitrary classes of the lattice.
    int eval(const DivisorClass& a, const DivisorClass& b) const;

    std::vector<int64_t> coords_of(const DivisorClass& a) const;
};

// Self-verifies both cocycle identities on all basis pairs; a failure is a
// construction bug and throws std::logic_error.
SignCocycle build_cocycle(const PicardLattice& lat);

// ---------------------------------------------------------------------------
// The algebra.  Elements are a rational Cartan vector in K-perp (stored in
// Pic coordinates) plus a finitely supported coefficient map over the roots.

struct LieElement {
    std::vector<Rational> cartan;    // Pic coordinates; pairs to 0 with K
    std::map<int, Rational> roots;   // root index -> coefficient

    bool is_zero() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
    bool operator==(const LieElement&) const = default;
};

struct LieAlgebra {
    RootSystem system;
    SignCocycle cocycle;
    std::unordered_map<DivisorClass, int, DivisorClassHash> root_index;

    int dim() const { return system.lattice.n + static_cast<int>(system.roots.size()); }
    int rank() const { return system.lattice.n + 1; } // Pic coordinate length
    // Index of a class in the root list, or -1.
    int root_of(const DivisorClass& D) const;

    LieElement zero() const;
    // h_D for D in K-perp (rational multiples allowed via scaling afterwards).
    LieElement cartan_element(const DivisorClass& D) const;
    LieElement root_vector(const DivisorClass& D) const;
    LieElement root_vector(int index) const;
};

LieAlgebra build_lie_algebra(const PicardLattice& lat);

// [h,h'] = 0;  [h, x_D] = (h.D) x_D;  [x_D, x_E] = eps(D,E) x_{D+E} when
// D.E = 1, = h_D when E = -D, = 0 otherwise.
LieElement bracket(const LieAlgebra& alg, const LieElement& x, const LieElement& y);

// Invariant pairing normalized to kappa(x_D, x_{-D}) = 1 and the intersection
// form on the Cartan part.
Rational kappa(const LieAlgebra& alg, const LieElement& x, const LieElement& y);

// ---------------------------------------------------------------------------
// Weight modules.

struct WeightModule {
    std::string name;                  // "L6", "R5", "W", "S+", ...
    PicardLattice lattice;
    std::vector<DivisorClass> weights; // sorted
    int cartan_mult = 0;               // rank of the zero-weight block (L8: 8, R7: 7)
    DivisorClass twist;                // bookkeeping only; never enters the action
    std::unordered_map<DivisorClass, int, DivisorClassHash> index;

    int weight_of(const DivisorClass& w) const;
    int total_rank() const { return static_cast<int>(weights.size()) + cartan_mult; }
};

// "L1".."L8" (line classes) and "R1".."R7" (ruling classes); the digit must
// match the algebra's n.  L8 and R7 are adjoint-type: cartan_mult = n and
// twist = -K; all others are minuscule with cartan_mult = 0.
WeightModule build_module(const LieAlgebra& alg, const std::string& name);

// Custom module from an explicit weight list (used by the branching layer).
WeightModule make_module(std::string name, const PicardLattice& lat,
                         std::vector<DivisorClass> weights, int cartan_mult = 0,
                         DivisorClass twist = DivisorClass());

struct ModuleVec {
    std::map<int, Rational> coeff;     // weight index -> coefficient
    std::vector<Rational> zero_block;  // Pic coordinates of a K-perp vector; empty if cartan_mult = 0

    bool is_zero() const;
    ModuleVec& operator+=(const ModuleVec& o);
    ModuleVec& operator-=(const ModuleVec& o);
    ModuleVec& operator*=(const Rational& s);
    friend ModuleVec operator+(ModuleVec a, const ModuleVec& b) { return a += b; }
    friend ModuleVec operator-(ModuleVec a, const ModuleVec& b) { return a -= b; }
    bool operator==(const ModuleVec&) const = default;
};

ModuleVec basis_vector(const WeightModule& m, const DivisorClass& w);
// Zero-weight block element tagged by a K-perp class (adjoint-type modules only).
ModuleVec zero_block_vector(const WeightModule& m, const DivisorClass& e);

// Module action.  Minuscule: h.v_w = (h.w) v_w and x_D.v_w = eps(D,w) v_{w+D}
// when w+D is a weight.  Adjoint-type (R7, L8): transport v_w -> x_{w+K},
// zero-block e -> h_e, act through the bracket, transport back.  In
// particular x_D sends v_{-K-D} into the zero block with coefficient +1, and
// a zero-block element e to -(D.e) v_{D-K}.
ModuleVec act(const LieAlgebra& alg, const WeightModule& m, const LieElement& x,
              const ModuleVec& v);

// ---------------------------------------------------------------------------
// Invariant forms.  Wrong module -> std::domain_error.

// Symmetric pairing on R5, supported on ruling pairs R + R' = -K.
Rational form_q5(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v);

// Symmetric cubic on L6, supported on triangles l1 + l2 + l3 = -K.
Rational form_c6(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v, const ModuleVec& w);

// Pairing on L7, supported on pairs l + l' = -K.  Antisymmetric: the 56 is
// quaternionic and carries a symplectic, not orthogonal, invariant form.
Rational form_q7(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v);

// Symmetric quartic on L7: sum over the three pair groupings of
// kappa(c7(.,.), c7(.,.)) where c7 is the q7-transpose of the action.
Rational form_f7(const LieAlgebra& alg, const WeightModule& m, const ModuleVec& u,
                 const ModuleVec& v, const ModuleVec& w, const ModuleVec& z);

// L_n x L_n -> R_n: meeting lines multiply to their sum with a cocycle sign;
// at n=7 bitangent pairs (l.l' = 2) land in the zero-weight block, matching
// the transpose construction used for f7.
ModuleVec cn_product(const LieAlgebra& alg, const WeightModule& Ln, const WeightModule& Rn,
                     const ModuleVec& u, const ModuleVec& v);

// ---------------------------------------------------------------------------
// E8 through D8: even roots + half spinor.

struct E8Parity {
    LieAlgebra algebra;                     // the full E8 algebra (shared cocycle)
    std::vector<DivisorClass> even_roots;   // D.H even, 112 of them
    std::vector<DivisorClass> spin_weights; // lines with l.H even, 128 of them
    std::unordered_map<DivisorClass, int, DivisorClassHash> spin_index;

    int spin_of(const DivisorClass& l) const;
};

E8Parity build_e8_parity(const LieAlgebra& alg);

// Element of LD8 + S+: a LieElement supported on even roots plus a spinor
// coefficient map.
struct E8Element {
    LieElement d8;
    std::map<int, Rational> spin;

    bool operator==(const E8Element&) const = default;
};

// LD8 acting on the half spinor: Cartan diagonally, x_D by eps(D,l) into l+D.
std::map<int, Rational> e8_spin_act(const E8Parity& p, const LieElement& a,
                                    const std::map<int, Rational>& u);

// The two spinor products: the scalar pairing (supported on l' = -l-2K, all
// coefficients +1) and the LD8-valued antisymmetric product gamma, defined as
// the kappa-dual of a -> scalar(beta(a)u, v).
std::pair<Rational, LieElement> e8_spin_products(const E8Parity& p,
                                                 const std::map<int, Rational>& u,
                                                 const std::map<int, Rational>& v);

// [a+u, b+v] = [a,b] + gamma(u,v) + beta(a)v - beta(b)u.
E8Element e8_bracket_via_d8(const E8Parity& p, const E8Element& x, const E8Element& y);

// Root set of the spinor model: even roots plus {l + K}; must equal the
// direct root census.
std::vector<DivisorClass> e8_root_set(const E8Parity& p);

} // namespace enlattice
