// Root system living on the K-orthogonal sublattice: simple roots, Cartan
// matrix, Dynkin-type recognition, reflections and Weyl orbits.
#pragma once

#include "enlattice/census.hpp"
#include "enlattice/divisor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enlattice {

struct CartanMatrix {
    std::vector<std::vector<int>> entries; // A_ii = 2, A_ij = -(a_i . a_j)

    int rank() const { return static_cast<int>(entries.size()); }
    bool operator==(const CartanMatrix&) const = default;
};

struct RootSystem {
    PicardLattice lattice;
    std::vector<DivisorClass> roots;        // sorted, closed under negation
    std::vector<DivisorClass> simple_roots; // standard blowup base
    CartanMatrix cartan;
    std::string cartan_type; // "E6", "A2xA1", ...; "none" when no roots
};

// Roots are the census classes with D^2 = -2, D.K = 0.  The simple roots are
// the standard base H-L1-L2-L3, L1-L2, ..., L_{n-1}-L_n, trimmed to what
// exists at small n.  Valid for 0 <= n <= 8 (n = 0, 1 give an empty system).
RootSystem build_root_system(const PicardLattice& lat);

// Reflection in a norm -2 class: D + (D.root) root.  Fixes K, preserves the
// form.  Throws std::domain_error unless root^2 = -2.
DivisorClass reflect(const DivisorClass& D, const DivisorClass& root);

// BFS closure of seed under the simple reflections, sorted.  Throws
// SearchTruncated if the orbit would exceed cap.
std::vector<DivisorClass> weyl_orbit(const DivisorClass& seed, const RootSystem& sys,
                                     int64_t cap = search_budget());

// Word of simple roots r1, ..., rk with s_{rk} ... s_{r1} (from) = to, found
// by BFS from `from`; empty word when from == to, nullopt when `to` is not in
// the orbit.  Same cap discipline as weyl_orbit.
std::optional<std::vector<DivisorClass>> weyl_path(const RootSystem& sys, const DivisorClass& from,
                                                   const DivisorClass& to,
                                                   int64_t cap = search_budget());

// Order of the group generated by the simple reflections, computed by closing
// the set of induced root permutations.  Supported for n <= 6 only; the E7
// and E8 groups are too large for full closure at desk scale.
int64_t weyl_group_order(const RootSystem& sys);

// Cartan matrix of an arbitrary base candidate.
CartanMatrix cartan_matrix_of(const std::vector<DivisorClass>& simple_roots);

// Dynkin type of a simply-laced Cartan matrix: connected components matched
// against path and fork shapes.  Components joined with "x", largest first.
std::string cartan_type_of(const CartanMatrix& cartan);

// Extract a base from a full root list: positive system via a generic linear
// functional, then the indecomposable positives.
std::vector<DivisorClass> simple_roots_of(const PicardLattice& lat,
                                          const std::vector<DivisorClass>& roots);

} // namespace enlattice
