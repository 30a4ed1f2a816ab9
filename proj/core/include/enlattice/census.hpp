#pragma once
// Complete enumeration of divisor classes cut out by numerical conditions
// (self-intersection, degree against K, linear and parity constraints), and
// the configuration searches built on top: d-gons in the line-incidence
// graph, the involution pairings, and singular fibers of a ruling.
//
// Two independent engines back enumerate_classes:
//
//  * Descent: the a-range follows from (3a + k)^2 <= n (a^2 - s) by
//    Cauchy-Schwarz, then the b_i are filled in by recursive descent with
//    running sum / sum-of-squares pruning.  This is the fast path; the
//    a-interval is finite whenever n <= 8, and often beyond.
//  * Reduction: solve the affine integer system (K-degree plus linear
//    constraints) by a Hermite-normal-form kernel, restrict the quadratic
//    form to the solution coset, and enumerate the resulting
//    negative-definite form exactly.  This also covers n = 9, 10 queries
//    whose a-interval is infinite; if the reduced form fails to be
//    negative definite the class set really is infinite and the engine
//    throws UnboundedQuery instead of guessing.
//
// The two engines cross-check each other in the test suite.

#include "enlattice/divisor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enlattice {

struct ClassQuery {
    int64_t self_int = 0; // required D.D
    int64_t k_int = 0;    // required D.K
    std::vector<std::pair<DivisorClass, int64_t>> linear_constraints; // D.C = v
    std::optional<std::pair<DivisorClass, int>> parity_constraint;    // D.C = p (mod 2)
};

enum class EnumEngine { Auto, Descent, Reduction };

// Thrown when a query provably has infinitely many solutions.
class UnboundedQuery : public std::runtime_error {
public:
    explicit UnboundedQuery(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a bounded search runs out of its node budget.  Never a silent
// partial answer.  Budgets scale with ENLATTICE_BUDGET (see search_budget).
class SearchTruncated : public std::runtime_error {
public:
    explicit SearchTruncated(const std::string& what) : std::runtime_error(what) {}
};

// Node budget for graph searches; the ENLATTICE_BUDGET environment variable
// overrides the default (10^7 nodes).
int64_t search_budget();

// All classes matching the query, in canonical (lexicographic) order.
std::vector<DivisorClass> enumerate_classes(const PicardLattice& lat, const ClassQuery& q,
                                            EnumEngine engine = EnumEngine::Auto);

// The three standing censuses: lines (-1,-1), rulings (0,-2), roots (-2,0).
std::vector<DivisorClass> enumerate_lines(const PicardLattice& lat);
std::vector<DivisorClass> enumerate_rulings(const PicardLattice& lat);
std::vector<DivisorClass> enumerate_roots(const PicardLattice& lat);

struct Pairing {
    std::string kind; // bitangent | triple-point | singular-fiber | ruling-dual
    std::vector<std::pair<DivisorClass, DivisorClass>> pairs;
};

// The n-1 singular fibers of the ruling R: pairs (C, R-C) of lines with
// C.R = 0 and C.(R-C) = 1.  Throws if R is not a ruling class.
Pairing singular_fibers(const PicardLattice& lat, const DivisorClass& R);

// rule = "bitangent"    (n=7): 28 line pairs l' = -K - l,  l.l' = 2
// rule = "triple-point" (n=8): 120 line pairs l' = -2K - l, l.l' = 3
// rule = "ruling-dual"  (n=5): 5 ruling pairs R' = -K - R,  R.R' = 2
Pairing involution_pairs(const PicardLattice& lat, const std::string& rule);

// All d-gons: sets of d distinct lines whose incidence graph is a d-cycle
// (consecutive pairs meet once, the rest are disjoint; for d = 2 the two
// lines meet twice).  Each result lists the vertices in cycle order,
// canonicalized; the list is sorted.  Throws SearchTruncated if the cycle
// search exceeds the node budget.
std::vector<std::vector<DivisorClass>> find_dgons(const PicardLattice& lat, int d);

} // namespace enlattice
