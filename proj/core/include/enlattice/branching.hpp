// Branching layer: decompositions of the line, ruling, and adjoint modules
// under the subalgebras cut out by a fixed line, a fixed ruling, a ruling
// with a chosen section, the even/odd parity splitting on X8, and the small-n
// coincidences and degeneration counts that go with them.
//
// Every decomposition is verified as an exact multiset identity between
// divisor classes: the union of the block weights (after their twists, plus
// any zero-weight copies) must equal the weight content of the target module
// recomputed independently from the census.  Nothing here is checked "up to
// dimension" only.
#pragma once

#include "enlattice/census.hpp"
#include "enlattice/divisor.hpp"
#include "enlattice/liealg.hpp"
#include "enlattice/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enlattice {

// ---------------------------------------------------------------------------
// Subalgebra descriptors (the CLI-facing handle).

struct SubalgebraSpec {
    enum class Kind {
        FixedLine,     // classes = {L}, a line
        FixedRuling,   // classes = {R}, a ruling
        LineSection,   // classes = {R, S}: ruling + line section (S.R = 1)
        RulingSection, // classes = {R, T}: ruling + norm -2 section (T.R = 1)
        Parity,        // classes = 8 pairwise disjoint lines on X8
        A1Pair,        // classes = {L1, L2}: disjoint lines on X8
    };

    Kind kind;
    std::vector<DivisorClass> classes;

    static SubalgebraSpec fixed_line(DivisorClass L);
    static SubalgebraSpec fixed_ruling(DivisorClass R);
    static SubalgebraSpec line_section(DivisorClass R, DivisorClass S);
    static SubalgebraSpec ruling_section(DivisorClass R, DivisorClass T);
    static SubalgebraSpec parity(std::vector<DivisorClass> lines);
    static SubalgebraSpec a1_pair(DivisorClass L1, DivisorClass L2);
};

// Checks the classes against the census conditions of the kind (membership,
// degrees, disjointness, n where the construction demands it).  Throws
// std::domain_error with a usable message on the first violation.
void validate_spec(const PicardLattice& lat, const SubalgebraSpec& spec);

// ---------------------------------------------------------------------------
// Decompositions as verified multiset identities.

// One direct summand of a decomposition.  The weights are stored before the
// twist so the block keeps its census meaning; repeats are allowed (exterior
// square blocks produce them).  A nonzero cartan_mult contributes that many
// copies of zero_class to the weight content.
struct Component {
    std::string label;
    std::vector<DivisorClass> weights;
    DivisorClass twist;      // added to every weight; empty means no twist
    int cartan_mult = 0;
    DivisorClass zero_class; // absolute class carried by the zero-weight copies

    // Twisted weights plus the zero-weight copies, sorted.
    std::vector<DivisorClass> effective() const;
    int total_rank() const { return static_cast<int>(weights.size()) + cartan_mult; }
};

struct Decomposition {
    std::string id;
    WeightModule target;
    std::vector<Component> components;
    bool verified = false;          // set by verify_decomposition
    std::vector<std::string> notes; // block sizes, special cases, failure detail

    int total_rank() const;
};

// Weight content of a module / decomposition as a sorted multiset: weights
// plus cartan_mult copies of the twist class (the zero-weight block of an
// adjoint-type module sits at the twist).
std::vector<DivisorClass> effective_weights(const WeightModule& m);
std::vector<DivisorClass> effective_weights(const Decomposition& d);

// Weight modules straight from the census, independent of any LieAlgebra:
// "L2".."L8" (lines), "R2".."R7" (rulings), "LE0".."LE8" (roots, with a
// zero-weight block of rank n).  L8 and R7 carry their rank-n zero block at
// -K.  The digit must match lat.n; unknown names throw std::domain_error.
WeightModule named_module(const PicardLattice& lat, const std::string& name);

// Multiset equality of the component union against the expected weight
// content (resp. against the target's own content recomputed through
// named_module).  Sets d.verified and appends a diff note on failure.
bool verify_decomposition(Decomposition& d, const std::vector<DivisorClass>& expected);
bool verify_decomposition(Decomposition& d);

// One named check with the two compared counts; set identities report their
// sizes and put any counterexample in detail.
struct IdentityResult {
    std::string id;    // stable, e.g. "fixed-line/ident/pullback-lines"
    std::string label; // human-readable statement
    int64_t lhs = 0;
    int64_t rhs = 0;
    bool ok = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Fixed line: blow down L and read every module through the blowdown.
//
// The line module splits by t = l.L into O(L), pulled-back lines, pulled-back
// rulings twisted by -L, and for n = 7, 8 the extra anticanonical blocks; the
// adjoint splits into the downstairs adjoint, a trivial summand (an A1 block
// when n = 8), and the +/-1 eigenblocks.  Each block membership is certified
// by moving L to the last blowup class with a Weyl word and truncating.

struct FixedLineResult {
    DivisorClass line;
    bool quadric_case = false; // n = 2, L = H-L1-L2: the blowdown target is a quadric
    Decomposition line_blocks;
    Decomposition adjoint_blocks;
    std::vector<IdentityResult> identifications;
    std::vector<std::string> notes;
    bool ok = false;
};

// Valid for 2 <= n <= 8; throws std::domain_error if L is not a line.
FixedLineResult decompose_fixed_line(const PicardLattice& lat, const DivisorClass& L);

// ---------------------------------------------------------------------------
// Fixed ruling: the orthogonal D_{n-1} datum.
//
// W = lines with l.R = 0 (rank 2n-2), S+ = lines with l.R = 1, S- = norm -2
// classes of K-degree 0 with T.R = 1 (each of rank 2^{n-2}); the n-1 singular
// fibers pair W against itself.  For n <= 7 the line, ruling, and adjoint
// modules decompose into these sets with explicit twists; at n = 8 the module
// decompositions are carried by the parity construction instead and only the
// sets, fibers, and dualities are produced here.

struct FixedRulingResult {
    DivisorClass ruling;
    std::vector<DivisorClass> w_classes;
    std::vector<DivisorClass> s_plus;
    std::vector<DivisorClass> s_minus;
    Pairing fibers;
    RootSystem d_sub; // roots orthogonal to R with their own base and type
    std::optional<Decomposition> line_blocks;    // n <= 7
    std::optional<Decomposition> ruling_blocks;  // n <= 7
    std::optional<Decomposition> adjoint_blocks; // n <= 7
    std::vector<IdentityResult> dualities;
    std::vector<std::string> notes;
    bool ok = false;
};

// Valid for 2 <= n <= 8; throws std::domain_error if R is not a ruling.
FixedRulingResult decompose_fixed_ruling(const PicardLattice& lat, const DivisorClass& R);

// Clifford multiplication closure: S - C lands in S- whenever S.C = 0 with
// S in S+, C in W, and T + C lands in S+ whenever T.C = 1 with T in S-.
// Any qualifying pair that escapes its target set is recorded.
struct CliffordReport {
    DivisorClass ruling;
    int64_t pairs_checked = 0;
    std::vector<std::string> violations;
    bool ok = false;
};

CliffordReport clifford_check(const PicardLattice& lat, const DivisorClass& R);

// ---------------------------------------------------------------------------
// Ruling with a chosen section: the A_{n-2} datum.
//
// The fiber components meeting the section form a set Lambda of n-1 pairwise
// disjoint lines; W, S+, S- are then sums of exterior powers of Lambda with
// explicit twists, and the D_{n-1} adjoint splits off the A_{n-2} part fixing
// both R and the section.  Two variants: the section is a line in S+, or a
// norm -2 class in S- (shifted twists).

struct SectionResult {
    DivisorClass ruling;
    DivisorClass section;
    bool minus_variant = false;
    std::vector<DivisorClass> lambda; // n-1 disjoint classes, sorted
    DivisorClass det_class;           // sum of lambda; matched against the closed form
    Decomposition w_blocks;
    Decomposition s_plus_blocks;
    Decomposition s_minus_blocks;
    Decomposition d_blocks; // LD_{n-1} against LA_{n-2} + O + both exterior-square twists
    RootSystem a_sub;       // roots orthogonal to both R and the section
    std::vector<IdentityResult> checks;
    std::vector<std::string> notes;
    bool ok = false;
};

// Valid for 2 <= n <= 8.  minus_variant = false expects a line section
// (S.R = 1), true a norm -2 section (T.R = 1); mismatches throw
// std::domain_error.
SectionResult decompose_section(const PicardLattice& lat, const DivisorClass& R,
                                const DivisorClass& section, bool minus_variant);

// ---------------------------------------------------------------------------
// Parity on X8: the D8 datum from 8 pairwise disjoint lines.
//
// The 16 classes l_i and -l_i - K - H' (H' = (sum l_i - K)/3, integral by
// construction) pair into a rank-16 orthogonal datum W8 with values in
// O(-K-H'); its exterior square, twisted back, carries the 8 zero weights and
// the 112 roots of even H'-degree, and the 128 lines of even H'-degree form
// the half-spinor block.  Line and adjoint modules split as D8-even parts
// plus spinor parts.

struct ParityResult {
    DivisorClass h_class;                   // (sum of the lines - K)/3
    std::vector<DivisorClass> w_summands;   // 16, sorted
    Pairing w_pairs;                        // a + b = -K - H' pairing, 8 pairs
    std::vector<DivisorClass> even_roots;   // D.H' even, 112
    std::vector<DivisorClass> spin_weights; // lines with l.H' even, 128
    Decomposition d_blocks;                 // exterior square against roots + zeros
    Decomposition line_blocks;              // L8 = (even part twisted by -K) + spinors
    Decomposition adjoint_blocks;           // LE8 = even part + (spinors twisted by K)
    std::vector<IdentityResult> checks;
    std::vector<std::string> notes;
    bool ok = false;
};

// Requires n = 8 and 8 pairwise disjoint lines; throws std::domain_error
// otherwise (including when the H' class fails to be integral).
ParityResult decompose_parity_d8(const PicardLattice& lat,
                                 const std::vector<DivisorClass>& lines);

// Roots orthogonal to L1 - L2 for two disjoint lines on X8: the centralizer
// subsystem, which must come out of type E7.  Throws std::domain_error on a
// bad pair.
RootSystem e7_centralizer(const PicardLattice& lat, const DivisorClass& L1,
                          const DivisorClass& L2);

// ---------------------------------------------------------------------------
// Small-n coincidences, verified as explicit bijections of class sets:
// lines/rulings on X2, the two product presentations of the 6 lines on X3,
// the 20 roots of X4 as ruling differences, and the 10 lines of X4 shifted by
// -K as sums of 3 distinct rulings.
std::vector<IdentityResult> small_n_checks();

// ---------------------------------------------------------------------------
// Degenerations: combinatorial label models for four special surfaces.
//
// Each case builds the advertised labels (points, rulings, components, point
// pairs of the branch/intersection loci), counts them against the census
// totals, and checks the stated support rules for the invariant forms where
// the case provides one.  This is a verification of the label combinatorics
// only; no geometry is represented.

enum class DegenerationCase {
    X5TwoQuadrics,  // quartic curve degenerating to two quadrics: 16 = 8 + 8
    X6ThreePlanes,  // cubic surface degenerating to three planes: 27 = 9 + 9 + 9
    X6PlaneQuadric, // cubic degenerating to a plane + quadric: 27 = 15 + 12
    X7DoublePlane,  // double plane branched over a quartic: 56 = 28 + 28
};

struct DegenerationReport {
    DegenerationCase which;
    std::string title;
    std::string scope; // what the label model does and does not certify
    std::vector<IdentityResult> identities;
    bool ok = false;
};

DegenerationReport degeneration_counts(DegenerationCase c);

} // namespace enlattice
