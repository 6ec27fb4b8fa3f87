#pragma once

#include <string>
#include <vector>

#include "mdh/eggers.hpp"
#include "mdh/exactnum.hpp"
#include "mdh/intmatrix.hpp"

namespace mdh {

// A staircase of free Z-modules indexed by b in (0, inf], constant on the
// intervals I_0 = (0,1), I_j = [t_j, t_{j+1}) and I_N = [t_N, inf] cut out
// by the breakpoints t_1 = 1 < ... < t_N. The module is right-continuous:
// the value at t_j belongs to the interval above it. steps[j] is the matrix
// of the morphism from I_{j+1} into I_j, so it has ranks[j] rows and
// ranks[j+1] columns.
struct BDiagram {
    int degree = 0;
    std::vector<Rat> breakpoints;
    std::vector<int> ranks;      // breakpoints.size() + 1 entries
    std::vector<IntMatrix> steps; // breakpoints.size() entries

    friend bool operator==(const BDiagram& a, const BDiagram& b) {
        return a.degree == b.degree && a.breakpoints == b.breakpoints && a.ranks == b.ranks &&
               a.steps == b.steps;
    }
    friend bool operator!=(const BDiagram& a, const BDiagram& b) { return !(a == b); }
};

// Shape checks: t_1 = 1, strictly increasing ladder, one rank per interval,
// one step per breakpoint with matching dimensions. Throws Error.
void validate_diagram(const BDiagram& d);

// Index of the interval containing b. Requires b > 0.
int interval_of(const BDiagram& d, const ExtRat& b);

// Rank of the module at b. Requires b > 0.
int evaluate(const BDiagram& d, const ExtRat& b);

// Matrix of the composite morphism from the interval of b1 into the
// interval of b2: the product of the steps between them, the identity when
// both lie in one interval. Requires b1 >= b2 > 0.
IntMatrix morphism_matrix(const BDiagram& d, const ExtRat& b1, const ExtRat& b2);

// Degree-0 and degree-1 staircases plus distinguished basis labels:
// inf_basis labels the generators on I_N (one per branch), one_basis those
// on the interval containing b = 1 (one per tangent line). Both label sets
// apply to the two degrees at once, whose ladders must agree.
struct FramedDiagram {
    BDiagram deg0;
    BDiagram deg1;
    std::vector<std::string> inf_basis;
    std::vector<std::string> one_basis;

    friend bool operator==(const FramedDiagram& a, const FramedDiagram& b) {
        return a.deg0 == b.deg0 && a.deg1 == b.deg1 && a.inf_basis == b.inf_basis &&
               a.one_basis == b.one_basis;
    }
    friend bool operator!=(const FramedDiagram& a, const FramedDiagram& b) { return !(a == b); }
};

void validate_framed(const FramedDiagram& f);

// The breakpoints whose step into the lower interval is not unimodular in
// at least one of the two degrees; rank changes count. Sorted.
std::vector<Rat> jumping_rates(const BDiagram& deg0, const BDiagram& deg1);
std::vector<Rat> jumping_rates(const FramedDiagram& f);

// Isomorphism invariants of one staircase: the ladder, the rank on every
// interval, and the invariant factors of the composite between every pair
// of intervals l <= u, listed with u ascending within ascending l.
struct DiagramSignature {
    std::vector<Rat> ladder;
    std::vector<int> ranks;
    std::vector<std::vector<Int>> composite_factors;

    friend bool operator==(const DiagramSignature& a, const DiagramSignature& b) {
        return a.ladder == b.ladder && a.ranks == b.ranks &&
               a.composite_factors == b.composite_factors;
    }
    friend bool operator!=(const DiagramSignature& a, const DiagramSignature& b) {
        return !(a == b);
    }
};

DiagramSignature invariant_signature(const BDiagram& d);

// Distinguished is sound: the invariants differ, so the pairs cannot be
// isomorphic. NotDistinguished only says these invariants do not separate
// the inputs; it is not a proof of isomorphism.
enum class Verdict { Distinguished, NotDistinguished };

std::string verdict_to_string(Verdict v);

Verdict compare_unframed(const BDiagram& a0, const BDiagram& a1, const BDiagram& b0,
                         const BDiagram& b1);
Verdict compare_unframed(const FramedDiagram& a, const FramedDiagram& b);

// The combinatorial content recovered from a curve-shaped framed diagram:
// per-branch characteristic jumps and pairwise contacts, in inf_basis
// order. Feeding it to build_tree_from_invariants rebuilds the tree.
struct CurveShape {
    std::vector<BranchInvariants> branches;
    std::vector<std::vector<Rat>> contacts;
};

// Validates the matrix shapes every curve diagram has (degree-0 steps are
// 0/1 with exactly one 1 per column and at least one per row, degree-1
// steps carry positive multipliers on the same support, ranks agree across
// degrees) and extracts the CurveShape. Throws Error when the input cannot
// be the diagram of a curve.
CurveShape analyze_curve_shape(const FramedDiagram& f);

// True iff relabeling a's branches can turn a into b: some bijection of
// branches matching per-branch jump lists and all pairwise contacts. Found
// by backtracking over bijections, pruning candidates by per-branch
// invariants. Requires curve-shaped inputs.
bool compare_framed(const FramedDiagram& a, const FramedDiagram& b);

} // namespace mdh
