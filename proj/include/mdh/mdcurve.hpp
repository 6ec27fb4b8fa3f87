#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdh/bdiagram.hpp"
#include "mdh/eggers.hpp"
#include "mdh/puiseux.hpp"

namespace mdh {

// A component of the tangent cone. Every branch has a finite slope (the
// coefficient of x^1, zero when absent): series exponents start at 1, so a
// vertical tangent cannot occur here.
struct TangentLine {
    GaussRat slope;
    std::string id;

    friend bool operator==(const TangentLine& a, const TangentLine& b) {
        return a.slope == b.slope && a.id == b.id;
    }
};

struct TangentMultiplicities {
    TangentLine tangent;
    std::vector<std::pair<std::string, Int>> branches; // (branch id, product of k)
    Int total = 0;
};

struct MultiplicityReport {
    std::vector<TangentMultiplicities> tangents; // one_basis order
};

// The two-degree staircase of a curve. Breakpoints are 1 and the interior
// vertex heights of the tree; the module on each interval is free on the
// slice points there; a degree-0 step sends a point to the point below it,
// a degree-1 step multiplies by the weight ratio of the two points.
// Generators follow the canonical slice order, inf_basis names the branch
// of each generator on the last interval, one_basis names the tangent
// lines T1, T2, ... in slice order at b = 1.
FramedDiagram md_diagram(const Curve& c);

// The tangent lines of the curve, in one_basis order of md_diagram(c).
std::vector<TangentLine> tangent_lines(const Curve& c);

// Per tangent line, the branches on it with their multiplicities and the
// total: the framed morphism from b = inf to b = 1 in degree 1 is made of
// these numbers.
MultiplicityReport relative_multiplicities(const Curve& c);

// Rebuilds the labeled tree from a curve-shaped framed diagram. Satisfies
// tree_isomorphic(reconstruct_tree(md_diagram(c)), build_tree(c), true).
EggersWallTree reconstruct_tree(const FramedDiagram& f);

// True iff f is the diagram of one smooth branch: single breakpoint 1,
// ranks 1 and 1 in degree 0, 0 and 1 in degree 1, identity steps.
bool detect_smooth(const FramedDiagram& f);

} // namespace mdh
