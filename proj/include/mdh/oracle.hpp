#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mdh/intmatrix.hpp"
#include "mdh/puiseux.hpp"

namespace mdh {

// One component of the truncated curve: the branches whose expansions agree
// termwise once every exponent above b is dropped. kappa is the lcm of the
// surviving exponent denominators, which is the multiplicity of the
// truncated branch.
struct TruncationClass {
    PuiseuxSeries representative; // the truncation itself, id of the first member
    std::vector<std::string> members; // branch ids, in input order
    Int kappa = 1;
};

// Components of the truncation of c at height b >= 1, computed directly on
// the series with no tree in sight. Classes come out in the same order as
// the points of the level slice: where two classes diverge, the one whose
// side contains the smaller input index goes first.
std::vector<TruncationClass> truncation_components(const Curve& c, const Rat& b);

// The covering between the truncations at two heights b1 >= b2 >= 1: one
// base circle per class at b2, and over it one sheet per class at b1 that
// refines it, winding kappa(b1)/kappa(b2) times.
struct CircleCover {
    std::vector<std::vector<Int>> sheets; // sheets[i]: degrees over base circle i
};

CircleCover circle_cover(const Curve& c, const Rat& b1, const Rat& b2);

// Realizes the cover simplicially (base circles on 3 vertices, a degree-k
// sheet on 3k vertices collapsing labels mod 3) and returns the matrices it
// induces on H0 and H1, bases ordered by class. Everything here comes from
// series truncation and chain-level topology, independent of the diagram
// construction it is meant to check.
std::pair<IntMatrix, IntMatrix> covering_maps(const Curve& c, const Rat& b1, const Rat& b2);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty when the check passes
};

struct CrosscheckReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int failures() const;
};

// Runs both oracles against the diagram pipeline: at every breakpoint and
// between them, class counts vs ranks, kappas vs slice weights, members vs
// slice branch sets; for every ordered pair of heights, covering-induced
// matrices vs the diagram morphisms in both degrees. Failures are reported,
// never thrown.
CrosscheckReport crosscheck(const Curve& c);

// Deterministic curve generator for randomized cross-checks. Branches keep
// exponents <= 6 and multiplicities <= 8 so trees stay readable; reducible
// curves are grown by mutating prefixes of earlier branches, which makes
// deep contacts common instead of vanishingly rare.
class CurveSampler {
public:
    explicit CurveSampler(unsigned long seed);

    Curve random_irreducible(); // single branch
    Curve random_curve();       // 1 to 6 branches, ids B1..Bn

private:
    std::mt19937_64 rng_;

    long pick(long lo, long hi);
    GaussRat random_coeff();
    // appends further terms to a prefix; den is the lcm of the prefix
    // exponent denominators, last the final prefix exponent (or 1)
    void extend_tail(std::vector<PuiseuxTerm>& terms, Int den, Rat last);
    PuiseuxSeries random_branch(const std::string& id);
};

} // namespace mdh
