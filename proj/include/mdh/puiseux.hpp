#pragma once

#include <string>
#include <vector>

#include "mdh/exactnum.hpp"

namespace mdh {

// One term c * x^e of a Puiseux expansion; c != 0 and e >= 1.
struct PuiseuxTerm {
    Rat exp;
    GaussRat coeff;

    friend bool operator==(const PuiseuxTerm& a, const PuiseuxTerm& b) {
        return a.exp == b.exp && a.coeff == b.coeff;
    }
    friend bool operator!=(const PuiseuxTerm& a, const PuiseuxTerm& b) { return !(a == b); }
};

// A branch y = sum of terms, exponents strictly increasing. The empty term
// list is the branch y = 0. Exponents below 1 are rejected at parse time:
// after a linear coordinate change every branch of a reduced germ whose
// tangent cone avoids the y-axis has order >= 1.
struct PuiseuxSeries {
    std::string id;
    std::vector<PuiseuxTerm> terms;

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return a.id == b.id && a.terms == b.terms;
    }
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }
};

// Characteristic exponent e_i in the form m_i / (k_1 * ... * k_i),
// gcd(m_i, k_i) = 1, k_i >= 2.
struct PuiseuxPair {
    Int m;
    Int k;

    friend bool operator==(const PuiseuxPair& a, const PuiseuxPair& b) {
        return a.m == b.m && a.k == b.k;
    }
};

struct Curve {
    std::vector<PuiseuxSeries> branches;
};

// Text form: signed terms like "x^(3/2) + 2x^2 - (1+i)x^3". A coefficient
// is a rational, a multiple of i, or a parenthesized Gaussian rational;
// "*" between coefficient and x is optional. "0" denotes the zero branch.
PuiseuxSeries parse_series(const std::string& text, std::string id = "");

// Canonical text form; parse_series(series_to_string(s)) == s.
std::string series_to_string(const PuiseuxSeries& s);

// Exponents whose denominator is not covered by the previous ones, in
// increasing order. Empty for a smooth branch.
std::vector<Rat> characteristic_exponents(const PuiseuxSeries& s);

// Rewrites each characteristic exponent over the denominator accumulated so
// far: e_i = m_i / (k_1...k_i).
std::vector<PuiseuxPair> puiseux_pairs(const PuiseuxSeries& s);

// lcm of the exponent denominators; equals the product of the k_i and the
// multiplicity of the branch at the origin.
Int multiplicity(const PuiseuxSeries& s);

// Least exponent where the two expansions differ (a missing term counts as
// coefficient zero). Always finite and >= 1; throws when the expansions are
// identical.
ExtRat contact(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Coefficient of x^1; zero when there is no linear term. The tangent line
// of the branch is y = slope * x.
GaussRat tangent_slope(const PuiseuxSeries& s);

// Distinct ids, nonempty branch list, pairwise distinct expansions.
void validate_curve(const Curve& c);

// Pairwise contact can depend on which Puiseux representative of a branch
// is chosen. Detects every affected pair exactly (the comparison stays in
// Q(i): a conjugated coefficient either lands back in Q(i), where it is
// compared directly, or provably leaves it and differs). Returns one
// warning message per affected pair.
std::vector<std::string> conjugate_contact_warnings(const Curve& c);

} // namespace mdh
