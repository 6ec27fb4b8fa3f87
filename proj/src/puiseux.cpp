#include "mdh/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace mdh {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    ParseError err(const std::string& msg) const { return ParseError(msg, pos); }
};

bool at_digit(const Cursor& c) {
    return std::isdigit(static_cast<unsigned char>(c.peek()));
}

Int read_uint(Cursor& c) {
    if (!at_digit(c)) throw c.err("expected digits");
    std::size_t start = c.pos;
    while (at_digit(c)) ++c.pos;
    return Int(c.s.substr(start, c.pos - start));
}

// p or p/q, unsigned; whitespace allowed around '/'
Rat read_urat(Cursor& c) {
    Int num = read_uint(c);
    std::size_t save = c.pos;
    c.skip_ws();
    if (c.peek() == '/') {
        ++c.pos;
        c.skip_ws();
        Int den = read_uint(c);
        if (den == 0) throw c.err("zero denominator");
        return Rat(num, den);
    }
    c.pos = save;
    return Rat(num);
}

Rat read_signed_rat(Cursor& c) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
        c.skip_ws();
    }
    Rat r = read_urat(c);
    return sign < 0 ? Rat(-r) : r;
}

// one signed atom of a coefficient: i | p/q | p/q i
GaussRat read_atom(Cursor& c, int sign) {
    if (c.peek() == 'i') {
        ++c.pos;
        return GaussRat(Rat(0), Rat(sign));
    }
    Rat r = read_urat(c);
    if (sign < 0) r = -r;
    if (c.peek() == 'i') {
        ++c.pos;
        return GaussRat(Rat(0), r);
    }
    return GaussRat(r, Rat(0));
}

// "(a+bi)" optionally followed by "/q"
GaussRat read_paren_coeff(Cursor& c) {
    ++c.pos; // consume '('
    c.skip_ws();
    GaussRat acc;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
        c.skip_ws();
    }
    while (true) {
        acc = acc + read_atom(c, sign);
        c.skip_ws();
        if (c.peek() == ')') {
            ++c.pos;
            break;
        }
        if (c.peek() == '+') sign = 1;
        else if (c.peek() == '-') sign = -1;
        else throw c.err("expected '+', '-' or ')' in coefficient");
        ++c.pos;
        c.skip_ws();
    }
    std::size_t save = c.pos;
    c.skip_ws();
    if (c.peek() == '/') {
        ++c.pos;
        c.skip_ws();
        Int den = read_uint(c);
        if (den == 0) throw c.err("zero denominator");
        Rat d(den);
        acc = GaussRat(acc.re / d, acc.im / d);
    } else {
        c.pos = save;
    }
    return acc;
}

PuiseuxTerm read_term(Cursor& c, int sign) {
    GaussRat coeff(Rat(1));
    bool have_coeff = false;
    if (c.peek() == '(') {
        coeff = read_paren_coeff(c);
        have_coeff = true;
    } else if (at_digit(c) || c.peek() == 'i') {
        coeff = read_atom(c, 1);
        have_coeff = true;
    }
    if (sign < 0) coeff = -coeff;

    if (have_coeff) {
        c.skip_ws();
        if (c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
        }
    }
    if (c.peek() != 'x') {
        if (have_coeff)
            throw c.err("constant term: every term needs a power of x with exponent at least 1");
        throw c.err("expected a term");
    }
    ++c.pos;

    Rat exp(1);
    std::size_t save = c.pos;
    c.skip_ws();
    if (c.peek() == '^') {
        ++c.pos;
        c.skip_ws();
        if (c.peek() == '(') {
            ++c.pos;
            c.skip_ws();
            exp = read_signed_rat(c);
            c.skip_ws();
            if (c.peek() != ')') throw c.err("expected ')' after exponent");
            ++c.pos;
        } else {
            exp = read_signed_rat(c);
        }
    } else {
        c.pos = save;
    }

    if (exp < 1)
        throw c.err("exponent " + rat_to_string(exp) +
                    " is below 1; change coordinates (e.g. swap the roles of x and y) so that "
                    "every branch has order at least 1");
    if (coeff.is_zero()) throw c.err("term with zero coefficient");
    return PuiseuxTerm{exp, coeff};
}

} // namespace

PuiseuxSeries parse_series(const std::string& text, std::string id) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw c.err("empty series");

    // the zero branch
    if (c.peek() == '0') {
        std::size_t save = c.pos;
        ++c.pos;
        c.skip_ws();
        if (c.done()) return PuiseuxSeries{std::move(id), {}};
        c.pos = save;
    }

    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
        c.skip_ws();
    }

    std::vector<PuiseuxTerm> terms;
    while (true) {
        terms.push_back(read_term(c, sign));
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+') sign = 1;
        else if (c.peek() == '-') sign = -1;
        else throw c.err("expected '+' or '-' between terms");
        ++c.pos;
        c.skip_ws();
    }

    std::sort(terms.begin(), terms.end(),
              [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exp < b.exp; });
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].exp == terms[i - 1].exp)
            throw ParseError("exponent " + rat_to_string(terms[i].exp) +
                                 " appears in two terms; combine them first",
                             c.pos);

    return PuiseuxSeries{std::move(id), std::move(terms)};
}

std::string series_to_string(const PuiseuxSeries& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const PuiseuxTerm& t : s.terms) {
        const GaussRat& c = t.coeff;
        int sgn = 1;
        GaussRat mag = c;
        if (c.is_real() || c.re == 0) { // fold the sign of real or purely imaginary values
            const Rat& v = c.is_real() ? c.re : c.im;
            if (v < 0) {
                sgn = -1;
                mag = -c;
            }
        }
        if (first) {
            if (sgn < 0) out += "-";
        } else {
            out += (sgn < 0) ? " - " : " + ";
        }

        if (mag == GaussRat(1)) {
            // coefficient 1 is implicit
        } else if (mag == GaussRat(Rat(0), Rat(1))) {
            out += "i";
        } else if (mag.is_real() && rat_den(mag.re) == 1) {
            out += rat_num(mag.re).str();
        } else {
            out += "(" + mag.str() + ")";
        }

        if (t.exp == 1) out += "x";
        else if (rat_den(t.exp) == 1) out += "x^" + rat_num(t.exp).str();
        else out += "x^(" + rat_to_string(t.exp) + ")";
        first = false;
    }
    return out;
}

std::vector<Rat> characteristic_exponents(const PuiseuxSeries& s) {
    std::vector<Rat> out;
    Int d = 1; // lcm of denominators seen so far
    for (const PuiseuxTerm& t : s.terms) {
        Int den = rat_den(t.exp);
        if (d % den != 0) {
            out.push_back(t.exp);
            d = lcm(d, den);
        }
    }
    return out;
}

std::vector<PuiseuxPair> puiseux_pairs(const PuiseuxSeries& s) {
    std::vector<PuiseuxPair> out;
    Int rho = 1; // product of the k_i so far
    for (const Rat& e : characteristic_exponents(s)) {
        Rat q = e * Rat(rho);
        out.push_back(PuiseuxPair{rat_num(q), rat_den(q)});
        rho *= rat_den(q);
    }
    return out;
}

Int multiplicity(const PuiseuxSeries& s) {
    Int d = 1;
    for (const PuiseuxTerm& t : s.terms) d = lcm(d, rat_den(t.exp));
    return d;
}

ExtRat contact(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].exp < b.terms[j].exp) return ExtRat(a.terms[i].exp);
        if (b.terms[j].exp < a.terms[i].exp) return ExtRat(b.terms[j].exp);
        if (a.terms[i].coeff != b.terms[j].coeff) return ExtRat(a.terms[i].exp);
        ++i;
        ++j;
    }
    if (i < a.terms.size()) return ExtRat(a.terms[i].exp);
    if (j < b.terms.size()) return ExtRat(b.terms[j].exp);
    std::string na = a.id.empty() ? "<first>" : a.id;
    std::string nb = b.id.empty() ? "<second>" : b.id;
    throw Error("branches " + na + " and " + nb + " have identical Puiseux expansions");
}

GaussRat tangent_slope(const PuiseuxSeries& s) {
    for (const PuiseuxTerm& t : s.terms) {
        if (t.exp == 1) return t.coeff;
        if (t.exp > 1) break;
    }
    return GaussRat();
}

void validate_curve(const Curve& c) {
    if (c.branches.empty()) throw Error("curve has no branches");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < c.branches.size(); ++i) {
        const std::string& id = c.branches[i].id;
        if (id.empty())
            throw Error("branch " + std::to_string(i + 1) + " has no id");
        if (!ids.insert(id).second) throw Error("duplicate branch id " + id);
    }
    for (std::size_t i = 0; i < c.branches.size(); ++i)
        for (std::size_t j = i + 1; j < c.branches.size(); ++j)
            contact(c.branches[i], c.branches[j]); // throws when expansions coincide
}

namespace {

// Contact of (the t-th conjugate of a) with b. The conjugate multiplies the
// coefficient at x^(j/kappa) by exp(2*pi*i*t*j/kappa). That factor lies in
// Q(i) exactly when kappa divides 4*t*j, in which case it is a power of i
// and the comparison is exact; otherwise the rotated coefficient leaves
// Q(i) and cannot equal the one of b.
ExtRat contact_conj(const PuiseuxSeries& a, const Int& kappa, const Int& t,
                    const PuiseuxSeries& b) {
    auto conj_equal = [&](const GaussRat& alpha, const Rat& exp, const GaussRat& beta) {
        if (alpha.is_zero()) return beta.is_zero();
        Rat je = exp * Rat(kappa);
        Int jj = rat_num(je); // integral: kappa is the lcm of a's denominators
        Int phi = (t * jj) % kappa;
        Int four_phi = 4 * phi;
        if (four_phi % kappa != 0) return false;
        long u = static_cast<long>(four_phi / kappa);
        return alpha.times_i_pow(u) == beta;
    };

    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].exp < b.terms[j].exp) return ExtRat(a.terms[i].exp);
        if (b.terms[j].exp < a.terms[i].exp) return ExtRat(b.terms[j].exp);
        if (!conj_equal(a.terms[i].coeff, a.terms[i].exp, b.terms[j].coeff))
            return ExtRat(a.terms[i].exp);
        ++i;
        ++j;
    }
    if (i < a.terms.size()) return ExtRat(a.terms[i].exp);
    if (j < b.terms.size()) return ExtRat(b.terms[j].exp);
    return ExtRat::infinity(); // the conjugate coincides with b
}

} // namespace

std::vector<std::string> conjugate_contact_warnings(const Curve& c) {
    std::vector<std::string> out;
    std::set<std::pair<std::size_t, std::size_t>> flagged;
    for (std::size_t a = 0; a < c.branches.size(); ++a) {
        Int kappa = multiplicity(c.branches[a]);
        for (Int t = 1; t < kappa; ++t) {
            for (std::size_t b = 0; b < c.branches.size(); ++b) {
                if (b == a) continue;
                auto key = std::minmax(a, b);
                if (flagged.count(key)) continue;
                ExtRat c0 = contact(c.branches[a], c.branches[b]);
                ExtRat c1 = contact_conj(c.branches[a], kappa, t, c.branches[b]);
                if (c1 != c0) {
                    flagged.insert(key);
                    out.push_back("contact(" + c.branches[a].id + ", " + c.branches[b].id +
                                  ") depends on the Puiseux representative: conjugate " +
                                  t.str() + " of " + c.branches[a].id + " gives " + c1.str() +
                                  " instead of " + c0.str());
                }
            }
        }
    }
    return out;
}

} // namespace mdh
