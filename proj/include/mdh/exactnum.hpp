#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "mdh/error.hpp"

namespace mdh {

// Exact integer and rational types. Rationals are always kept in lowest
// terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int gcd(Int a, Int b);
Int lcm(const Int& a, const Int& b);

// "p/q", or just "p" when q == 1.
std::string rat_to_string(const Rat& q);

// Accepts "p", "p/q", optional leading sign; q > 0 after normalization.
Rat rat_from_string(const std::string& text);

// A rational extended with a single point at infinity. Used for heights on
// rooted trees and for evaluation points b of diagrams, where b = inf is
// meaningful. Only ordering, equality and printing are defined at infinity.
class ExtRat {
public:
    ExtRat() : finite_(0) {}
    ExtRat(const Rat& v) : finite_(v) {}
    ExtRat(long n, long d = 1) : finite_(Rat(n, d)) {}

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }

    const Rat& finite() const {
        if (inf_) throw Error("tried to use the infinite height as a finite rational");
        return finite_;
    }

    // "p/q" or "inf".
    std::string str() const { return inf_ ? "inf" : rat_to_string(finite_); }

    // Accepts what str() produces.
    static ExtRat from_string(const std::string& text);

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.finite_ == b.finite_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.finite_ < b.finite_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

private:
    bool inf_ = false;
    Rat finite_;
};

// Gaussian rational a + b*i. Exact arithmetic in Q(i); enough to carry the
// coefficients of Puiseux expansions and tangent line slopes.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(const Rat& r) : re(r) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}
    GaussRat(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }

    // Multiplication by i^k, k taken mod 4.
    GaussRat times_i_pow(long k) const;

    // "0", "2", "-1/2", "i", "-i", "3i", "1+i", "1/2-3/4i".
    std::string str() const;
};

// Strict total order, used only to make outputs deterministic.
bool gauss_less(const GaussRat& a, const GaussRat& b);

} // namespace mdh
