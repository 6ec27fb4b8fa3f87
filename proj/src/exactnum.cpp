#include "mdh/exactnum.hpp"

#include <cctype>

namespace mdh {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd(a, b);
    Int r = (a / g) * b;
    if (r < 0) r = -r;
    return r;
}

std::string rat_to_string(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

Rat rat_from_string(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, i); };

    auto read_int = [&]() -> Int {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw fail("expected an integer in rational literal");
        Int v(text.substr(start, i - start));
        return neg ? -v : v;
    };

    Int num = read_int();
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) throw fail("zero denominator in rational literal");
    }
    if (i != text.size()) throw fail("trailing characters after rational literal");
    return Rat(num, den);
}

ExtRat ExtRat::from_string(const std::string& text) {
    if (text == "inf") return ExtRat::infinity();
    return ExtRat(rat_from_string(text));
}

GaussRat GaussRat::times_i_pow(long k) const {
    k %= 4;
    if (k < 0) k += 4;
    switch (k) {
        case 0: return *this;
        case 1: return GaussRat(-im, re);
        case 2: return GaussRat(-re, -im);
        default: return GaussRat(im, -re);
    }
}

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s = rat_to_string(re);
    if (im != 0) {
        if (im > 0 && !s.empty()) s += "+";
        if (im == -1) {
            s += "-i";
        } else if (im == 1) {
            s += "i";
        } else {
            s += rat_to_string(im) + "i";
        }
    }
    return s;
}

bool gauss_less(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

} // namespace mdh
