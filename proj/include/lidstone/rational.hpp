#pragma once

// Exact rational scalars and arbitrary-precision integers used throughout
// the library, plus parsing/formatting in the canonical "p/q" form.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lidstone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// k!/(k-t)!, the coefficient produced by t-fold differentiation of z^k.
inline BigInt falling_factorial(int k, int t) {
    if (t < 0 || k < 0) throw std::invalid_argument("falling_factorial: negative argument");
    if (t > k) return 0;
    BigInt f = 1;
    for (int i = k; i > k - t; --i) f *= i;
    return f;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t i = start;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    std::size_t end_num = digits(pos);
    if (end_num == pos) throw std::invalid_argument("parse_rational: bad numerator in '" + text + "'");
    if (end_num == text.size()) return Rational(BigInt(text));
    if (text[end_num] != '/') throw std::invalid_argument("parse_rational: bad format in '" + text + "'");
    std::size_t den_start = end_num + 1;
    if (digits(den_start) != text.size() || den_start == text.size())
        throw std::invalid_argument("parse_rational: bad denominator in '" + text + "'");
    BigInt num(text.substr(0, end_num));
    BigInt den(text.substr(den_start));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero to negative power");
        return Rational(1) / pow_rational(base, -e);
    }
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace lidstone
