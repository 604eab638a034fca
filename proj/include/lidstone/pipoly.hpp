#pragma once

// Exact constant values of the form q_0 + q_1 pi + ... + q_m pi^m with
// rational q_k.  Since pi is transcendental the representation is faithful:
// a value is zero exactly when all coefficients are.  This is the value
// domain of exact expression evaluation; symbolic derivatives of the
// trigonometric fixtures live here after their sine/cosine factors are
// resolved at integer multiples of pi.

#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "lidstone/rational.hpp"

namespace lidstone {

class PiPoly {
public:
    PiPoly() = default;

    PiPoly(const Rational& q) { set(0, q); }  // NOLINT: implicit by design
    PiPoly(int v) { set(0, Rational(v)); }    // NOLINT

    static PiPoly pi_multiple(const Rational& q) {
        PiPoly p;
        p.set(1, q);
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Rational coefficient(int power) const {
        auto it = c_.find(power);
        return it == c_.end() ? Rational(0) : it->second;
    }

    std::optional<Rational> as_rational() const {
        if (c_.empty()) return Rational(0);
        if (c_.size() == 1 && c_.begin()->first == 0) return c_.begin()->second;
        return std::nullopt;
    }

    // q such that the value is exactly q*pi (zero counts, with q = 0).
    std::optional<Rational> as_pi_multiple() const {
        if (c_.empty()) return Rational(0);
        if (c_.size() == 1 && c_.begin()->first == 1) return c_.begin()->second;
        return std::nullopt;
    }

    PiPoly operator-() const {
        PiPoly r;
        for (const auto& [p, q] : c_) r.c_.emplace(p, -q);
        return r;
    }

    PiPoly& operator+=(const PiPoly& o) {
        for (const auto& [p, q] : o.c_) set(p, coefficient(p) + q);
        return *this;
    }

    PiPoly& operator-=(const PiPoly& o) {
        for (const auto& [p, q] : o.c_) set(p, coefficient(p) - q);
        return *this;
    }

    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }

    friend PiPoly operator*(const PiPoly& a, const PiPoly& b) {
        PiPoly r;
        for (const auto& [pa, qa] : a.c_)
            for (const auto& [pb, qb] : b.c_) r.set(pa + pb, r.coefficient(pa + pb) + qa * qb);
        return r;
    }

    PiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("PiPoly::pow: negative exponent");
        PiPoly r(Rational(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PiPoly& a, const PiPoly& b) { return !(a == b); }

    double to_double() const {
        double acc = 0;
        for (const auto& [p, q] : c_) acc += lidstone::to_double(q) * std::pow(M_PI, p);
        return acc;
    }

    // Canonical display, e.g. "0", "-3/2", "2*pi", "1/2 - pi^2".
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, q] : c_) {
            Rational mag = q < 0 ? Rational(-q) : q;
            if (first) {
                if (q < 0) os << '-';
                first = false;
            } else {
                os << (q < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1 && p > 0);
            if (!unit) os << to_string(mag);
            if (p > 0) {
                if (!unit) os << '*';
                os << "pi";
                if (p > 1) os << '^' << p;
            }
        }
        return os.str();
    }

private:
    void set(int power, const Rational& q) {
        if (q == 0)
            c_.erase(power);
        else
            c_[power] = q;
    }

    std::map<int, Rational> c_;
};

}  // namespace lidstone
