#pragma once

#include "wsets/rational.hpp"

#include <compare>
#include <string>

namespace wsets {

// Binds the symbolic eps to a concrete rational multiple of pi: eps = ratio * pi.
struct EpsBinding {
    Rational ratio{1};

    explicit EpsBinding(Rational r = Rational(1)) : ratio(std::move(r)) {
        if (ratio <= 0) throw std::invalid_argument("eps ratio must be positive");
    }
    friend bool operator==(const EpsBinding&, const EpsBinding&) = default;
};

// Exact number of the form a*pi + b*eps. Under a binding its value is
// (a + b*ratio)*pi, so ordering reduces to rational comparison.
struct Scalar {
    Rational pi_coef;
    Rational eps_coef;

    Scalar() = default;
    Scalar(Rational a, Rational b) : pi_coef(std::move(a)), eps_coef(std::move(b)) {}

    static Scalar pi_units(Rational a) { return Scalar(std::move(a), 0); }
    static Scalar eps_units(Rational b) { return Scalar(0, std::move(b)); }
    static Scalar zero() { return Scalar(0, 0); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return Scalar(x.pi_coef + y.pi_coef, x.eps_coef + y.eps_coef);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return Scalar(x.pi_coef - y.pi_coef, x.eps_coef - y.eps_coef);
    }
    friend Scalar operator-(const Scalar& x) { return Scalar(-x.pi_coef, -x.eps_coef); }
    friend Scalar operator*(const Scalar& x, const Rational& r) {
        return Scalar(x.pi_coef * r, x.eps_coef * r);
    }
    friend Scalar operator*(const Rational& r, const Scalar& x) { return x * r; }
    friend Scalar operator/(const Scalar& x, const Rational& r) {
        return Scalar(x.pi_coef / r, x.eps_coef / r);
    }
    friend bool operator==(const Scalar&, const Scalar&) = default;

    // Value in units of pi under the binding.
    Rational in_pi_units(const EpsBinding& b) const {
        return pi_coef + eps_coef * b.ratio;
    }
};

enum class Order { LT, EQ, GT };

inline Order scalar_cmp(const Scalar& x, const Scalar& y, const EpsBinding& b) {
    Rational vx = x.in_pi_units(b), vy = y.in_pi_units(b);
    if (vx < vy) return Order::LT;
    if (vx > vy) return Order::GT;
    return Order::EQ;
}

inline bool scalar_lt(const Scalar& x, const Scalar& y, const EpsBinding& b) {
    return scalar_cmp(x, y, b) == Order::LT;
}

// Correctly-rounded fixed-point decimal of the scalar's value, with `digits`
// fractional digits. Never used in exact logic, only for rendering.
std::string to_decimal(const Scalar& x, const EpsBinding& b, unsigned digits);

// Exact textual form, e.g. "-1/3*pi+1/16*eps" or "2/3*pi".
std::string format_scalar(const Scalar& x);

// Inverse of format_scalar. A bare rational is read in units of pi, so
// "2/3", "2/3*pi" and "2/3*pi+1/80*eps" all parse. Throws ParseError.
Scalar parse_scalar(const std::string& text);

}  // namespace wsets
