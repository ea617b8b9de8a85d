#pragma once

#include <stdexcept>
#include <string>

#include "eqlines/rational.hpp"

namespace eqlines {

// Closed interval with exact rational endpoints; the basic certified
// enclosure used for square roots in the degree-bound checks.
struct RationalInterval {
    Rational lo, hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
    }
    static RationalInterval point(const Rational& v) { return {v, v}; }

    Rational width() const { return hi - lo; }

    RationalInterval operator+(const RationalInterval& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    RationalInterval operator-(const RationalInterval& o) const {
        return {lo - o.hi, hi - o.lo};
    }
    RationalInterval operator*(const Rational& s) const {
        if (s >= 0) return {lo * s, hi * s};
        return {hi * s, lo * s};
    }
    bool certainly_le(const Rational& r) const { return hi <= r; }
    bool certainly_gt(const Rational& r) const { return lo > r; }
};

// Enclosure of sqrt(x) with width at most tol, by bisection on squares.
inline RationalInterval sqrt_enclosure(const Rational& x, const Rational& tol) {
    if (x < 0) throw std::invalid_argument("sqrt of negative rational");
    if (x == 0) return RationalInterval::point(0);
    Rational lo = 0;
    Rational hi = x < 1 ? Rational(1) : x;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// Exact arithmetic in Q(sqrt(2)): value a + b*sqrt(2).
struct QuadExt {
    Rational a, b;

    QuadExt() : a(0), b(0) {}
    QuadExt(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    static QuadExt sqrt2() { return QuadExt(0, 1); }

    QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b}; }
    QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b}; }
    QuadExt operator-() const { return {-a, -b}; }
    QuadExt operator*(const QuadExt& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    bool operator==(const QuadExt& o) const = default;

    // Exact sign: decides a + b*sqrt(2) against 0 by squaring.
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with 2 b^2; equality impossible
        // unless both vanish.
        Rational d = a * a - 2 * b * b;
        return sa * sgn(d);
    }

    std::string to_string() const {
        Rational mag = sgn(b) >= 0 ? b : Rational(-b);
        return a.get_str() + (sgn(b) >= 0 ? " + " : " - ") + mag.get_str() + "*sqrt(2)";
    }
};

}  // namespace eqlines
