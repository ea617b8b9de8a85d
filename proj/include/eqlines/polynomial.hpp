#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/rational.hpp"

namespace eqlines {

// Dense polynomial with exact integer coefficients, ascending degree order.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& coeff(int i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;

    IntPoly derivative() const;
    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    // Positive gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    // Polynomial divided by its content; sign of the leading coefficient kept.
    IntPoly primitive_part() const;

    // Exact division; throws std::invalid_argument when the division leaves
    // a remainder or produces non-integer coefficients.
    IntPoly divide_exact(const IntPoly& divisor) const;
    // True iff divisor divides *this over the rationals.
    bool divisible_by(const IntPoly& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> c_;
};

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Squarefree decomposition (Yun): pairwise coprime primitive factors with
// positive leading coefficients and their multiplicities, product of
// factor^multiplicity equal to the input up to a rational constant.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Sturm chain of the squarefree part of a polynomial; exact real root
// counting over half-open rational intervals.
class SturmChain {
public:
    explicit SturmChain(IntPoly f);

    const IntPoly& poly() const { return f_; }
    // Number of distinct real roots in (lo, hi]; handles roots at either
    // endpoint exactly (deflation by the rational linear factor).
    int count_roots(const Rational& lo, const Rational& hi) const;
    // Number of distinct real roots in (lo, +inf).
    int count_roots_above(const Rational& lo) const;
    int count_real_roots() const;

private:
    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    IntPoly f_;  // squarefree part, primitive, positive leading coefficient
    std::vector<IntPoly> seq_;
};

// Upper bound B > 0 with all real roots of p in [-B, B] (Cauchy bound),
// returned as an integer. Throws for the zero polynomial.
Integer root_magnitude_bound(const IntPoly& p);

}  // namespace eqlines
