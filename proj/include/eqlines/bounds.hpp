#pragma once

#include <map>
#include <stdexcept>

#include "eqlines/certificate.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/interval.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

// Unsatisfied hypothesis of a checker; distinct from a REFUTED certificate.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact lower bound on x(u)^2 for a unit top eigenvector of the Gram
// matrix: (lambda - c) / (lambda (lambda^2/(alpha^2 n + 1 - alpha^2) - c))
// with c = (1 - alpha^2)/(2 alpha^2). Requires lambda > c.
Rational projection_coordinate_bound(const Rational& alpha, long n, const Rational& lambda);

struct DegreeBoundReport {
    Rational alpha;
    long n = 0;
    Rational lambda;
    Rational q_squared;            // exact lower bound on x(u)^2
    RationalInterval bound;        // enclosure of sqrt(n)/(2Q) - 5 lambda/2 + 2
    bool certified_le_14 = false;  // decided by an exact squared comparison
};

// Degree bound at alpha = 1/5: sqrt(n)/(2 Q(lambda,n)) - 5 lambda/2 + 2.
// Requires n >= 276 and lambda > 12.
DegreeBoundReport degree_upper_bound_fifth(long n, const Rational& lambda);

// Machine-checks the two-case algebra behind the Delta <= 14 bound; every
// step is exact integer, rational, or Q(sqrt 2) arithmetic.
Certificate verify_inequality_eq12();

// (1 + 3 alpha^2 - 4 alpha^3) / (8 alpha^3); strict upper bound on Delta.
Rational balla_degree_bound(const Rational& alpha);

// (1 - alpha^2)(1 - 2 alpha^2) / (2 alpha^4); requires alpha^2 < 1/2.
Rational uniform_upper(const Rational& alpha);

// Checks lambda_1(A) > lambda_2(A) = k-1 and n <= d + 1 + m_{k-1}(A) on the
// concrete associated graph. Preconditions (alpha = 1/(2k-1), n above the
// construction size, d > 3k-2, PSD Gram) raise PreconditionError.
Certificate second_eigenvalue_inference(long k, long d, const CodeSpec& c);

// (k-1) Delta_G + l_G for connected g; restricted to k >= 2.
long multiplicity_tree_bound(const Graph& g, int k);

// Constructive replay of the multiplicity bound for lambda_2 = 2,
// Delta <= 14: picks the branch the hypotheses admit, certifies the
// branch constant, and checks the exact multiplicity against it.
Certificate m2_bound_certified(const Graph& g);

// Same replay for lambda_2 = 1, Delta <= 3, constant 8.
Certificate m1_bound_certified(const Graph& g);

// max of the supplied per-angle bounds and floor(4dm(m+1)/((2m+1)^2-d));
// requires (2m+1)^2 > d and a bound for every j <= m.
Integer relative_bound_aggregate(long d, long m, const std::map<long, Integer>& inner_bounds);

// End-to-end certified chain for N_{1/5}(d) = floor((3d-3)/2), d >= 185,
// and N_{1/3}(d) = 2d-2, d >= 15. Graph-universal lemmas and the classical
// constructions are recorded as assumptions (verdict CONDITIONAL-VALID).
Certificate theorem_pipeline(const Rational& alpha, long d);

}  // namespace eqlines
