#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/matrix.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

// A real algebraic number: either an exact rational, or the unique root of
// a squarefree integer polynomial inside a half-open isolating interval
// (lo, hi]. Comparisons are exact (Sturm counting plus gcd equality tests).
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Rational& v);
    AlgebraicNumber(std::shared_ptr<const SturmChain> chain, Rational lo, Rational hi);

    bool is_rational() const { return !chain_; }
    const Rational& rational_value() const;
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    const SturmChain* chain() const { return chain_.get(); }

    // Halves the isolating interval (no-op for rationals).
    void refine();
    double approx() const;
    std::string to_string() const;

    // -1 / 0 / +1.
    int compare_to(const Rational& r) const;
    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

private:
    AlgebraicNumber() = default;
    std::shared_ptr<const SturmChain> chain_;  // null for rationals
    Rational lo_, hi_;                         // lo_ == hi_ == value for rationals
};

// Exact eigenvalue list of an integer symmetric matrix: descending
// eigenvalues with multiplicities summing to the dimension.
struct SpectralSummary {
    int n = 0;
    std::vector<std::pair<AlgebraicNumber, int>> eigenvalues;

    // 1-based k-th largest eigenvalue counting multiplicity.
    const AlgebraicNumber& kth(int k) const;
    int multiplicity_of(const Rational& v) const;
};

SpectralSummary spectral_summary(const RationalSymmetricMatrix& m);

// Number of eigenvalues strictly above r, counting multiplicity.
// Cheaper than a full summary: no root isolation.
int count_eigenvalues_above(const RationalSymmetricMatrix& m, const Rational& r);

// Cauchy interlacing self-test: checks
// lambda_k(parent) >= lambda_k(child) >= lambda_{k+n-m}(parent) exactly.
bool interlacing_check(const RationalSymmetricMatrix& parent, const VertexSet& child_rows);

}  // namespace eqlines
