#pragma once

#include <iosfwd>
#include <vector>

#include "eqlines/graph.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

// Dense symmetric matrix with exact rational entries.
class RationalSymmetricMatrix {
public:
    RationalSymmetricMatrix() = default;
    explicit RationalSymmetricMatrix(int n) : n_(n), a_(std::size_t(n) * n) {}

    int size() const { return n_; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    // Sets both (i,j) and (j,i).
    void set(int i, int j, const Rational& v);

    bool operator==(const RationalSymmetricMatrix& o) const = default;

    static RationalSymmetricMatrix identity(int n, const Rational& scale = 1);
    static RationalSymmetricMatrix all_ones(int n, const Rational& scale = 1);
    static RationalSymmetricMatrix adjacency(const Graph& g);

    RationalSymmetricMatrix operator+(const RationalSymmetricMatrix& o) const;
    RationalSymmetricMatrix operator-(const RationalSymmetricMatrix& o) const;
    RationalSymmetricMatrix scaled(const Rational& factor) const;
    RationalSymmetricMatrix principal_submatrix(const VertexSet& rows) const;

    bool is_integer() const;
    Rational trace() const;
    Rational trace_of_square() const;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// Exact rank over the rationals (Gaussian elimination).
int rank(const RationalSymmetricMatrix& m);

// Basis of the exact nullspace, each vector of length n.
std::vector<std::vector<Rational>> kernel_basis(const RationalSymmetricMatrix& m);

struct PsdResult {
    bool psd = false;
    // Number of strictly positive pivots; equals rank when psd holds.
    int positive_pivots = 0;
    // On failure, an exact vector x with x^T M x < 0 and its value.
    std::vector<Rational> witness;
    Rational witness_value;
};

// Positive-semidefiniteness via LDL with symmetric diagonal pivoting.
// Zero pivots require their whole remaining row to vanish.
PsdResult is_psd(const RationalSymmetricMatrix& m);

// det(xI - M) for a symmetric matrix with integer entries
// (Faddeev-LeVerrier, exact integer divisions). Throws when entries are
// not integers.
IntPoly char_poly(const RationalSymmetricMatrix& m);

// n - rank(M - lambda I).
int multiplicity_of_rational_eigenvalue(const RationalSymmetricMatrix& m,
                                        const Rational& lambda);

// Integer B with every eigenvalue in [-B, B] (max absolute row sum,
// rounded up).
Integer gershgorin_bound(const RationalSymmetricMatrix& m);

// Plain-text serialization: first line n, then n lines of n rationals.
void write_matrix(std::ostream& os, const RationalSymmetricMatrix& m);
RationalSymmetricMatrix read_matrix(std::istream& is);

}  // namespace eqlines
