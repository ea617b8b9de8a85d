#pragma once

#include <vector>

#include "eqlines/matrix.hpp"

namespace eqlines {

// Floating-point helpers. These never feed certificates; they back
// cross-checks and vector realizations only.

struct EigenDecomposition {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[k] matches values[k]
};

std::vector<std::vector<double>> to_double(const RationalSymmetricMatrix& m);

// Cyclic Jacobi rotations; accurate to ~1e-12 for the small dense
// symmetric matrices used here.
EigenDecomposition jacobi_eigen(const std::vector<std::vector<double>>& a);

// Rank-revealing pivoted Cholesky of a (numerically) PSD matrix; returns
// row vectors v_i of length rank with <v_i, v_j> ~ m[i][j].
std::vector<std::vector<double>> pivoted_cholesky(const std::vector<std::vector<double>>& m,
                                                  int rank);

}  // namespace eqlines
