#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "eqlines/certificate.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/matrix.hpp"
#include "eqlines/rational.hpp"

namespace eqlines {

// A spherical {-alpha, alpha}-code given combinatorially: edges of the
// graph mark pairs at inner product -alpha. Vectors are derived artifacts.
struct CodeSpec {
    Rational alpha;
    Graph graph;
    std::optional<int> dim_claim;

    int size() const { return graph.vertex_count(); }

    nlohmann::json to_json() const;
    static CodeSpec from_json(const nlohmann::json& j);
};

// Gram matrix: unit diagonal, -alpha on edges, +alpha elsewhere.
RationalSymmetricMatrix gram_from_graph(const CodeSpec& c);

// (1-alpha)/(2alpha) I + J/2 - A; equals gram/(2 alpha) entrywise.
RationalSymmetricMatrix shifted_matrix(const CodeSpec& c);

// Integer rescaling of the Gram matrix (x denominator of alpha); same
// PSD status, rank and eigenvalue multiplicities up to scale.
RationalSymmetricMatrix scaled_integer_gram(const CodeSpec& c);

// Lines-existence certificate: VALID iff the shifted matrix is PSD with
// rank at most d.
Certificate psd_rank_certificate(const CodeSpec& c, int d);

// Seidel switching across the cut (s, V \ s).
CodeSpec switch_code(const CodeSpec& c, const VertexSet& s);

struct SwitchNonnegativeResult {
    CodeSpec code;
    VertexSet flipped;
    std::vector<double> eigenvector;  // nonnegative, unit norm
    double lambda1;
    int lambda1_multiplicity;  // exact; > 1 flags a degenerate top eigenspace
};

// Sign-normalizes the code so the top Gram eigenvector has no negative
// coordinate. The eigenvalue bracket is certified exactly (Sturm); the
// eigenvector itself is floating point.
SwitchNonnegativeResult switch_nonnegative(const CodeSpec& c);

// Disjoint copies of K_k plus isolated vertices: floor(k(d-1)/(k-1)) lines
// at angle arccos(1/(2k-1)) in R^d.
CodeSpec lower_bound_construction(long k, long d);

// Structured certificate for the construction: blockwise PSD plus explicit
// kernel vectors of (k-1)I - A; runs in O(n k) instead of dense elimination.
Certificate construction_certificate(long k, long d);

// Unit vectors in R^rank realizing the code; exact PSD check first, then a
// floating pivoted Cholesky cross-checked against the exact Gram (1e-9).
std::vector<std::vector<double>> realize_vectors(const CodeSpec& c);

}  // namespace eqlines
