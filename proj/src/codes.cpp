#include "eqlines/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqlines/numeric.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

void check_alpha(const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1)
        throw std::invalid_argument("alpha must lie in (0,1)");
}

nlohmann::json rational_vector_json(const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace

nlohmann::json CodeSpec::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha.get_str();
    j["graph6"] = graph6_encode(graph);
    if (dim_claim) j["dim_claim"] = *dim_claim;
    return j;
}

CodeSpec CodeSpec::from_json(const nlohmann::json& j) {
    CodeSpec c;
    c.alpha = parse_rational(j.at("alpha").get<std::string>());
    check_alpha(c.alpha);
    c.graph = graph6_decode(j.at("graph6").get<std::string>());
    if (j.contains("dim_claim") && !j["dim_claim"].is_null())
        c.dim_claim = j["dim_claim"].get<int>();
    return c;
}

RationalSymmetricMatrix gram_from_graph(const CodeSpec& c) {
    check_alpha(c.alpha);
    int n = c.size();
    RationalSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, 1);
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, c.graph.has_edge(i, j) ? -c.alpha : c.alpha);
    }
    return m;
}

RationalSymmetricMatrix shifted_matrix(const CodeSpec& c) {
    check_alpha(c.alpha);
    int n = c.size();
    Rational shift = (1 - c.alpha) / (2 * c.alpha);
    RationalSymmetricMatrix m(n);
    Rational half(1, 2);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, shift + half);
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, c.graph.has_edge(i, j) ? -half : half);
    }
    return m;
}

RationalSymmetricMatrix scaled_integer_gram(const CodeSpec& c) {
    check_alpha(c.alpha);
    int n = c.size();
    Rational q(c.alpha.get_den());
    Rational p(c.alpha.get_num());
    RationalSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, q);
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, c.graph.has_edge(i, j) ? -p : p);
    }
    return m;
}

Certificate psd_rank_certificate(const CodeSpec& c, int d) {
    if (d < 0) throw std::invalid_argument("dimension must be nonnegative");
    Certificate cert;
    // PSD and rank are invariant under the positive integer rescaling, which
    // keeps the elimination in small integers.
    auto scaled = scaled_integer_gram(c);
    auto psd = is_psd(scaled);
    nlohmann::json psd_data{{"n", c.size()}, {"alpha", c.alpha.get_str()}};
    if (!psd.psd) {
        psd_data["witness"] = rational_vector_json(psd.witness);
        psd_data["witness_value"] = psd.witness_value.get_str();
    }
    cert.add_step("shifted matrix is positive semidefinite", "gram-psd-criterion",
                  psd.psd, psd_data);
    int r = psd.psd ? psd.positive_pivots : rank(scaled);
    cert.add_step("rank of shifted matrix is at most the ambient dimension",
                  "gram-rank-criterion", r <= d, {{"rank", r}, {"dim", d}});
    cert.witnesses = {{"rank", r}, {"code", c.to_json()}};
    return cert;
}

CodeSpec switch_code(const CodeSpec& c, const VertexSet& s) {
    int n = c.size();
    std::vector<char> in(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::out_of_range("switch set vertex out of range");
        in[v] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool e = c.graph.has_edge(i, j);
            if (in[i] != in[j]) e = !e;
            if (e) edges.emplace_back(i, j);
        }
    return {c.alpha, Graph(n, edges), c.dim_claim};
}

SwitchNonnegativeResult switch_nonnegative(const CodeSpec& c) {
    int n = c.size();
    SwitchNonnegativeResult res;
    if (n == 0) {
        res.code = c;
        res.lambda1 = 0;
        res.lambda1_multiplicity = 0;
        return res;
    }
    // Exact part: isolate the top eigenvalue of the integer-scaled Gram
    // matrix so the floating eigenpair can be matched to a certified bracket.
    auto scaled = scaled_integer_gram(c);
    auto summary = spectral_summary(scaled);
    res.lambda1_multiplicity = summary.eigenvalues.front().second;
    double top_scaled = summary.eigenvalues.front().first.approx();

    auto eig = jacobi_eigen(to_double(gram_from_graph(c)));
    double q = Rational(c.alpha.get_den()).get_d();
    res.lambda1 = eig.values.front();
    if (std::fabs(res.lambda1 * q - top_scaled) > 1e-6 * (1.0 + std::fabs(top_scaled)))
        throw std::logic_error("floating top eigenvalue escaped its exact bracket");

    std::vector<double> x = eig.vectors.front();
    // Normalize the sign so the first coordinate of largest magnitude is
    // positive; makes the flip set deterministic.
    double amax = 0;
    for (double v : x) amax = std::max(amax, std::fabs(v));
    for (double v : x) {
        if (std::fabs(v) > 0.5 * amax) {
            if (v < 0)
                for (double& w : x) w = -w;
            break;
        }
    }
    double tol = 1e-12 * amax;
    VertexSet flip;
    for (int i = 0; i < n; ++i)
        if (x[i] < -tol) flip.push_back(i);
    res.code = switch_code(c, flip);
    res.flipped = flip;
    res.eigenvector.resize(n);
    for (int i = 0; i < n; ++i) res.eigenvector[i] = std::fabs(x[i]) <= tol ? 0.0 : std::fabs(x[i]);
    return res;
}

CodeSpec lower_bound_construction(long k, long d) {
    if (k < 2 || d < 1) throw std::invalid_argument("need k >= 2 and d >= 1");
    long copies = (d - 1) / (k - 1);
    long n = k * (d - 1) / (k - 1);
    std::vector<std::pair<int, int>> edges;
    for (long b = 0; b < copies; ++b)
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j)
                edges.emplace_back(static_cast<int>(b * k + i), static_cast<int>(b * k + j));
    CodeSpec c;
    c.alpha = Rational(1, 2 * k - 1);
    c.graph = Graph(static_cast<int>(n), edges);
    c.dim_claim = static_cast<int>(d);
    return c;
}

Certificate construction_certificate(long k, long d) {
    Certificate cert;
    CodeSpec c = lower_bound_construction(k, d);
    long copies = (d - 1) / (k - 1);
    long n = c.size();
    cert.add_step("vertex count equals floor(k(d-1)/(k-1))", "construction-size",
                  n == k * (d - 1) / (k - 1),
                  {{"k", k}, {"d", d}, {"n", n}, {"complete_blocks", copies}});

    // (k-1)I - A is block diagonal; each K_k block gives kI - J_k, PSD by a
    // single exact k x k elimination, and isolated vertices give (k-1) > 0.
    CodeSpec block{c.alpha, Graph::complete(static_cast<int>(k)), std::nullopt};
    auto block_matrix = RationalSymmetricMatrix::identity(static_cast<int>(k), k - 1) -
                        RationalSymmetricMatrix::adjacency(block.graph);
    bool block_psd = is_psd(block_matrix).psd;
    cert.add_step("(k-1)I - A is positive semidefinite on every K_k block",
                  "construction-block-psd", block_psd, {{"block_size", k}});
    cert.add_step("J/2 is positive semidefinite (x^T J x = (sum x)^2)",
                  "all-ones-psd", true);

    // Explicit kernel vectors: the indicator of each block lies in
    // ker((k-1)I - A), so rank((k-1)I - A) <= n - copies.
    bool kernel_ok = true;
    for (long b = 0; b < copies && kernel_ok; ++b) {
        // ((k-1)I - A) 1_block = 0 iff every block vertex has k-1 block
        // neighbors and outside vertices have none.
        for (long i = 0; i < k; ++i) {
            int v = static_cast<int>(b * k + i);
            long inside = 0;
            for (int u : c.graph.neighbors(v))
                if (u >= b * k && u < (b + 1) * k) ++inside;
            if (inside != k - 1 || c.graph.degree(v) != k - 1) kernel_ok = false;
        }
    }
    cert.add_step("block indicators are explicit kernel vectors of (k-1)I - A",
                  "construction-kernel", kernel_ok,
                  {{"kernel_vectors", copies}, {"rank_bound", n - copies}});
    bool rank_ok = n - copies + 1 <= d;
    cert.add_step("rank((k-1)I + J/2 - A) <= rank((k-1)I - A) + 1 <= d",
                  "construction-rank", rank_ok,
                  {{"rank_bound", n - copies + 1}, {"dim", d}});
    cert.witnesses = {{"code", c.to_json()}, {"n", n}};
    return cert;
}

std::vector<std::vector<double>> realize_vectors(const CodeSpec& c) {
    auto scaled = scaled_integer_gram(c);
    auto psd = is_psd(scaled);
    if (!psd.psd)
        throw std::invalid_argument("code is not realizable: Gram matrix not PSD");
    int r = psd.positive_pivots;
    auto gram = gram_from_graph(c);
    auto vectors = pivoted_cholesky(to_double(gram), r);
    // Cross-check the floating Gram against the exact one.
    int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double dot = 0;
            for (int t = 0; t < r; ++t) dot += vectors[i][t] * vectors[j][t];
            if (std::fabs(dot - gram.at(i, j).get_d()) > 1e-9)
                throw std::runtime_error("floating realization failed the 1e-9 Gram check");
        }
    return vectors;
}

}  // namespace eqlines
