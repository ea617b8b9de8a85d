#include <doctest.h>

#include <cmath>

#include "eqlines/codes.hpp"
#include "eqlines/spectra.hpp"

using namespace eqlines;

namespace {

CodeSpec make_code(const Rational& alpha, const Graph& g) {
    return CodeSpec{alpha, g, std::nullopt};
}

}  // namespace

TEST_CASE("gram, shifted and scaled matrices are consistent") {
    auto c = make_code(Rational(1, 3), Graph::path(3));
    auto gram = gram_from_graph(c);
    CHECK(gram.at(0, 0) == 1);
    CHECK(gram.at(0, 1) == Rational(-1, 3));  // edge
    CHECK(gram.at(0, 2) == Rational(1, 3));   // non-edge

    // shifted = gram / (2 alpha), scaled = gram * q.
    auto shifted = shifted_matrix(c);
    CHECK(shifted == gram.scaled(Rational(3, 2)));
    auto scaled = scaled_integer_gram(c);
    CHECK(scaled == gram.scaled(Rational(3)));
    CHECK(scaled.is_integer());

    // trace(M^2) = n + n(n-1) alpha^2 regardless of the graph.
    int n = 3;
    CHECK(gram.trace_of_square() == n + n * (n - 1) * Rational(1, 9));
}

TEST_CASE("codespec json round-trip") {
    CodeSpec c{Rational(1, 5), Graph::cycle(5), 4};
    auto j = c.to_json();
    auto back = CodeSpec::from_json(j);
    CHECK(back.alpha == c.alpha);
    CHECK(back.graph == c.graph);
    CHECK(back.dim_claim == c.dim_claim);
    CHECK_THROWS(CodeSpec::from_json(nlohmann::json{{"alpha", "7/3"}, {"graph6", "A_"}}));
}

TEST_CASE("psd rank certificates") {
    // K2 at alpha 1/3 embeds in the plane.
    auto ok = psd_rank_certificate(make_code(Rational(1, 3), Graph::complete(2)), 2);
    CHECK(ok.verdict() == Verdict::VALID);

    // C5 at alpha 1/3 is PSD but needs rank 5 > 2.
    auto refuted = psd_rank_certificate(make_code(Rational(1, 3), Graph::cycle(5)), 2);
    CHECK(refuted.verdict() == Verdict::REFUTED);

    // K3 at alpha = 9/10: diagonal 1, off-diagonal -9/10, smallest
    // eigenvalue 1 - 2*(9/10) < 0, so not PSD at all.
    auto bad = psd_rank_certificate(make_code(Rational(9, 10), Graph::complete(3)), 3);
    CHECK(bad.verdict() == Verdict::REFUTED);
    CHECK_FALSE(bad.steps.at(0).ok);  // PSD step carries the witness
    CHECK(bad.steps.at(0).data.contains("witness"));
}

TEST_CASE("switching toggles the cut and is an involution") {
    auto c = make_code(Rational(1, 3), Graph::cycle(5));
    VertexSet s{0, 2};
    auto switched = switch_code(c, s);
    CHECK(switched.graph.has_edge(0, 1) == !c.graph.has_edge(0, 1));  // cut edge
    CHECK(switched.graph.has_edge(0, 2) == c.graph.has_edge(0, 2));   // inside
    CHECK(switched.graph.has_edge(3, 4) == c.graph.has_edge(3, 4));   // outside
    CHECK(switch_code(switched, s).graph == c.graph);

    // Switching preserves the Gram spectrum exactly.
    CHECK(char_poly(scaled_integer_gram(c)) == char_poly(scaled_integer_gram(switched)));
}

TEST_CASE("switch to a nonnegative top eigenvector") {
    // Start from a switched version of an all-plus code; switching back
    // must recover a nonnegative eigenvector.
    auto base = make_code(Rational(1, 3), Graph(4));
    auto tweaked = switch_code(base, {1, 3});
    auto res = switch_nonnegative(tweaked);
    CHECK(res.lambda1 == doctest::Approx(1 + 3 * (1.0 / 3)).epsilon(1e-9));
    for (double x : res.eigenvector) CHECK(x >= 0);
    // The result is switching-equivalent to the input and spectrum-equal.
    CHECK(char_poly(scaled_integer_gram(res.code)) ==
          char_poly(scaled_integer_gram(tweaked)));
    CHECK(res.lambda1_multiplicity == 1);
}

TEST_CASE("block construction hits the size formula") {
    auto c = lower_bound_construction(3, 185);
    CHECK(c.size() == 276);
    CHECK(c.alpha == Rational(1, 5));
    CHECK(lower_bound_construction(2, 15).size() == 28);
    CHECK(lower_bound_construction(2, 2).size() == 2);
    CHECK_THROWS(lower_bound_construction(1, 5));

    auto cert = construction_certificate(3, 185);
    CHECK(cert.verdict() == Verdict::VALID);

    // Small instances certify through the dense path as well.
    for (long k = 2; k <= 4; ++k)
        for (long d = k; d <= 12; ++d) {
            auto code = lower_bound_construction(k, d);
            auto full = psd_rank_certificate(code, static_cast<int>(d));
            CHECK(full.verdict() == Verdict::VALID);
            CHECK(construction_certificate(k, d).verdict() == Verdict::VALID);
        }
}

TEST_CASE("vector realization matches the gram matrix") {
    auto c = lower_bound_construction(2, 5);
    auto vecs = realize_vectors(c);
    auto gram = gram_from_graph(c);
    for (int i = 0; i < c.size(); ++i) {
        for (int j = i; j < c.size(); ++j) {
            double dot = 0;
            for (std::size_t t = 0; t < vecs[i].size(); ++t) dot += vecs[i][t] * vecs[j][t];
            CHECK(std::fabs(dot - gram.at(i, j).get_d()) < 1e-9);
        }
    }
    CHECK_THROWS(realize_vectors(make_code(Rational(9, 10), Graph::complete(3))));
}
