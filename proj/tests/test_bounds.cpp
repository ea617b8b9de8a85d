#include <doctest.h>

#include "eqlines/bounds.hpp"
#include "eqlines/matrix.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectra.hpp"

using namespace eqlines;

TEST_CASE("closed-form constants") {
    CHECK(balla_degree_bound(Rational(1, 3)) == 4);
    CHECK(balla_degree_bound(Rational(1, 5)) == 17);
    CHECK(balla_degree_bound(Rational(1, 7)) == 45);
    CHECK(uniform_upper(Rational(1, 5)) == 276);
    CHECK(uniform_upper(Rational(1, 3)) == 28);
    CHECK_THROWS_AS(uniform_upper(Rational(4, 5)), PreconditionError);
    CHECK_THROWS_AS(balla_degree_bound(Rational(2)), PreconditionError);
}

TEST_CASE("projection coordinate bound") {
    // At alpha = 1/5, n = 276, lambda = 13: Q^2 = 12/325.
    CHECK(projection_coordinate_bound(Rational(1, 5), 276, Rational(13)) == Rational(12, 325));
    // Requires lambda above (1 - alpha^2)/(2 alpha^2) = 12.
    CHECK_THROWS_AS(projection_coordinate_bound(Rational(1, 5), 276, Rational(12)),
                    PreconditionError);
}

TEST_CASE("degree bound at alpha 1/5 is certified on the grid") {
    const Rational lambdas[] = {Rational(12) + Rational(1, 1000), Rational(13), Rational(20),
                                Rational(39), Rational(40), Rational(100), Rational(1000)};
    const long ns[] = {276, 300, 10000, 1000000};
    for (const auto& lambda : lambdas)
        for (long n : ns) {
            auto rep = degree_upper_bound_fifth(n, lambda);
            CHECK(rep.certified_le_14);
            CHECK(rep.bound.certainly_le(14));
            CHECK(rep.q_squared >= 0);
        }
    // Physical pairs report a positive coordinate lower bound.
    CHECK(degree_upper_bound_fifth(276, Rational(13)).q_squared > 0);
    // The two formulations agree: Q^2 from the report equals the direct
    // projection bound.
    auto rep = degree_upper_bound_fifth(276, Rational(13));
    CHECK(rep.q_squared == projection_coordinate_bound(Rational(1, 5), 276, Rational(13)));
    CHECK_THROWS_AS(degree_upper_bound_fifth(275, Rational(13)), PreconditionError);
    CHECK_THROWS_AS(degree_upper_bound_fifth(276, Rational(12)), PreconditionError);
}

TEST_CASE("two-case inequality replay is fully exact") {
    auto cert = verify_inequality_eq12();
    CHECK(cert.verdict() == Verdict::VALID);
    for (const auto& s : cert.steps) CHECK(s.ok);
    CHECK(cert.steps.size() >= 8);
}

TEST_CASE("second eigenvalue inference") {
    // The construction itself sits exactly at the size threshold, so the
    // strict precondition n > floor(k(d-1)/(k-1)) rejects it.
    auto c = lower_bound_construction(3, 20);
    CHECK_THROWS_AS(second_eigenvalue_inference(3, 20, c), PreconditionError);

    // Petersen graph: 10 lines at arccos(1/3) in R^5, lambda_1 = 3 and
    // lambda_2 = 1 with multiplicity 5; the chain concludes 10 <= 5+1+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    CodeSpec petersen{Rational(1, 3), Graph(10, edges), std::nullopt};
    auto cert = second_eigenvalue_inference(2, 5, petersen);
    CHECK(cert.verdict() == Verdict::VALID);
    CHECK(cert.witnesses.at("multiplicity").get<int>() == 5);

    // Wrong angle for the requested k.
    CHECK_THROWS_AS(second_eigenvalue_inference(3, 20, petersen), PreconditionError);
}

TEST_CASE("tree multiplicity bound formula") {
    CHECK(multiplicity_tree_bound(Graph::path(5), 2) == 2);       // Delta 2, l 0
    CHECK(multiplicity_tree_bound(Graph::cycle(5), 2) == 3);      // Delta 2, l 1
    CHECK(multiplicity_tree_bound(Graph::complete(4), 3) == 9);   // Delta 3, l 3
    CHECK_THROWS_AS(multiplicity_tree_bound(Graph::path(3), 1), PreconditionError);
    CHECK_THROWS_AS(
        multiplicity_tree_bound(Graph::disjoint_union({Graph(1), Graph(1)}), 2),
        PreconditionError);
}

TEST_CASE("certified multiplicity replay for eigenvalue 1") {
    // C6 has lambda_2 = 1 with multiplicity 2 and Delta = 2.
    auto cert = m1_bound_certified(Graph::cycle(6));
    CHECK(cert.verdict() == Verdict::VALID);
    CHECK(cert.witnesses.at("multiplicity").get<int>() == 2);

    // Hypothesis violations are errors, not refutations.
    CHECK_THROWS_AS(m1_bound_certified(Graph::complete(5)), PreconditionError);
    CHECK_THROWS_AS(m1_bound_certified(Graph::path(3)), PreconditionError);
}

TEST_CASE("certified multiplicity replay for eigenvalue 2") {
    // Two triangles bridged through a middle vertex: 2 is the exact second
    // eigenvalue (eigenvector +1 on one triangle, -1 on the other).
    Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 6}, {3, 6}});
    auto a = RationalSymmetricMatrix::adjacency(g);
    REQUIRE(count_eigenvalues_above(a, 2) == 1);
    REQUIRE(multiplicity_of_rational_eigenvalue(a, 2) >= 1);
    auto cert = m2_bound_certified(g);
    CHECK(cert.verdict() == Verdict::VALID);
    CHECK(cert.witnesses.at("multiplicity").get<int>() <= 80);

    CHECK_THROWS_AS(m2_bound_certified(Graph::path(4)), PreconditionError);
}

TEST_CASE("relative bound aggregation") {
    std::map<long, Integer> inner{{2, Integer(28)}, {3, Integer(276)}};
    // d = 23, m = 2: floor(4*23*2*3 / (25-23)) = 276.
    CHECK(relative_bound_aggregate(23, 2, inner) == 276);
    // Missing inner bound or violated hypothesis raise.
    CHECK_THROWS_AS(relative_bound_aggregate(23, 3, inner), PreconditionError);
    CHECK_THROWS_AS(relative_bound_aggregate(30, 2, inner), PreconditionError);
}

TEST_CASE("theorem pipelines emit conditional certificates") {
    for (long d : {185L, 200L}) {
        auto cert = theorem_pipeline(Rational(1, 5), d);
        CHECK(cert.verdict() == Verdict::CONDITIONAL_VALID);
        CHECK(cert.witnesses.at("target").get<long>() == (3 * d - 3) / 2);
    }
    for (long d : {15L, 100L}) {
        auto cert = theorem_pipeline(Rational(1, 3), d);
        CHECK(cert.verdict() == Verdict::CONDITIONAL_VALID);
        CHECK(cert.witnesses.at("target").get<long>() == 2 * d - 2);
    }
    CHECK_THROWS_AS(theorem_pipeline(Rational(1, 5), 100), PreconditionError);
    CHECK_THROWS_AS(theorem_pipeline(Rational(1, 7), 1000), PreconditionError);
}
