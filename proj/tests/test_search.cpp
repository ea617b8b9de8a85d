#include <doctest.h>

#include <set>

#include "eqlines/matrix.hpp"
#include "eqlines/search.hpp"
#include "eqlines/spectra.hpp"

using namespace eqlines;

TEST_CASE("labeled enumeration counts and order") {
    auto g3 = enumerate_graphs(3, EnumMode::EXHAUSTIVE_LABELED);
    CHECK(g3.size() == 8);
    // Lexicographic edge-mask order starts at the empty graph.
    CHECK(g3.front().edge_count() == 0);
    CHECK(g3.back() == Graph::complete(3));
    CHECK(enumerate_graphs(0, EnumMode::EXHAUSTIVE_LABELED).size() == 1);
}

TEST_CASE("canonical enumeration matches known class counts") {
    CHECK(canonical_graphs(1).size() == 1);
    CHECK(canonical_graphs(2).size() == 2);
    CHECK(canonical_graphs(3).size() == 4);
    CHECK(canonical_graphs(4).size() == 11);
    CHECK(canonical_graphs(5).size() == 34);
    CHECK(canonical_graphs(6).size() == 156);
    CHECK_THROWS(canonical_graphs(10));
}

TEST_CASE("canonical form is an isomorphism invariant") {
    // Exhaustive cross-check at n = 4: grouping all 64 labeled graphs by
    // canonical mask gives exactly the 11 classes.
    std::set<std::uint64_t> masks;
    for (const Graph& g : enumerate_graphs(4, EnumMode::EXHAUSTIVE_LABELED))
        masks.insert(canonical_edge_mask(g));
    CHECK(masks.size() == 11);
    // A relabeled cycle maps to the same representative.
    Graph c5 = Graph::cycle(5);
    Graph c5_relabeled(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    CHECK(canonical_edge_mask(c5) == canonical_edge_mask(c5_relabeled));
}

TEST_CASE("random sampling is seeded and reproducible") {
    auto a = enumerate_graphs(8, EnumMode::RANDOM_SAMPLE, 25, 42);
    auto b = enumerate_graphs(8, EnumMode::RANDOM_SAMPLE, 25, 42);
    auto c = enumerate_graphs(8, EnumMode::RANDOM_SAMPLE, 25, 43);
    CHECK(a.size() == 25);
    CHECK(a == b);
    CHECK(a != c);

    Xorshift64Star rng(7);
    for (int i = 0; i < 100; ++i) CHECK(rng.below(10) < 10);
}

TEST_CASE("maximum line counts at tiny scale") {
    SearchTask t;
    t.alpha = Rational(1, 3);
    t.dim = 3;
    t.n_max = 5;
    auto r = max_lines_exact(t);
    CHECK(r.best_n == 4);
    CHECK(r.exhausted);
    REQUIRE(r.witness.has_value());
    CHECK(psd_rank_certificate(*r.witness, 3).verdict() == Verdict::VALID);

    // Same value through canonical representatives.
    t.mode = EnumMode::CANONICAL_DEDUP;
    CHECK(max_lines_exact(t).best_n == 4);

    // Construction lower bound at alpha = 1/5, d = 5: at least 6 lines.
    SearchTask t5;
    t5.alpha = Rational(1, 5);
    t5.dim = 5;
    t5.n_max = 6;
    auto r5 = max_lines_exact(t5);
    CHECK(r5.best_n == 6);

    CHECK_THROWS(max_lines_exact(SearchTask{}));
}

TEST_CASE("property suites find no counterexamples at small budgets") {
    SuiteBudget small;
    small.n_max = 5;
    small.samples = 300;
    small.seed = 11;
    for (auto suite : {LemmaSuite::EDGE_DISJOINT, LemmaSuite::MULTI_TREE,
                       LemmaSuite::INTERLACING, LemmaSuite::SWITCH_INVARIANCE}) {
        auto rep = property_suite(suite, small);
        CHECK(rep.cases > 0);
        CHECK(rep.counterexamples == 0);
    }
}

TEST_CASE("search results serialize") {
    SearchTask t;
    t.alpha = Rational(1, 3);
    t.dim = 3;
    t.n_max = 4;
    auto j = max_lines_exact(t).to_json();
    CHECK(j.at("best_n") == 4);
    CHECK(j.at("witness").contains("graph6"));
}
