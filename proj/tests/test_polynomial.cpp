#include <doctest.h>

#include "eqlines/polynomial.hpp"

using namespace eqlines;

TEST_CASE("arithmetic and evaluation") {
    IntPoly p{-2, 0, 1};  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Integer(3)) == 7);
    CHECK(p.eval(Rational(3, 2)) == Rational(1, 4));
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.sign_at(Rational(2)) == 1);
    CHECK(p.derivative() == IntPoly{0, 2});
    CHECK((p * IntPoly{1, 1}) == IntPoly{-2, -2, 1, 1});
    CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
}

TEST_CASE("content and exact division") {
    IntPoly p{6, 12, 18};
    CHECK(p.content() == 6);
    CHECK(p.primitive_part() == IntPoly{1, 2, 3});
    IntPoly prod = IntPoly{-1, 1} * IntPoly{2, 0, 3};
    CHECK(prod.divide_exact(IntPoly{-1, 1}) == IntPoly{2, 0, 3});
    CHECK(prod.divisible_by(IntPoly{2, 0, 3}));
    CHECK_FALSE(prod.divisible_by(IntPoly{1, 1}));
    CHECK_THROWS(prod.divide_exact(IntPoly{1, 1}));
}

TEST_CASE("gcd via primitive remainder sequences") {
    IntPoly a = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{3, 1};
    IntPoly b = IntPoly{-1, 1} * IntPoly{5, 1};
    CHECK(poly_gcd(a, b) == IntPoly{-1, 1});
    CHECK(poly_gcd(a, IntPoly{}) == a.primitive_part());
    // Coprime inputs give a constant.
    CHECK(poly_gcd(IntPoly{-1, 1}, IntPoly{1, 1}).degree() == 0);
    // Result is primitive with positive leading coefficient.
    IntPoly c = IntPoly{-4, 2} * IntPoly{-6, 3};  // 6 (x-2)^2
    CHECK(poly_gcd(c, c) == IntPoly{4, -4, 1});
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // (x-1)^3 (x+2)^2 (x-5)
    IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1} *
                IntPoly{2, 1} * IntPoly{-5, 1};
    auto parts = squarefree_decomposition(f);
    IntPoly rebuilt{1};
    for (const auto& [factor, mult] : parts)
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt * factor;
    CHECK(rebuilt == f.primitive_part());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            CHECK(poly_gcd(parts[i].first, parts[j].first).degree() == 0);
}

TEST_CASE("Sturm chains count real roots exactly") {
    SturmChain sqrt2(IntPoly{-2, 0, 1});
    CHECK(sqrt2.count_real_roots() == 2);
    CHECK(sqrt2.count_roots(Rational(0), Rational(2)) == 1);
    CHECK(sqrt2.count_roots(Rational(-2), Rational(2)) == 2);
    CHECK(sqrt2.count_roots_above(Rational(0)) == 1);
    CHECK(sqrt2.count_roots_above(Rational(2)) == 0);

    // Roots at interval endpoints: (lo, hi] is half-open.
    SturmChain linear(IntPoly{-1, 1});
    CHECK(linear.count_roots(Rational(0), Rational(1)) == 1);
    CHECK(linear.count_roots(Rational(1), Rational(2)) == 0);

    // Repeated roots are counted once (squarefree part).
    SturmChain rep(IntPoly{-1, 1} * IntPoly{-1, 1});
    CHECK(rep.count_real_roots() == 1);

    // No real roots.
    SturmChain none(IntPoly{1, 0, 1});
    CHECK(none.count_real_roots() == 0);

    // x^3 - 30x^2 + 504x - 3456 has exactly one real root, at 12.
    SturmChain cubic(IntPoly{-3456, 504, -30, 1});
    CHECK(cubic.count_real_roots() == 1);
    CHECK(cubic.count_roots(Rational(11), Rational(12)) == 1);
}

TEST_CASE("root magnitude bound") {
    IntPoly p{-100, 0, 1};  // roots +-10
    Integer b = root_magnitude_bound(p);
    CHECK(b >= 10);
    SturmChain chain(p);
    CHECK(chain.count_roots(Rational(-b), Rational(b)) == 2);
    CHECK_THROWS(root_magnitude_bound(IntPoly{}));
}
