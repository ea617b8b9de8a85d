#include "eqlines/bounds.hpp"

#include <algorithm>

#include "eqlines/matrix.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

nlohmann::json vertex_set_json(const VertexSet& s) {
    nlohmann::json j = nlohmann::json::array();
    for (int v : s) j.push_back(v);
    return j;
}

// Polynomials in one variable with coefficients in Q(sqrt 2); just enough
// arithmetic to check the identities behind the degree bound.
struct QPoly {
    std::vector<QuadExt> c;  // ascending

    static QPoly of(std::vector<QuadExt> coeffs) {
        QPoly p{std::move(coeffs)};
        while (!p.c.empty() && p.c.back() == QuadExt()) p.c.pop_back();
        return p;
    }
    QPoly operator*(const QPoly& o) const {
        if (c.empty() || o.c.empty()) return {};
        std::vector<QuadExt> d(c.size() + o.c.size() - 1);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) d[i + j] = d[i + j] + c[i] * o.c[j];
        return of(std::move(d));
    }
    QPoly operator-(const QPoly& o) const {
        std::vector<QuadExt> d(std::max(c.size(), o.c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) d[i] = d[i] + c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) d[i] = d[i] - o.c[i];
        return of(std::move(d));
    }
    bool operator==(const QPoly& o) const { return c == o.c; }
};

const QuadExt kSqrt2 = QuadExt::sqrt2();

}  // namespace

Rational projection_coordinate_bound(const Rational& alpha, long n, const Rational& lambda) {
    if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0,1)");
    if (n < 1) throw PreconditionError("n must be positive");
    Rational a2 = alpha * alpha;
    Rational c = (1 - a2) / (2 * a2);
    if (lambda <= c)
        throw PreconditionError("projection bound needs lambda > (1-alpha^2)/(2 alpha^2)");
    Rational denom_core = lambda * lambda / (a2 * n + 1 - a2) - c;
    // Positive by the same hypothesis (lambda > c and lambda^2 > c * (alpha^2 n + 1 - alpha^2)
    // need not hold in general, but the quadratic coefficient is positive whenever
    // lambda > c); guard anyway.
    if (denom_core <= 0)
        throw PreconditionError("degenerate projection denominator");
    return (lambda - c) / (lambda * denom_core);
}

DegreeBoundReport degree_upper_bound_fifth(long n, const Rational& lambda) {
    if (n < 276) throw PreconditionError("degree bound at alpha=1/5 needs n >= 276");
    if (lambda <= 12) throw PreconditionError("degree bound at alpha=1/5 needs lambda > 12");
    DegreeBoundReport rep;
    rep.alpha = Rational(1, 5);
    rep.n = n;
    rep.lambda = lambda;
    // Q^2 = (1 - 12/lambda) / (25 lambda^2/(n+24) - 12), exact. For an
    // actual code the denominator is positive (lambda grows with n); pairs
    // outside that region make the bound vacuous and Q^2 meaningless, so
    // report it as zero there.
    Rational denom = 25 * lambda * lambda / Rational(n + 24) - 12;
    Rational numer = 1 - Rational(12) / lambda;  // positive since lambda > 12
    rep.q_squared = denom > 0 ? numer / denom : Rational(0);

    // bound = sqrt(n/Q^2)/2 - 5 lambda/2 + 2 with n/Q^2 = n*denom/numer;
    // the comparison against 14 squares into the exact rational test
    // n*denom <= (24 + 5 lambda)^2 * numer, which also covers the vacuous
    // region (left side nonpositive, right side positive).
    Rational rhs = 24 + 5 * lambda;
    rep.certified_le_14 = Rational(n) * denom <= rhs * rhs * numer;

    Rational offset = 2 - 5 * lambda / 2;
    if (denom <= 0) {
        // No real bound to enclose; the certified claim above is all that
        // remains, and the degenerate enclosure keeps callers comparable.
        rep.bound = RationalInterval::point(offset);
        return rep;
    }
    Rational radicand = Rational(n) * denom / numer;
    Rational tol(1, 1024);
    for (int iter = 0; iter < 40; ++iter) {
        auto enc = sqrt_enclosure(radicand, tol) * Rational(1, 2);
        rep.bound = {enc.lo + offset, enc.hi + offset};
        bool decided = rep.bound.certainly_le(14) || rep.bound.certainly_gt(14);
        if (decided) {
            if (rep.bound.certainly_le(14) != rep.certified_le_14)
                throw std::logic_error("interval and squared comparison disagree");
            break;
        }
        tol /= 1024;
    }
    return rep;
}

Certificate verify_inequality_eq12() {
    Certificate cert;

    // Monotonicity pivot of f(t) = 25 t lambda^2/(t+24) - 12 t:
    // f'(t) = 600 lambda^2/(t+24)^2 - 12 vanishes where (t+24)^2 = 50 lambda^2.
    {
        QPoly t0_plus_24 = QPoly::of({QuadExt(0, 0), QuadExt(0, 5)});  // 5 sqrt(2) lambda
        QPoly lhs = QPoly::of({QuadExt(12)}) * t0_plus_24 * t0_plus_24;
        QPoly rhs = QPoly::of({QuadExt(0), QuadExt(0), QuadExt(600)});
        cert.add_step("pivot of f: 12 (5 sqrt2 lambda)^2 = 600 lambda^2, so f' changes sign at t = 5 sqrt2 lambda - 24",
                      "degree-bound-pivot", lhs == rhs);
    }
    // f(276) = 23 lambda^2 - 3312.
    cert.add_step("f(276) = 23 lambda^2 - 3312", "degree-bound-f276",
                  25 * 276 == 23 * 300 && 12 * 276 == 3312,
                  {{"25*276", 25 * 276}, {"23*300", 23 * 300}, {"12*276", 12 * 276}});
    // g(12) = 0.
    IntPoly g({-3456, 504, -30, 1});
    cert.add_step("g(12) = 0", "cubic-root-at-12", g.eval(Integer(12)) == 0,
                  {{"g(12)", g.eval(Integer(12)).get_str()}});
    // g' has negative discriminant and positive leading coefficient.
    Integer disc = Integer(60) * 60 - 4 * 3 * 504;
    cert.add_step("g'(lambda) = 3 lambda^2 - 60 lambda + 504 has no real root (discriminant -2448) and opens upward",
                  "cubic-monotone", disc == -2448 && disc < 0,
                  {{"discriminant", disc.get_str()}});
    // Case 1 squared equivalence: (24+5l)^2 (l-12) - (23 l^2 - 3312) l = 2 g(l).
    {
        IntPoly rhs_sq({24, 5});
        IntPoly lhs = rhs_sq * rhs_sq * IntPoly({-12, 1}) -
                      IntPoly({0, -3312, 0, 23});  // (23 l^2 - 3312) l
        IntPoly two_g({-6912, 1008, -60, 2});
        cert.add_step("case 1 (12 < lambda < 40): squared inequality is equivalent to g(lambda) >= 0",
                      "case1-equivalence", lhs == two_g,
                      {{"difference", (lhs - two_g).to_string()}});
    }
    // Case 1 applies: the pivot stays below 276 for lambda < 40, i.e. 40 <= 30 sqrt 2.
    cert.add_step("for lambda < 40 the pivot 5 sqrt2 lambda - 24 is below 276 (40 < 30 sqrt 2)",
                  "case1-pivot-below-276", (QuadExt(0, 30) - QuadExt(40)).sign() > 0);
    // Case 2 value at the pivot: (5 sqrt2 l - 24)(25 l^2 - 60 sqrt2 l) = (25 l^2 - 120 sqrt2 l + 288)(5 sqrt2 l).
    {
        QPoly t0 = QPoly::of({QuadExt(-24), QuadExt(0, 5)});
        QPoly inner = QPoly::of({QuadExt(0), QuadExt(0, -60), QuadExt(25)});
        QPoly lhs = t0 * inner;
        QPoly fpivot = QPoly::of({QuadExt(288), QuadExt(0, -120), QuadExt(25)});
        QPoly rhs = fpivot * QPoly::of({QuadExt(0), QuadExt(0, 5)});
        cert.add_step("f at the pivot equals 25 lambda^2 - 120 sqrt2 lambda + 288",
                      "case2-pivot-value", lhs == rhs);
    }
    // Case 2 squared equivalence: (24+5l)^2 (l-12) - (25 l^2 - 120 sqrt2 l + 288) l
    //   = (120 sqrt2 - 60) l^2 - 2592 l - 6912.
    {
        QPoly rhs_sq = QPoly::of({QuadExt(24), QuadExt(5)});
        QPoly lhs = rhs_sq * rhs_sq * QPoly::of({QuadExt(-12), QuadExt(1)}) -
                    QPoly::of({QuadExt(0), QuadExt(288), QuadExt(0, -120), QuadExt(25)});
        QPoly quad = QPoly::of({QuadExt(-6912), QuadExt(-2592), QuadExt(-60, 120)});
        cert.add_step("case 2 (lambda >= 40): squared inequality is equivalent to (120 sqrt2 - 60) lambda^2 - 2592 lambda - 6912 >= 0",
                      "case2-equivalence", lhs == quad);
    }
    // The case 2 quadratic is nonnegative on [40, inf): positive leading
    // coefficient, vertex left of 40, nonnegative value at 40.
    {
        QuadExt lead(-60, 120);
        QuadExt at40 = lead * QuadExt(1600) - QuadExt(2592 * 40) - QuadExt(6912);
        QuadExt vertex_check = QuadExt(80) * lead - QuadExt(2592);  // 2*40*lead - 2592
        cert.add_step("case 2 quadratic: leading coefficient > 0, value at 40 >= 0, vertex < 40",
                      "case2-nonnegative",
                      lead.sign() > 0 && at40.sign() >= 0 && vertex_check.sign() > 0,
                      {{"value_at_40", at40.to_string()}});
    }
    return cert;
}

Rational balla_degree_bound(const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0,1)");
    Rational a2 = alpha * alpha, a3 = a2 * alpha;
    return (1 + 3 * a2 - 4 * a3) / (8 * a3);
}

Rational uniform_upper(const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0,1)");
    Rational a2 = alpha * alpha;
    if (2 * a2 >= 1)
        throw PreconditionError("uniform upper bound needs alpha^2 < 1/2");
    return (1 - a2) * (1 - 2 * a2) / (2 * a2 * a2);
}

Certificate second_eigenvalue_inference(long k, long d, const CodeSpec& c) {
    if (k < 2) throw PreconditionError("k >= 2 required");
    if (c.alpha != Rational(1, 2 * k - 1))
        throw PreconditionError("code angle must be 1/(2k-1)");
    long n = c.size();
    if (n <= k * (d - 1) / (k - 1))
        throw PreconditionError("n must exceed floor(k(d-1)/(k-1))");
    if (d <= 3 * k - 2) throw PreconditionError("d > 3k-2 required");
    if (!is_psd(scaled_integer_gram(c)).psd)
        throw PreconditionError("Gram matrix is not PSD: not a realizable code");

    Certificate cert;
    auto a = RationalSymmetricMatrix::adjacency(c.graph);
    Rational target(k - 1);
    int mult = multiplicity_of_rational_eigenvalue(a, target);
    cert.add_step("k-1 is an adjacency eigenvalue", "second-eigenvalue-step1", mult >= 1,
                  {{"multiplicity", mult}});
    int above = count_eigenvalues_above(a, target);
    cert.add_step("the largest adjacency eigenvalue exceeds k-1",
                  "second-eigenvalue-step2", above >= 1,
                  {{"eigenvalues_above", above}});
    cert.add_step("exactly one eigenvalue exceeds k-1, so lambda_2 = k-1",
                  "second-eigenvalue-step3", above == 1 && mult >= 1);
    bool final_ok = n <= d + 1 + mult;
    cert.add_step("n <= d + 1 + m_{k-1}(A)", "second-eigenvalue-conclusion", final_ok,
                  {{"n", n}, {"d", d}, {"multiplicity", mult}});
    cert.witnesses = {{"k", k}, {"d", d}, {"n", n}, {"multiplicity", mult}};
    return cert;
}

long multiplicity_tree_bound(const Graph& g, int k) {
    if (!is_connected(g)) throw PreconditionError("connected graph required");
    if (k < 2 || k > g.vertex_count())
        throw PreconditionError("index restricted to 2 <= k <= n");
    return static_cast<long>(k - 1) * max_degree(g) + cyclomatic_number(g);
}

namespace {

// Shared hypothesis check: connected, Delta <= max_deg, lambda_2 exactly
// equal to the given rational.
void check_multiplicity_hypotheses(const Graph& g, const RationalSymmetricMatrix& a,
                                   const Rational& lambda2, int max_deg) {
    if (!is_connected(g)) throw PreconditionError("connected graph required");
    if (max_degree(g) > max_deg)
        throw PreconditionError("maximum degree exceeds the lemma hypothesis");
    if (multiplicity_of_rational_eigenvalue(a, lambda2) < 1 ||
        count_eigenvalues_above(a, lambda2) != 1)
        throw PreconditionError("second largest adjacency eigenvalue is not the required value");
}

}  // namespace

Certificate m2_bound_certified(const Graph& g) {
    auto a = RationalSymmetricMatrix::adjacency(g);
    check_multiplicity_hypotheses(g, a, 2, 14);
    Certificate cert;
    int n = g.vertex_count();
    long bound = 0;
    if (n <= 80) {
        bound = 80;
        cert.add_step("n <= 80, multiplicity trivially bounded by the order",
                      "multiplicity2-size-branch", true, {{"n", n}});
    } else if (max_degree(g) >= 4) {
        auto w = find_subgraph(g, Pattern::T1112);
        cert.add_step("spider T(1,1,1,2) found as a subgraph", "multiplicity2-spider-branch",
                      w.has_value(), w ? nlohmann::json{{"witness", vertex_set_json(*w)}}
                                       : nlohmann::json::object());
        if (!w) return cert;
        auto sub = RationalSymmetricMatrix::adjacency(induced_subgraph(g, *w));
        cert.add_step("witness spectral radius exceeds 2", "witness-radius",
                      count_eigenvalues_above(sub, 2) >= 1);
        auto nb = closed_neighborhood(g, *w);
        bound = static_cast<long>(nb.size());
        cert.add_step("closed neighborhood of the witness has at most 80 vertices",
                      "neighborhood-count", bound <= 80, {{"size", bound}});
    } else {
        long ell = cyclomatic_number(g);
        auto girth_len = girth(g);
        if (ell <= 1) {
            bound = multiplicity_tree_bound(g, 2);
            cert.add_step("cyclomatic number at most 1: multiplicity at most Delta + l <= 4",
                          "multiplicity2-sparse-branch", bound <= 4,
                          {{"cyclomatic", ell}, {"bound", bound}});
        } else if (girth_len && *girth_len <= 5) {
            auto cyc = find_subgraph(g, Pattern::CYCLE_LE_5);
            cert.add_step("short cycle found", "multiplicity2-girth-branch", cyc.has_value(),
                          cyc ? nlohmann::json{{"witness", vertex_set_json(*cyc)}}
                              : nlohmann::json::object());
            if (!cyc) return cert;
            auto c2 = extend_by_attached_vertex(g, *cyc);
            auto sub = RationalSymmetricMatrix::adjacency(induced_subgraph(g, c2));
            cert.add_step("cycle plus attached vertex has spectral radius above 2",
                          "witness-radius", count_eigenvalues_above(sub, 2) >= 1);
            auto nb = closed_neighborhood(g, c2);
            bound = static_cast<long>(nb.size());
            cert.add_step("closed neighborhood of the extended cycle has at most 12 vertices",
                          "neighborhood-count", bound <= 12, {{"size", bound}});
        } else {
            auto w = find_subgraph(g, Pattern::T222);
            cert.add_step("spider T(2,2,2) found as a subgraph", "multiplicity2-tall-girth-branch",
                          w.has_value(), w ? nlohmann::json{{"witness", vertex_set_json(*w)}}
                                           : nlohmann::json::object());
            if (!w) return cert;
            auto v1p = extend_by_attached_vertex(g, *w);
            auto sub = RationalSymmetricMatrix::adjacency(induced_subgraph(g, v1p));
            cert.add_step("spider plus attached vertex has spectral radius above 2",
                          "witness-radius", count_eigenvalues_above(sub, 2) >= 1);
            auto nb = closed_neighborhood(g, v1p);
            bound = static_cast<long>(nb.size());
            // Direct counting gives <= 19 here (Delta <= 3); comfortably
            // inside the overall 80.
            cert.add_step("closed neighborhood of the extended spider has at most 80 vertices",
                          "neighborhood-count", bound <= 80, {{"size", bound}});
        }
    }
    int mult = multiplicity_of_rational_eigenvalue(a, 2);
    cert.add_step("exact multiplicity of eigenvalue 2 is within the branch constant",
                  "exact-multiplicity", mult <= bound && bound <= 80,
                  {{"multiplicity", mult}, {"branch_bound", bound}});
    cert.witnesses = {{"multiplicity", mult}, {"branch_bound", bound}};
    return cert;
}

Certificate m1_bound_certified(const Graph& g) {
    auto a = RationalSymmetricMatrix::adjacency(g);
    check_multiplicity_hypotheses(g, a, 1, 3);
    Certificate cert;
    int n = g.vertex_count();
    long bound = 8;
    if (n <= 8) {
        cert.add_step("n <= 8, multiplicity trivially bounded by the order",
                      "multiplicity1-size-branch", true, {{"n", n}});
    } else {
        auto w = find_subgraph(g, Pattern::P3);
        cert.add_step("path P3 found as a subgraph", "multiplicity1-path-branch",
                      w.has_value(), w ? nlohmann::json{{"witness", vertex_set_json(*w)}}
                                       : nlohmann::json::object());
        if (!w) return cert;
        auto sub = RationalSymmetricMatrix::adjacency(induced_subgraph(g, *w));
        cert.add_step("witness spectral radius exceeds 1", "witness-radius",
                      count_eigenvalues_above(sub, 1) >= 1);
        auto nb = closed_neighborhood(g, *w);
        bound = static_cast<long>(nb.size());
        cert.add_step("closed neighborhood of the path has at most 8 vertices",
                      "neighborhood-count", bound <= 8, {{"size", bound}});
    }
    int mult = multiplicity_of_rational_eigenvalue(a, 1);
    cert.add_step("exact multiplicity of eigenvalue 1 is within the branch constant",
                  "exact-multiplicity", mult <= bound && bound <= 8,
                  {{"multiplicity", mult}, {"branch_bound", bound}});
    cert.witnesses = {{"multiplicity", mult}, {"branch_bound", bound}};
    return cert;
}

Integer relative_bound_aggregate(long d, long m, const std::map<long, Integer>& inner_bounds) {
    if (m < 1 || d < 1) throw PreconditionError("d >= 1 and m >= 1 required");
    if ((2 * m + 1) * (2 * m + 1) <= d)
        throw PreconditionError("requires (2m+1)^2 > d");
    Integer best = 0;
    for (long j = 2; j <= m + 1; ++j) {
        auto it = inner_bounds.find(j);
        if (it == inner_bounds.end())
            throw PreconditionError("missing inner bound for angle 1/(2j-1), j=" +
                                    std::to_string(j));
        best = std::max(best, it->second);
    }
    Rational last = Rational(4 * d * m * (m + 1)) / Rational((2 * m + 1) * (2 * m + 1) - d);
    Integer floor_last;
    mpz_fdiv_q(floor_last.get_mpz_t(), last.get_num_mpz_t(), last.get_den_mpz_t());
    return std::max(best, floor_last);
}

Certificate theorem_pipeline(const Rational& alpha, long d) {
    Certificate cert;
    if (alpha == Rational(1, 5)) {
        if (d < 185) throw PreconditionError("pipeline at alpha=1/5 needs d >= 185");
        long target = (3 * d - 3) / 2;
        auto construction = construction_certificate(3, d);
        cert.add_step("construction certifies the lower bound floor((3d-3)/2)",
                      "pipeline-lower-bound", construction.all_steps_ok(),
                      {{"target", target}});
        cert.add_step("uniform upper bound at alpha=1/5 equals 276",
                      "pipeline-uniform-upper", uniform_upper(Rational(1, 5)) == 276);
        cert.add_step("a family larger than the target has more than 276 lines, forcing lambda_1(M) > 12",
                      "pipeline-lambda-threshold", target + 1 > 276,
                      {{"n_lower", target + 1}});
        auto eq12 = verify_inequality_eq12();
        cert.add_step("degree bound Delta <= 14 (two-case algebra verified exactly)",
                      "pipeline-degree-bound", eq12.all_steps_ok());
        cert.add_step("second-eigenvalue lemma applies: d > 3k-2 at k=3",
                      "pipeline-second-eigenvalue", d > 7);
        cert.add_step("multiplicity of eigenvalue 2 is at most 80 for the relevant component",
                      "pipeline-multiplicity", true, {{"constant", 80}});
        cert.add_step("contradiction: d + 1 + 80 <= floor((3d-3)/2)",
                      "pipeline-final-inequality", d + 81 <= target,
                      {{"lhs", d + 81}, {"rhs", target}});
        cert.assumptions = {
            "edge-disjoint spectral lemma (universal over connected graphs; validated by the property suites)",
            "multiplicity vs cyclomatic-number bound for connected graphs (universal; validated by the property suites)",
            "multiplicity of eigenvalue 2 at most 80 when lambda_2 = 2 and Delta <= 14 (universal; replayed per graph by the certified checker)",
            "matrix-projection coordinate bound for unit Gram eigenvectors (Balla)",
            "existence of 276 equiangular lines at arccos(1/5) in R^23 (Conway)",
        };
        cert.witnesses = {{"alpha", "1/5"},
                          {"d", d},
                          {"target", target},
                          {"chain", {276, 12, 14, 80}}};
    } else if (alpha == Rational(1, 3)) {
        if (d < 15) throw PreconditionError("pipeline at alpha=1/3 needs d >= 15");
        long target = 2 * d - 2;
        auto construction = construction_certificate(2, d);
        cert.add_step("construction certifies the lower bound 2d-2",
                      "pipeline-lower-bound", construction.all_steps_ok(),
                      {{"target", target}});
        cert.add_step("uniform upper bound at alpha=1/3 equals 28",
                      "pipeline-uniform-upper", uniform_upper(Rational(1, 3)) == 28);
        cert.add_step("a family larger than the target has more than 28 lines, forcing lambda_1(M) > 4",
                      "pipeline-lambda-threshold", target + 1 > 28,
                      {{"n_lower", target + 1}});
        cert.add_step("degree bound: Delta < 4 since the projection bound evaluates to exactly 4",
                      "pipeline-degree-bound", balla_degree_bound(Rational(1, 3)) == 4,
                      {{"bound", balla_degree_bound(Rational(1, 3)).get_str()}});
        cert.add_step("second-eigenvalue lemma applies: d > 3k-2 at k=2",
                      "pipeline-second-eigenvalue", d > 4);
        cert.add_step("multiplicity of eigenvalue 1 is at most 8 for the relevant component",
                      "pipeline-multiplicity", true, {{"constant", 8}});
        cert.add_step("contradiction: d + 1 + 8 <= 2d - 2",
                      "pipeline-final-inequality", d + 9 <= target,
                      {{"lhs", d + 9}, {"rhs", target}});
        cert.assumptions = {
            "edge-disjoint spectral lemma (universal over connected graphs; validated by the property suites)",
            "multiplicity of eigenvalue 1 at most 8 when lambda_2 = 1 and Delta <= 3 (universal; replayed per graph by the certified checker)",
            "matrix-projection degree bound for general angles (Balla)",
            "existence of 28 equiangular lines at arccos(1/3) in R^7 (van Lint-Seidel)",
        };
        cert.witnesses = {{"alpha", "1/3"},
                          {"d", d},
                          {"target", target},
                          {"chain", {28, 4, 3, 8}}};
    } else {
        throw PreconditionError("pipeline supports alpha = 1/5 or 1/3 only");
    }
    return cert;
}

}  // namespace eqlines
