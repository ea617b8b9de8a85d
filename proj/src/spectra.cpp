#include "eqlines/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlines {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& v) {
    AlgebraicNumber a;
    a.lo_ = v;
    a.hi_ = v;
    return a;
}

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const SturmChain> chain, Rational lo,
                                 Rational hi)
    : chain_(std::move(chain)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!chain_) throw std::invalid_argument("null Sturm chain");
    if (chain_->count_roots(lo_, hi_) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
}

const Rational& AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational value");
    return lo_;
}

void AlgebraicNumber::refine() {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    if (chain_->count_roots(lo_, mid) == 1)
        hi_ = mid;
    else
        lo_ = mid;
}

double AlgebraicNumber::approx() const {
    if (is_rational()) return lo_.get_d();
    AlgebraicNumber copy = *this;
    Rational tol(1, Integer("1000000000000"));
    while (copy.hi_ - copy.lo_ > tol) copy.refine();
    Rational mid = (copy.lo_ + copy.hi_) / 2;
    return mid.get_d();
}

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return lo_.get_str();
    return "root of " + chain_->poly().to_string() + " in (" + lo_.get_str() + ", " +
           hi_.get_str() + "]";
}

int AlgebraicNumber::compare_to(const Rational& r) const {
    if (is_rational()) return lo_ < r ? -1 : lo_ > r ? 1 : 0;
    if (r <= lo_) return 1;
    if (chain_->poly().sign_at(r) == 0 && r <= hi_) return 0;
    // r is not this root; locate the root relative to r.
    Rational cap = std::min(r, hi_);
    return chain_->count_roots(lo_, cap) == 1 ? -1 : 1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_rational()) return a.compare_to(b.lo_);
    if (a.is_rational()) return -b.compare_to(a.lo_);

    AlgebraicNumber x = a, y = b;
    IntPoly g = poly_gcd(x.chain_->poly(), y.chain_->poly());
    bool maybe_equal = false;
    std::unique_ptr<SturmChain> gchain;
    if (g.degree() > 0) {
        gchain = std::make_unique<SturmChain>(g);
        // Each isolating interval holds exactly one root of its own
        // polynomial, hence at most one root of the common factor.
        maybe_equal = gchain->count_roots(x.lo_, x.hi_) == 1 &&
                      gchain->count_roots(y.lo_, y.hi_) == 1;
    }
    while (true) {
        if (x.hi_ <= y.lo_) return -1;
        if (y.hi_ <= x.lo_) return 1;
        if (maybe_equal) {
            Rational ilo = std::max(x.lo_, y.lo_);
            Rational ihi = std::min(x.hi_, y.hi_);
            if (ilo < ihi && gchain->count_roots(ilo, ihi) == 1) return 0;
        }
        x.refine();
        y.refine();
    }
}

const AlgebraicNumber& SpectralSummary::kth(int k) const {
    if (k < 1 || k > n) throw std::out_of_range("eigenvalue index");
    int seen = 0;
    for (const auto& [value, mult] : eigenvalues) {
        seen += mult;
        if (k <= seen) return value;
    }
    throw std::logic_error("multiplicities do not cover the dimension");
}

int SpectralSummary::multiplicity_of(const Rational& v) const {
    for (const auto& [value, mult] : eigenvalues)
        if (value.compare_to(v) == 0) return mult;
    return 0;
}

SpectralSummary spectral_summary(const RationalSymmetricMatrix& m) {
    SpectralSummary out;
    out.n = m.size();
    if (m.size() == 0) return out;
    IntPoly p = char_poly(m);
    Integer bound = gershgorin_bound(m);
    Rational lo0(-bound), hi0(bound);

    std::vector<std::pair<AlgebraicNumber, int>> roots;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        IntPoly h = factor;
        // Factors of a monic integer polynomial are monic, so every rational
        // root is an integer inside the Gershgorin range.
        for (Integer c = -bound; c <= bound; ++c) {
            if (h.degree() <= 0) break;
            if (h.eval(c) == 0) {
                roots.emplace_back(AlgebraicNumber::from_rational(Rational(c)), mult);
                h = h.divide_exact(IntPoly(std::vector<Integer>{-c, Integer(1)}));
            }
        }
        if (h.degree() <= 0) continue;
        auto chain = std::make_shared<const SturmChain>(h);
        int total = chain->count_roots(lo0, hi0);
        if (total != h.degree())
            throw std::logic_error("symmetric matrix factor with non-real roots");
        // Bisection until every interval isolates a single root.
        std::vector<std::pair<Rational, Rational>> stack{{lo0, hi0}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            int c = chain->count_roots(lo, hi);
            if (c == 0) continue;
            if (c == 1) {
                roots.emplace_back(AlgebraicNumber(chain, lo, hi), mult);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            stack.push_back({lo, mid});
            stack.push_back({mid, hi});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return AlgebraicNumber::compare(a.first, b.first) > 0;
    });
    int total = 0;
    for (const auto& [value, mult] : roots) total += mult;
    if (total != m.size()) throw std::logic_error("multiplicities do not sum to n");
    out.eigenvalues = std::move(roots);
    return out;
}

int count_eigenvalues_above(const RationalSymmetricMatrix& m, const Rational& r) {
    if (m.size() == 0) return 0;
    int count = 0;
    for (auto& [factor, mult] : squarefree_decomposition(char_poly(m)))
        count += mult * SturmChain(factor).count_roots_above(r);
    return count;
}

bool interlacing_check(const RationalSymmetricMatrix& parent, const VertexSet& child_rows) {
    int n = parent.size();
    int k = static_cast<int>(child_rows.size());
    if (k == 0 || k > n) throw std::invalid_argument("bad child index set");
    auto child = parent.principal_submatrix(child_rows);
    auto ps = spectral_summary(parent);
    auto cs = spectral_summary(child);
    for (int i = 1; i <= k; ++i) {
        if (AlgebraicNumber::compare(ps.kth(i), cs.kth(i)) < 0) return false;
        if (AlgebraicNumber::compare(cs.kth(i), ps.kth(i + n - k)) < 0) return false;
    }
    return true;
}

}  // namespace eqlines
