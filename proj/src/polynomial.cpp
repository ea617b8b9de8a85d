#include "eqlines/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlines {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Integer& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

IntPoly IntPoly::derivative() const {
    std::vector<Integer> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> d = c_;
    for (auto& v : d) v = -v;
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> d(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> d(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Integer g = content();
    std::vector<Integer> d = c_;
    for (auto& v : d) v /= g;
    return IntPoly(std::move(d));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    // Long division over the rationals, then integrality check.
    std::vector<Rational> rem(c_.begin(), c_.end());
    int dd = divisor.degree();
    int dq = degree() - dd;
    if (dq < 0) {
        if (is_zero()) return IntPoly();
        throw std::invalid_argument("inexact polynomial division");
    }
    std::vector<Rational> q(dq + 1);
    Rational lead(divisor.leading());
    for (int i = dq; i >= 0; --i) {
        Rational f = rem[i + dd] / lead;
        q[i] = f;
        if (f != 0)
            for (int j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.coeff(j);
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0) throw std::invalid_argument("inexact polynomial division");
    std::vector<Integer> out(dq + 1);
    for (int i = 0; i <= dq; ++i) {
        if (q[i].get_den() != 1)
            throw std::invalid_argument("non-integer quotient coefficient");
        out[i] = q[i].get_num();
    }
    return IntPoly(std::move(out));
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
    if (divisor.is_zero()) return is_zero();
    if (is_zero()) return true;
    if (degree() < divisor.degree()) return false;
    std::vector<Rational> rem(c_.begin(), c_.end());
    int dd = divisor.degree();
    Rational lead(divisor.leading());
    for (int i = degree() - dd; i >= 0; --i) {
        Rational f = rem[i + dd] / lead;
        if (f != 0)
            for (int j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.coeff(j);
    }
    return std::all_of(rem.begin(), rem.begin() + dd,
                       [](const Rational& v) { return v == 0; });
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
        else if (c_[i] < 0) out += "-";
        Integer a = abs(c_[i]);
        if (i == 0 || a != 1) out += a.get_str();
        if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

namespace {

// Pseudo-remainder prem(a, b) with a positive multiplier, so signs of real
// evaluations are preserved relative to lc(b)-scaled division.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    if (a.degree() < b.degree()) return a;
    // Fraction-free elimination by cross-multiplication; every step rescales
    // the remainder by a positive constant, so signs of evaluations match
    // the true remainder.
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Integer c = r.leading();
        Integer lb = b.leading();
        Integer g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
        Integer mul_r = abs(lb / g);
        Integer mul_b = c / g * sgn(lb);
        std::vector<Integer> nr(r.coeffs());
        for (auto& v : nr) v *= mul_r;
        for (int j = 0; j <= b.degree(); ++j) nr[k + j] -= mul_b * b.coeff(j);
        r = IntPoly(std::move(nr));
    }
    return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.is_zero()) x = IntPoly({1});
    while (!y.is_zero()) {
        IntPoly r = signed_prem(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return IntPoly({1});
    if (sgn(x.leading()) < 0) x = -x;
    return x;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.primitive_part();
    if (sgn(f.leading()) < 0) f = -f;
    if (f.degree() == 0) return out;
    // Yun's algorithm with primitive parts at every step.
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly w = f.divide_exact(g);
    IntPoly y = f.derivative().divide_exact(g);
    IntPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        IntPoly a = poly_gcd(w, z);
        if (a.degree() > 0) {
            if (sgn(a.leading()) < 0) a = -a;
            out.emplace_back(a, i);
        }
        w = w.divide_exact(a);
        y = z.divide_exact(a);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

SturmChain::SturmChain(IntPoly f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    IntPoly g = poly_gcd(f, f.derivative());
    f_ = g.degree() > 0 ? f.divide_exact(g).primitive_part() : f.primitive_part();
    if (sgn(f_.leading()) < 0) f_ = -f_;
    seq_.push_back(f_);
    if (f_.degree() >= 1) {
        seq_.push_back(f_.derivative().primitive_part());
        while (seq_.back().degree() >= 1) {
            IntPoly r = signed_prem(seq_[seq_.size() - 2], seq_.back());
            if (r.is_zero()) break;
            seq_.push_back((-r).primitive_part());
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_pos_inf() const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.leading());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_neg_inf() const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.leading());
        if (s == 0) continue;
        if (p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

namespace {

// Primitive linear factor den*x - num of a rational root.
IntPoly linear_factor(const Rational& r) {
    return IntPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
}

}  // namespace

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) return 0;
    IntPoly g = f_;
    int extra = 0;
    if (g.sign_at(hi) == 0) {
        ++extra;
        g = g.divide_exact(linear_factor(hi));
    }
    while (g.sign_at(lo) == 0) g = g.divide_exact(linear_factor(lo));
    if (g.degree() <= 0) return extra;
    if (g == f_) return extra + variations_at(lo) - variations_at(hi);
    SturmChain sub(g);
    return extra + sub.variations_at(lo) - sub.variations_at(hi);
}

int SturmChain::count_roots_above(const Rational& lo) const {
    IntPoly g = f_;
    while (g.sign_at(lo) == 0) g = g.divide_exact(linear_factor(lo));
    if (g.degree() <= 0) return 0;
    if (g == f_) return variations_at(lo) - variations_at_pos_inf();
    SturmChain sub(g);
    return sub.variations_at(lo) - sub.variations_at_pos_inf();
}

int SturmChain::count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Integer root_magnitude_bound(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    if (p.degree() == 0) return 1;
    Integer maxc = 0;
    for (int i = 0; i < p.degree(); ++i) maxc = std::max(maxc, Integer(abs(p.coeff(i))));
    Integer lead = abs(p.leading());
    // 1 + max|a_i| / |lead|, rounded up.
    Integer b = maxc / lead + 2;
    return b;
}

}  // namespace eqlines
