#include "eqlines/matrix.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eqlines {

void RationalSymmetricMatrix::set(int i, int j, const Rational& v) {
    a_.at(std::size_t(i) * n_ + j) = v;
    a_.at(std::size_t(j) * n_ + i) = v;
}

RationalSymmetricMatrix RationalSymmetricMatrix::identity(int n, const Rational& scale) {
    RationalSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, scale);
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::all_ones(int n, const Rational& scale) {
    RationalSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, scale);
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::adjacency(const Graph& g) {
    RationalSymmetricMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) m.set(u, v, 1);
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::operator+(
    const RationalSymmetricMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    RationalSymmetricMatrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::operator-(
    const RationalSymmetricMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    RationalSymmetricMatrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::scaled(const Rational& factor) const {
    RationalSymmetricMatrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * factor;
    return m;
}

RationalSymmetricMatrix RationalSymmetricMatrix::principal_submatrix(
    const VertexSet& rows) const {
    RationalSymmetricMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], rows[j]));
    return m;
}

bool RationalSymmetricMatrix::is_integer() const {
    for (const auto& v : a_)
        if (v.get_den() != 1) return false;
    return true;
}

Rational RationalSymmetricMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Rational RationalSymmetricMatrix::trace_of_square() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t += at(i, j) * at(i, j);
    return t;
}

namespace {

// Dense rational row-echelon worker shared by rank and kernel extraction.
struct Echelon {
    int n;
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivot_col;

    explicit Echelon(const RationalSymmetricMatrix& m) : n(m.size()) {
        rows.assign(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        reduce();
    }

    void reduce() {
        int r = 0;
        for (int c = 0; c < n && r < n; ++c) {
            int p = -1;
            for (int i = r; i < n; ++i)
                if (rows[i][c] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(rows[r], rows[p]);
            Rational inv = rows[r][c];
            for (int j = c; j < n; ++j) rows[r][j] /= inv;
            for (int i = 0; i < n; ++i) {
                if (i == r || rows[i][c] == 0) continue;
                Rational f = rows[i][c];
                for (int j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
            }
            pivot_col.push_back(c);
            ++r;
        }
    }
};

}  // namespace

int rank(const RationalSymmetricMatrix& m) {
    return static_cast<int>(Echelon(m).pivot_col.size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalSymmetricMatrix& m) {
    Echelon e(m);
    int n = m.size();
    std::vector<char> is_pivot(n, 0);
    for (int c : e.pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < e.pivot_col.size(); ++r)
            v[e.pivot_col[r]] = -e.rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

PsdResult is_psd(const RationalSymmetricMatrix& m) {
    int n = m.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);

    std::vector<char> active(n, 1);
    // Pivot order plus normalized pivot rows for lifting a witness back to
    // the original coordinates.
    std::vector<int> pivots;
    std::vector<std::vector<std::pair<int, Rational>>> pivot_rows;

    auto lift_witness = [&](std::vector<Rational> x, PsdResult& res) {
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            Rational acc = 0;
            for (const auto& [col, val] : pivot_rows[k]) acc += val * x[col];
            x[pivots[k]] = -acc;
        }
        Rational q = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (x[j] == 0) continue;
                q += x[i] * m.at(i, j) * x[j];
            }
        }
        if (!(q < 0)) throw std::logic_error("indefiniteness witness failed self-check");
        res.witness = std::move(x);
        res.witness_value = q;
    };

    PsdResult res;
    int remaining = n;
    while (remaining > 0) {
        int pivot = -1;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = sgn(w[i][i]);
            if (s < 0) {
                // Negative Schur-complement diagonal: e_i certifies failure.
                std::vector<Rational> x(n, Rational(0));
                x[i] = 1;
                lift_witness(std::move(x), res);
                return res;
            }
            if (s > 0 && pivot < 0) pivot = i;
        }
        if (pivot < 0) {
            // All remaining diagonals are zero; any off-diagonal entry in the
            // remaining block makes the matrix indefinite.
            for (int i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (!active[j] || w[i][j] == 0) continue;
                    std::vector<Rational> x(n, Rational(0));
                    x[i] = 1;
                    x[j] = sgn(w[i][j]) > 0 ? -1 : 1;
                    lift_witness(std::move(x), res);
                    return res;
                }
            }
            break;  // zero block, PSD
        }
        const Rational d = w[pivot][pivot];
        active[pivot] = 0;
        --remaining;
        std::vector<std::pair<int, Rational>> row;
        for (int j = 0; j < n; ++j)
            if (active[j] && w[pivot][j] != 0) row.emplace_back(j, w[pivot][j] / d);
        // Schur complement update on the remaining block.
        for (const auto& [i, fi] : row)
            for (const auto& [j, fj] : row)
                if (i <= j) {
                    w[i][j] -= fi * w[pivot][j];
                    if (i != j) w[j][i] = w[i][j];
                }
        pivots.push_back(pivot);
        pivot_rows.push_back(std::move(row));
        ++res.positive_pivots;
    }
    res.psd = true;
    return res;
}

IntPoly char_poly(const RationalSymmetricMatrix& m) {
    if (!m.is_integer()) throw std::invalid_argument("char_poly requires integer entries");
    int n = m.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).get_num();
    // Faddeev-LeVerrier: exact integer recurrence for the coefficients.
    std::vector<Integer> coeff(n + 1);
    coeff[n] = 1;
    std::vector<std::vector<Integer>> mk = a;
    for (int k = 1; k <= n; ++k) {
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += mk[i][i];
        Integer c = -tr / k;
        if (c * k != -tr) throw std::logic_error("inexact trace division");
        coeff[n - k] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk[i][i] += c;
        std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, Integer(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                const Integer& f = a[i][l];
                for (int j = 0; j < n; ++j) next[i][j] += f * mk[l][j];
            }
        mk = std::move(next);
    }
    return IntPoly(std::move(coeff));
}

int multiplicity_of_rational_eigenvalue(const RationalSymmetricMatrix& m,
                                        const Rational& lambda) {
    auto shifted = m - RationalSymmetricMatrix::identity(m.size(), lambda);
    return m.size() - rank(shifted);
}

Integer gershgorin_bound(const RationalSymmetricMatrix& m) {
    Rational best = 0;
    for (int i = 0; i < m.size(); ++i) {
        Rational row = 0;
        for (int j = 0; j < m.size(); ++j) row += abs(m.at(i, j));
        if (row > best) best = row;
    }
    Integer b;
    mpz_cdiv_q(b.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
    return b + 1;
}

void write_matrix(std::ostream& os, const RationalSymmetricMatrix& m) {
    os << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j).get_str();
        }
        os << '\n';
    }
}

RationalSymmetricMatrix read_matrix(std::istream& is) {
    int n;
    if (!(is >> n) || n < 0) throw std::invalid_argument("bad matrix header");
    RationalSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("truncated matrix");
            Rational v = parse_rational(tok);
            if (j < i && v != m.at(i, j))
                throw std::invalid_argument("matrix not symmetric");
            if (j >= i) m.set(i, j, v);
        }
    return m;
}

}  // namespace eqlines
