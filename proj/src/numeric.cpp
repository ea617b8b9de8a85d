#include "eqlines/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eqlines {

std::vector<std::vector<double>> to_double(const RationalSymmetricMatrix& m) {
    int n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).get_d();
    return a;
}

EigenDecomposition jacobi_eigen(const std::vector<std::vector<double>>& input) {
    int n = static_cast<int>(input.size());
    auto a = input;
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });
    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (int k : order) {
        out.values.push_back(a[k][k]);
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = v[i][k];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

std::vector<std::vector<double>> pivoted_cholesky(const std::vector<std::vector<double>>& m,
                                                  int rank) {
    int n = static_cast<int>(m.size());
    if (rank < 0 || rank > n) throw std::invalid_argument("bad rank");
    auto w = m;
    std::vector<std::vector<double>> l(n, std::vector<double>(rank, 0.0));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < rank; ++k) {
        int best = k;
        for (int i = k + 1; i < n; ++i)
            if (w[perm[i]][perm[i]] > w[perm[best]][perm[best]]) best = i;
        std::swap(perm[k], perm[best]);
        int p = perm[k];
        double d = w[p][p];
        if (d <= 0.0) break;  // remaining mass is numerically zero
        double root = std::sqrt(d);
        l[p][k] = root;
        for (int i = k + 1; i < n; ++i) {
            int q = perm[i];
            l[q][k] = w[q][p] / root;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                int qi = perm[i], qj = perm[j];
                w[qi][qj] -= l[qi][k] * l[qj][k];
            }
    }
    return l;
}

}  // namespace eqlines
