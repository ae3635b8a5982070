#include "qwmvc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwmvc {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    const auto& xa = a.raw();
    const auto& xb = b.raw();
    for (std::size_t i = 0; i < xa.size(); ++i) {
        worst = std::max(worst, std::abs(xa[i] - xb[i]));
    }
    return worst;
}

namespace {

double offdiag_norm(const Matrix& a) {
    const int n = a.size();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(2.0 * sum);
}

}  // namespace

EigenDecomposition jacobi_eigh(Matrix a) {
    const int n = a.size();
    Matrix q = Matrix::identity(n);
    if (n > 1) {
        double scale = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                scale = std::max(scale, std::abs(a(i, j)));
            }
        }
        const double stop = (scale > 0.0) ? 1e-15 * scale * n : 0.0;
        const int max_sweeps = 64;
        for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
            for (int p = 0; p < n - 1; ++p) {
                for (int r = p + 1; r < n; ++r) {
                    const double apr = a(p, r);
                    if (std::abs(apr) <= stop / (n * n + 1.0)) {
                        continue;
                    }
                    const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);

                    const double app = a(p, p);
                    const double arr = a(r, r);
                    a(p, p) = app - t * apr;
                    a(r, r) = arr + t * apr;
                    a(p, r) = 0.0;
                    a(r, p) = 0.0;
                    for (int k = 0; k < n; ++k) {
                        if (k != p && k != r) {
                            const double akp = a(k, p);
                            const double akr = a(k, r);
                            a(k, p) = akp - s * (akr + tau * akp);
                            a(k, r) = akr + s * (akp - tau * akr);
                            a(p, k) = a(k, p);
                            a(r, k) = a(k, r);
                        }
                        const double qkp = q(k, p);
                        const double qkr = q(k, r);
                        q(k, p) = qkp - s * (qkr + tau * qkp);
                        q(k, r) = qkr + s * (qkp - tau * qkr);
                    }
                }
            }
        }
    }

    EigenDecomposition dec;
    dec.values.resize(n);
    for (int i = 0; i < n; ++i) {
        dec.values[i] = a(i, i);
    }
    // sort ascending, carrying eigenvector columns along
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return dec.values[x] < dec.values[y]; });
    std::vector<double> sorted_values(n);
    Matrix sorted_vectors(n);
    for (int k = 0; k < n; ++k) {
        sorted_values[k] = dec.values[order[k]];
        for (int i = 0; i < n; ++i) {
            sorted_vectors(i, k) = q(i, order[k]);
        }
    }
    dec.values = std::move(sorted_values);
    dec.vectors = std::move(sorted_vectors);
    return dec;
}

}  // namespace qwmvc
