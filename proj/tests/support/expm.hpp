#pragma once

// Test-only matrix exponential oracle, independent of the spectral route the
// library uses: scaling-and-squaring with a Taylor series. Dense complex
// matrices, intended for n <= ~60.

#include <cmath>
#include <complex>
#include <vector>

#include "qwmvc/linalg.hpp"

namespace qwmvc::testing {

struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    explicit CMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

    std::complex<double>& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::complex<double>& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }

    static CMatrix identity(int size) {
        CMatrix m(size);
        for (int i = 0; i < size; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline CMatrix multiply(const CMatrix& x, const CMatrix& y) {
    const int n = x.n;
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const std::complex<double> xik = x(i, k);
            if (xik == std::complex<double>(0.0)) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                out(i, j) += xik * y(k, j);
            }
        }
    }
    return out;
}

inline double inf_norm(const CMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) {
            row += std::abs(m(i, j));
        }
        worst = std::max(worst, row);
    }
    return worst;
}

/// exp(M) by scaling and squaring + Taylor.
inline CMatrix expm(CMatrix m) {
    const int n = m.n;
    int squarings = 0;
    double norm = inf_norm(m);
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& z : m.a) {
        z *= scale;
    }
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = multiply(term, m);
        const double inv = 1.0 / k;
        for (auto& z : term.a) {
            z *= inv;
        }
        for (std::size_t i = 0; i < result.a.size(); ++i) {
            result.a[i] += term.a[i];
        }
        if (inf_norm(term) < 1e-20) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = multiply(result, result);
    }
    return result;
}

/// exp(i * t * A) for a real matrix A.
inline CMatrix expm_i(const Matrix& a, double t) {
    CMatrix m(a.size());
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            m(i, j) = std::complex<double>(0.0, t * a(i, j));
        }
    }
    return expm(std::move(m));
}

/// exp(-i * t * A) for a real matrix A.
inline CMatrix expm_minus_i(const Matrix& a, double t) { return expm_i(a, -t); }

}  // namespace qwmvc::testing
