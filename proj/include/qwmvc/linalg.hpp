#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qwmvc {

/// Dense square matrix of doubles, row-major. Sized for desk-scale spectral
/// work (a few hundred rows); nothing here is tuned beyond that.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<double>& raw() const { return a_; }

    static Matrix identity(int n);

private:
    int n_ = 0;
    std::vector<double> a_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Accurate to ~1e-14 relative for the sizes this project uses.
EigenDecomposition jacobi_eigh(Matrix a);

using cvector = std::vector<std::complex<double>>;

}  // namespace qwmvc
