#pragma once

#include "qwmvc/graph.hpp"
#include "qwmvc/linalg.hpp"

namespace qwmvc {

Matrix adjacency_matrix(const Graph& g);

/// Normalized adjacency Gamma_ij = A_ij / sqrt(d_i d_j). Rows and columns of
/// isolated vertices are all-zero; the diagonal is zero.
Matrix normalized_gamma(const Graph& g);

struct Laplacians {
    Matrix combinatorial;  // L = D - A
    Matrix symmetric;      // L_sym = I - Gamma, isolated vertices get diagonal 0
};

Laplacians laplacians(const Graph& g);

}  // namespace qwmvc
