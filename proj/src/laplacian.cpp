#include "qwmvc/laplacian.hpp"

#include <cmath>

namespace qwmvc {

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    Matrix a(n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Matrix normalized_gamma(const Graph& g) {
    const int n = g.vertex_count();
    Matrix gamma(n);
    for (const auto& [u, v] : g.edges()) {
        const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        gamma(u, v) = w;
        gamma(v, u) = w;
    }
    return gamma;
}

Laplacians laplacians(const Graph& g) {
    const int n = g.vertex_count();
    Laplacians out{Matrix(n), normalized_gamma(g)};
    for (int v = 0; v < n; ++v) {
        out.combinatorial(v, v) = g.degree(v);
    }
    for (const auto& [u, v] : g.edges()) {
        out.combinatorial(u, v) = -1.0;
        out.combinatorial(v, u) = -1.0;
    }
    // L_sym = I - Gamma, except isolated vertices keep a zero diagonal so they
    // carry no dynamics.
    Matrix& sym = out.symmetric;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sym(i, j) = -sym(i, j);
        }
        if (g.degree(i) > 0) {
            sym(i, i) = 1.0;
        }
    }
    return out;
}

}  // namespace qwmvc
