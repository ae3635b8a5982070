#pragma once

#include <cstdint>
#include <vector>

#include "qwmvc/graph.hpp"
#include "qwmvc/linalg.hpp"

namespace qwmvc {

/// Eigensystem of a normalized adjacency Gamma, reused for every diagonal
/// propagator entry at a given graph state.
struct SpectralCache {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // orthonormal columns, Gamma = Q diag Q^T
    std::uint64_t graph_fingerprint;  // content hash of the Gamma it came from
    std::vector<bool> active;         // false where the Gamma row is all-zero
};

/// Short evolution time 4/(pi*sqrt(n)) + 0.1 for n active vertices (n >= 1).
double t_opt(int active_vertex_count);

/// Requires max|gamma - gamma^T| <= 1e-12, else std::invalid_argument.
SpectralCache spectral_decompose(const Matrix& gamma);

struct TransitionProfile {
    double time;
    std::vector<double> prob_out;   // P(m -> out) in [0,1]; exactly 0 for inactive m
    std::vector<bool> active_mask;  // false = isolated/decoupled in the current graph
};

/// P(m -> out) = 1 - |(e^{i t Gamma})_mm|^2 for every vertex, from the cache.
/// Tiny negative roundoff (>= -1e-10) is clamped to zero. Requires t >= 0.
TransitionProfile prob_out(const SpectralCache& cache, double t);

/// Diagonal entry (e^{i t Gamma})_mm.
std::complex<double> propagator_diag(const SpectralCache& cache, int m, double t);

/// Column m of e^{i t Gamma} (used by unitarity checks).
cvector propagator_column(const SpectralCache& cache, int m, double t);

/// Applies e^{-i t H} to psi, where cache decomposes the symmetric H.
cvector evolve(const SpectralCache& cache, const cvector& psi, double t);

/// Removes every edge incident to v; vertex set unchanged. Requires v < n.
Graph decouple(const Graph& g, int v);

struct FreezeParams {
    double omega;             // penalty magnitude, > 1
    std::vector<int> frozen;  // vertex ids already chosen for the cover
};

struct FreezeReport {
    /// |P_frozen(penalty evolution) - P_frozen(hard decoupling)| at time t.
    double leaked_probability;
    /// max over active vertices of |psi_penalty(v) - psi_hard(v)|.
    double max_active_deviation;
};

/// Compares the penalty ("freezing") evolution e^{-i(H + (Omega-1)P_m)t}
/// against hard decoupling e^{-i(P_j H P_j + P_m H P_m)t}, both from the
/// uniform state, with H = L_sym of the original graph. The penalty keeps the
/// active<->frozen coupling of H, so both report fields scale as O(1/Omega);
/// an empty frozen set gives exactly zero.
FreezeReport freeze_evolution_check(const Graph& g, const FreezeParams& params, double t);

}  // namespace qwmvc
