#include "qwmvc/ctqw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwmvc/laplacian.hpp"
#include "qwmvc/rng.hpp"

namespace qwmvc {

double t_opt(int active_vertex_count) {
    if (active_vertex_count < 1) {
        throw std::invalid_argument("t_opt: vertex count must be >= 1");
    }
    return 4.0 / (std::numbers::pi * std::sqrt(static_cast<double>(active_vertex_count))) + 0.1;
}

SpectralCache spectral_decompose(const Matrix& gamma) {
    const int n = gamma.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(gamma(i, j) - gamma(j, i)) > 1e-12) {
                throw std::invalid_argument("spectral_decompose: matrix is not symmetric");
            }
        }
    }
    SpectralCache cache;
    cache.active.assign(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (gamma(i, j) != 0.0) {
                cache.active[i] = true;
                break;
            }
        }
    }
    auto dec = jacobi_eigh(gamma);
    cache.eigenvalues = std::move(dec.values);
    cache.eigenvectors = std::move(dec.vectors);
    cache.graph_fingerprint =
        fnv1a64(gamma.raw().data(), gamma.raw().size() * sizeof(double), mix64(static_cast<std::uint64_t>(n)));
    return cache;
}

std::complex<double> propagator_diag(const SpectralCache& cache, int m, double t) {
    const int n = static_cast<int>(cache.eigenvalues.size());
    std::complex<double> z = 0.0;
    for (int k = 0; k < n; ++k) {
        const double q = cache.eigenvectors(m, k);
        z += q * q * std::polar(1.0, cache.eigenvalues[k] * t);
    }
    return z;
}

cvector propagator_column(const SpectralCache& cache, int m, double t) {
    const int n = static_cast<int>(cache.eigenvalues.size());
    cvector phased(n);
    for (int k = 0; k < n; ++k) {
        phased[k] = cache.eigenvectors(m, k) * std::polar(1.0, cache.eigenvalues[k] * t);
    }
    cvector col(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += cache.eigenvectors(j, k) * phased[k];
        }
        col[j] = acc;
    }
    return col;
}

cvector evolve(const SpectralCache& cache, const cvector& psi, double t) {
    const int n = static_cast<int>(cache.eigenvalues.size());
    if (static_cast<int>(psi.size()) != n) {
        throw std::invalid_argument("evolve: state dimension mismatch");
    }
    cvector coeff(n, 0.0);
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += cache.eigenvectors(j, k) * psi[j];
        }
        coeff[k] = acc * std::polar(1.0, -cache.eigenvalues[k] * t);
    }
    cvector out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += cache.eigenvectors(j, k) * coeff[k];
        }
        out[j] = acc;
    }
    return out;
}

TransitionProfile prob_out(const SpectralCache& cache, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("prob_out: t must be >= 0");
    }
    const int n = static_cast<int>(cache.eigenvalues.size());
    TransitionProfile profile{t, std::vector<double>(n, 0.0), cache.active};
    for (int m = 0; m < n; ++m) {
        if (!cache.active[m]) {
            continue;  // isolated vertices carry no amplitude transfer
        }
        const double stay = std::norm(propagator_diag(cache, m, t));
        double p = 1.0 - stay;
        if (p < 0.0) {
            p = 0.0;  // |z|^2 roundoff just above 1
        }
        profile.prob_out[m] = p;
    }
    return profile;
}

Graph decouple(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("decouple: vertex out of range");
    }
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        if (e.first != v && e.second != v) {
            kept.push_back(e);
        }
    }
    return Graph(g.vertex_count(), std::move(kept));
}

FreezeReport freeze_evolution_check(const Graph& g, const FreezeParams& params, double t) {
    if (!(params.omega > 1.0)) {
        throw std::invalid_argument("freeze_evolution_check: omega must be > 1");
    }
    const int n = g.vertex_count();
    std::vector<bool> frozen(n, false);
    for (int v : params.frozen) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("freeze_evolution_check: frozen vertex out of range");
        }
        frozen[v] = true;
    }

    const Matrix h = laplacians(g).symmetric;

    // penalty evolution keeps the active<->frozen coupling of H and detunes
    // the frozen subspace by (omega - 1)
    Matrix h_penalty = h;
    for (int v = 0; v < n; ++v) {
        if (frozen[v]) {
            h_penalty(v, v) += params.omega - 1.0;
        }
    }
    // hard decoupling: the projected block Hamiltonian P_j H P_j + P_m H P_m
    Matrix h_hard = h;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (frozen[i] != frozen[j]) {
                h_hard(i, j) = 0.0;
            }
        }
    }

    const cvector uniform(n, std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    const cvector psi_penalty = evolve(spectral_decompose(h_penalty), uniform, t);
    const cvector psi_hard = evolve(spectral_decompose(h_hard), uniform, t);

    double frozen_prob_penalty = 0.0;
    double frozen_prob_hard = 0.0;
    double max_dev = 0.0;
    for (int v = 0; v < n; ++v) {
        if (frozen[v]) {
            frozen_prob_penalty += std::norm(psi_penalty[v]);
            frozen_prob_hard += std::norm(psi_hard[v]);
        } else {
            max_dev = std::max(max_dev, std::abs(psi_penalty[v] - psi_hard[v]));
        }
    }
    return FreezeReport{std::abs(frozen_prob_penalty - frozen_prob_hard), max_dev};
}

}  // namespace qwmvc
