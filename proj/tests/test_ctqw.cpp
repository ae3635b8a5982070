#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qwmvc/ctqw.hpp"
#include "qwmvc/laplacian.hpp"
#include "qwmvc/rng.hpp"
#include "support/expm.hpp"
#include "support/test_graphs.hpp"

using namespace qwmvc;
using namespace qwmvc::testing;

TEST_CASE("t_opt evaluates 4/(pi sqrt(V)) + 0.1") {
    CHECK(t_opt(16) == doctest::Approx(1.0 / std::numbers::pi + 0.1).epsilon(1e-15));
    CHECK(t_opt(4) == doctest::Approx(2.0 / std::numbers::pi + 0.1).epsilon(1e-15));
    CHECK(t_opt(1) == doctest::Approx(4.0 / std::numbers::pi + 0.1).epsilon(1e-15));
    CHECK_THROWS_AS(t_opt(0), std::invalid_argument);
}

TEST_CASE("spectral_decompose rejects asymmetric input") {
    Matrix bad(2);
    bad(0, 1) = 0.5;
    bad(1, 0) = 0.5 + 1e-6;
    CHECK_THROWS_AS(spectral_decompose(bad), std::invalid_argument);
}

TEST_CASE("spectral cache invariants on random graphs") {
    Rng rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_test_graph(rng, 30);
        const Matrix gamma = normalized_gamma(g);
        const SpectralCache cache = spectral_decompose(gamma);
        const int n = g.vertex_count();
        // ||Q Q^T - I||_max and reconstruction within 1e-8 (typically ~1e-14)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double qq = 0.0, rec = 0.0;
                for (int k = 0; k < n; ++k) {
                    qq += cache.eigenvectors(i, k) * cache.eigenvectors(j, k);
                    rec += cache.eigenvectors(i, k) * cache.eigenvalues[k] * cache.eigenvectors(j, k);
                }
                CHECK(std::abs(qq - (i == j ? 1.0 : 0.0)) < 1e-8);
                CHECK(std::abs(rec - gamma(i, j)) < 1e-8);
            }
        }
        for (int v = 0; v < n; ++v) {
            CHECK(cache.active[v] == (g.degree(v) > 0));
        }
    }
}

TEST_CASE("fingerprint tracks the matrix content") {
    const SpectralCache a = spectral_decompose(normalized_gamma(complete_graph(4)));
    const SpectralCache b = spectral_decompose(normalized_gamma(complete_graph(4)));
    const SpectralCache c = spectral_decompose(normalized_gamma(cycle_graph(4)));
    CHECK(a.graph_fingerprint == b.graph_fingerprint);
    CHECK(a.graph_fingerprint != c.graph_fingerprint);
}

TEST_CASE("prob_out at t = 0 is identically zero") {
    const SpectralCache cache = spectral_decompose(normalized_gamma(petersen_graph()));
    const TransitionProfile profile = prob_out(cache, 0.0);
    for (double p : profile.prob_out) {
        CHECK(p == doctest::Approx(0.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(prob_out(cache, -0.1), std::invalid_argument);
}

TEST_CASE("star transition probabilities match the closed form and the series oracle") {
    const Graph s4 = star_graph(3);
    const double t = t_opt(4);
    const SpectralCache cache = spectral_decompose(normalized_gamma(s4));
    const TransitionProfile profile = prob_out(cache, t);

    // center: P = sin^2(t); spectrum of the normalized star is {-1, 0, 0, 1}
    const double expected_center = std::pow(std::sin(t), 2);
    CHECK(profile.prob_out[0] == doctest::Approx(expected_center).epsilon(1e-12));
    CHECK(profile.prob_out[0] == doctest::Approx(0.4513).epsilon(1e-3));

    // independent oracle: scaling-and-squaring matrix exponential
    const CMatrix u = expm_i(normalized_gamma(s4), t);
    for (int m = 0; m < 4; ++m) {
        CHECK(profile.prob_out[m] == doctest::Approx(1.0 - std::norm(u(m, m))).epsilon(1e-12));
    }

    // the center dominates every leaf, at t_opt and in the small-t regime
    CHECK(profile.prob_out[0] > profile.prob_out[1]);
    const TransitionProfile small = prob_out(cache, 0.05);
    CHECK(small.prob_out[0] > small.prob_out[1]);
    CHECK(small.prob_out[1] == doctest::Approx(0.05 * 0.05 / 3.0).epsilon(1e-2));
}

TEST_CASE("propagator is unitary on 100 random graphs") {
    Rng rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_test_graph(rng, 25);
        const SpectralCache cache = spectral_decompose(normalized_gamma(g));
        const double t = t_opt(std::max(1, g.vertex_count()));
        for (int m = 0; m < g.vertex_count(); m += 3) {
            double norm = 0.0;
            for (const auto& z : propagator_column(cache, m, t)) {
                norm += std::norm(z);
            }
            CHECK(std::abs(norm - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("factorization is exact: |diag e^{-i(I-Gamma)t}| equals |diag e^{i Gamma t}|") {
    Rng rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_test_graph(rng, 40);
        if (g.edge_count() == 0) {
            continue;
        }
        const double t = t_opt(std::max(1, g.non_isolated_count()));
        const SpectralCache gamma_cache = spectral_decompose(normalized_gamma(g));
        const SpectralCache h_cache = spectral_decompose(laplacians(g).symmetric);
        const int n = g.vertex_count();
        for (int m = 0; m < n; ++m) {
            if (g.degree(m) == 0) {
                continue;
            }
            cvector e(n, 0.0);
            e[m] = 1.0;
            const double lhs = std::abs(evolve(h_cache, e, t)[m]);
            const double rhs = std::abs(propagator_diag(gamma_cache, m, t));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("vertex-transitive graphs get equal out-probabilities") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(8), complete_graph(4), complete_graph(6)}) {
        const SpectralCache cache = spectral_decompose(normalized_gamma(g));
        const TransitionProfile profile = prob_out(cache, t_opt(g.vertex_count()));
        for (int v = 1; v < g.vertex_count(); ++v) {
            CHECK(profile.prob_out[v] == doctest::Approx(profile.prob_out[0]).epsilon(1e-10));
        }
    }
}

TEST_CASE("prob_out stays within [0,1] and pre-clamp dips are tiny") {
    Rng rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_test_graph(rng, 25);
        const SpectralCache cache = spectral_decompose(normalized_gamma(g));
        const TransitionProfile profile = prob_out(cache, 0.31 + rng.real());
        for (int m = 0; m < g.vertex_count(); ++m) {
            CHECK(profile.prob_out[m] >= 0.0);
            CHECK(profile.prob_out[m] <= 1.0);
            // recompute the raw value to bound what clamping absorbed
            const double raw = 1.0 - std::norm(propagator_diag(cache, m, profile.time));
            CHECK(raw >= -1e-10);
            if (g.degree(m) == 0) {
                CHECK(profile.prob_out[m] == 0.0);
            }
        }
    }
}

TEST_CASE("decouple removes exactly the incident edges") {
    SUBCASE("K3 loses vertex 0") {
        const Graph g = decouple(complete_graph(3), 0);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(1, 2));
        CHECK(g.vertex_count() == 3);
    }
    SUBCASE("star center leaves an edgeless graph") {
        const Graph g = decouple(star_graph(3), 0);
        CHECK(g.edge_count() == 0);
        CHECK(g.vertex_count() == 4);
    }
    SUBCASE("idempotent on isolated vertices") {
        const Graph g = decouple(star_graph(3), 0);
        const Graph h = decouple(g, 0);
        CHECK(h.edges() == g.edges());
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(decouple(complete_graph(3), 3), std::invalid_argument);
    }
    SUBCASE("strictly decreases edges for non-isolated vertices") {
        Rng rng(55);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = random_test_graph(rng);
            for (int v = 0; v < g.vertex_count(); ++v) {
                const Graph d = decouple(g, v);
                CHECK(d.vertex_count() == g.vertex_count());
                if (g.degree(v) > 0) {
                    CHECK(d.edge_count() == g.edge_count() - g.degree(v));
                } else {
                    CHECK(d.edge_count() == g.edge_count());
                }
            }
        }
    }
}

TEST_CASE("freezing: empty frozen set gives exactly zero deviation") {
    const FreezeReport rep = freeze_evolution_check(complete_graph(3), {1e6, {}}, t_opt(3));
    CHECK(rep.leaked_probability == 0.0);
    CHECK(rep.max_active_deviation == 0.0);
}

TEST_CASE("freezing suppression on K3 at large omega") {
    const FreezeReport rep = freeze_evolution_check(complete_graph(3), {1e6, {0}}, t_opt(3));
    CHECK(rep.max_active_deviation <= 1e-3);
    CHECK(rep.leaked_probability <= 1e-3);
}

TEST_CASE("freezing deviation drops ~100x between omega 1e2 and 1e4") {
    // envelope over a time grid; the law is Theta(1/omega)
    auto envelope = [](const Graph& g, double omega) {
        const double T = t_opt(g.vertex_count());
        double dev = 0.0;
        for (int i = 1; i <= 16; ++i) {
            dev = std::max(dev,
                           freeze_evolution_check(g, {omega, {0}}, T * i / 16).max_active_deviation);
        }
        return dev;
    };
    const Graph k3 = complete_graph(3);
    const double ratio = envelope(k3, 1e2) / envelope(k3, 1e4);
    CHECK(ratio > 50.0);
    CHECK(ratio < 200.0);
}

TEST_CASE("freezing matches a brute-force penalty evolution on K3") {
    // independent route: series exponential of both Hamiltonians
    const Graph g = complete_graph(3);
    const double t = t_opt(3);
    const double omega = 500.0;
    const Matrix h = laplacians(g).symmetric;
    Matrix h_pen = h;
    h_pen(0, 0) += omega - 1.0;
    Matrix h_hard = h;
    h_hard(0, 1) = h_hard(1, 0) = 0.0;
    h_hard(0, 2) = h_hard(2, 0) = 0.0;
    const CMatrix u_pen = expm_minus_i(h_pen, t);
    const CMatrix u_hard = expm_minus_i(h_hard, t);
    const std::complex<double> amp(1.0 / std::sqrt(3.0), 0.0);
    double expected_dev = 0.0;
    std::complex<double> pen_frozen = 0.0, hard_frozen = 0.0;
    for (int v = 0; v < 3; ++v) {
        std::complex<double> pv = 0.0, hv = 0.0;
        for (int j = 0; j < 3; ++j) {
            pv += u_pen(v, j) * amp;
            hv += u_hard(v, j) * amp;
        }
        if (v == 0) {
            pen_frozen = pv;
            hard_frozen = hv;
        } else {
            expected_dev = std::max(expected_dev, std::abs(pv - hv));
        }
    }
    const double expected_leak = std::abs(std::norm(pen_frozen) - std::norm(hard_frozen));
    const FreezeReport rep = freeze_evolution_check(g, {omega, {0}}, t);
    CHECK(rep.max_active_deviation == doctest::Approx(expected_dev).epsilon(1e-9));
    CHECK(rep.leaked_probability == doctest::Approx(expected_leak).epsilon(1e-6));
}

TEST_CASE("freeze leakage is monotone non-increasing over the omega grid") {
    const Graph graphs[] = {complete_graph(3), cycle_graph(6), generate_er(12, 0.4, 2024)};
    for (const Graph& g : graphs) {
        const double t = t_opt(g.vertex_count());
        double prev = -1.0;
        for (double omega : {1e2, 1e3, 1e4, 1e6}) {
            const double leak = freeze_evolution_check(g, {omega, {0}}, t).leaked_probability;
            if (prev >= 0.0) {
                CHECK(leak <= prev);
            }
            prev = leak;
        }
    }
}

TEST_CASE("freeze parameter validation") {
    CHECK_THROWS_AS(freeze_evolution_check(complete_graph(3), {0.5, {0}}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(freeze_evolution_check(complete_graph(3), {1e3, {5}}, 1.0), std::invalid_argument);
}
