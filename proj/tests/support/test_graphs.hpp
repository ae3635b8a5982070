#pragma once

#include <vector>

#include "qwmvc/generators.hpp"
#include "qwmvc/graph.hpp"
#include "qwmvc/rng.hpp"

namespace qwmvc::testing {

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, std::move(edges));
}

/// Star with the center at vertex 0 and `leaves` leaves.
inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph(leaves + 1, std::move(edges));
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);        // outer pentagon
        edges.emplace_back(v, v + 5);              // spokes
        edges.emplace_back(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

/// Applies a permutation: vertex v of g becomes perm[v].
inline Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(perm[u], perm[v]);
    }
    return Graph(g.vertex_count(), std::move(edges));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = i;
    }
    for (int i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    return perm;
}

/// Random mixed-family graph for property tests (may be disconnected or edgeless).
inline Graph random_test_graph(Rng& rng, int max_n = 30) {
    const int n = rng.range(1, max_n);
    switch (rng.below(4)) {
        case 0:
            return generate_er(n, 0.05 + 0.9 * rng.real(), rng.next_u64());
        case 1: {
            if (n < 3) {
                return empty_graph(n);
            }
            return generate_ba(n, rng.range(1, std::min(n - 2, 4)), rng.next_u64());
        }
        case 2: {
            int k = rng.range(0, std::max(0, std::min(n - 1, 6)));
            if ((n * k) % 2 != 0) {
                --k;
            }
            return generate_regular(n, std::max(k, 0), rng.next_u64());
        }
        default: {
            // sparse ER, frequently disconnected
            return generate_er(n, std::min(1.0, 1.5 / n + 0.2 * rng.real()), rng.next_u64());
        }
    }
}

}  // namespace qwmvc::testing
