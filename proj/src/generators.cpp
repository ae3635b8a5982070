#include "qwmvc/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qwmvc/errors.hpp"
#include "qwmvc/rng.hpp"

namespace qwmvc {

Graph generate_er(int n, double p, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("generate_er: n must be >= 1");
    }
    if (!(p > 0.0) || p > 1.0) {
        throw std::invalid_argument("generate_er: p must be in (0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.real() < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
    // the path core takes m+1 vertices and at least one vertex must attach
    if (n < 1 || m < 1 || m + 1 >= n) {
        throw std::invalid_argument("generate_ba: need 1 <= m < n - 1");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    // connected core: path on m+1 vertices
    const int core = m + 1;
    std::vector<int> repeated;  // one entry per unit of degree
    for (int v = 0; v + 1 < core; ++v) {
        edges.emplace_back(v, v + 1);
        repeated.push_back(v);
        repeated.push_back(v + 1);
    }
    std::vector<char> picked(n, 0);
    for (int v = core; v < n; ++v) {
        std::vector<int> targets;
        targets.reserve(m);
        while (static_cast<int>(targets.size()) < m) {
            const int candidate = repeated[rng.below(repeated.size())];
            if (!picked[candidate]) {
                picked[candidate] = 1;
                targets.push_back(candidate);
            }
        }
        for (int t : targets) {
            picked[t] = 0;
            edges.emplace_back(t, v);
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_regular(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 0 || k >= n) {
        throw std::invalid_argument("generate_regular: need 0 <= k < n");
    }
    if ((static_cast<long long>(n) * k) % 2 != 0) {
        throw std::invalid_argument("generate_regular: n*k must be even");
    }
    if (k == 0) {
        return Graph(n, {});
    }
    Rng rng(seed);
    const int attempts = 100;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * k);
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < k; ++i) {
                stubs.push_back(v);
            }
        }
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        }
        // Pair stubs front to back, skipping pairs that would create a loop or
        // a multi-edge; a dead end (no usable partner left) restarts.
        std::set<Edge> edge_set;
        bool stuck = false;
        std::size_t head = 0;
        while (head < stubs.size() && !stuck) {
            const int u = stubs[head];
            std::size_t partner = stubs.size();
            for (std::size_t j = head + 1; j < stubs.size(); ++j) {
                const int w = stubs[j];
                if (w == u) {
                    continue;
                }
                if (edge_set.count({std::min(u, w), std::max(u, w)})) {
                    continue;
                }
                partner = j;
                break;
            }
            if (partner == stubs.size()) {
                stuck = true;
                break;
            }
            const int w = stubs[partner];
            edge_set.insert({std::min(u, w), std::max(u, w)});
            stubs.erase(stubs.begin() + partner);
            ++head;
        }
        if (!stuck) {
            return Graph(n, std::vector<Edge>(edge_set.begin(), edge_set.end()));
        }
    }
    throw generation_error("generate_regular: no simple pairing found within retry budget");
}

Graph generate_ws(int n, int ring_k, double beta, std::uint64_t seed) {
    if (n < 1 || ring_k < 0 || ring_k >= n || ring_k % 2 != 0) {
        throw std::invalid_argument("generate_ws: ring_k must be even and < n");
    }
    if (beta < 0.0 || beta > 1.0) {
        throw std::invalid_argument("generate_ws: beta must be in [0, 1]");
    }
    const int retries = 100;
    for (int attempt = 0; attempt < retries; ++attempt) {
        Rng rng(seed + static_cast<std::uint64_t>(attempt));
        std::set<Edge> edge_set;
        for (int v = 0; v < n; ++v) {
            for (int j = 1; j <= ring_k / 2; ++j) {
                const int w = (v + j) % n;
                edge_set.insert({std::min(v, w), std::max(v, w)});
            }
        }
        // rewire each clockwise ring edge with probability beta
        for (int v = 0; v < n; ++v) {
            for (int j = 1; j <= ring_k / 2; ++j) {
                const int w = (v + j) % n;
                const Edge e{std::min(v, w), std::max(v, w)};
                if (rng.real() >= beta || !edge_set.count(e)) {
                    continue;
                }
                // pick a fresh target; give up on this edge if the vertex is saturated
                for (int tries = 0; tries < 4 * n; ++tries) {
                    const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                    if (t == v) {
                        continue;
                    }
                    const Edge cand{std::min(v, t), std::max(v, t)};
                    if (edge_set.count(cand)) {
                        continue;
                    }
                    edge_set.erase(e);
                    edge_set.insert(cand);
                    break;
                }
            }
        }
        Graph g(n, std::vector<Edge>(edge_set.begin(), edge_set.end()));
        if (is_connected(g)) {
            return g;
        }
    }
    throw generation_error("generate_ws: no connected graph within retry budget");
}

}  // namespace qwmvc
