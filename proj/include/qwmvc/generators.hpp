#pragma once

#include <cstdint>

#include "qwmvc/graph.hpp"

namespace qwmvc {

/// Erdos-Renyi G(n, p): each of the n(n-1)/2 pairs is an edge independently
/// with probability p. Requires n >= 1 and 0 < p <= 1.
Graph generate_er(int n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment. Starts from a path on m+1
/// vertices; each later vertex attaches to m distinct existing vertices drawn
/// degree-proportionally. Requires 1 <= m < n. Always connected;
/// |E| = m + (n-m-1)*m.
Graph generate_ba(int n, int m, std::uint64_t seed);

/// Random k-regular graph via the pairing model. Stubs are paired one at a
/// time, rejecting pairs that would form a loop or multi-edge; a dead end
/// restarts the attempt (bounded budget, then generation_error). Requires
/// 0 <= k < n and n*k even.
Graph generate_regular(int n, int k, std::uint64_t seed);

/// Watts-Strogatz ring rewiring; regenerates with an incremented seed until
/// connected (bounded retries, then generation_error). Requires ring_k even,
/// ring_k < n, 0 <= beta <= 1.
Graph generate_ws(int n, int ring_k, double beta, std::uint64_t seed);

}  // namespace qwmvc
