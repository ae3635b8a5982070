#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qwmvc {

using Edge = std::pair<int, int>;  // stored canonical: first < second

/// Undirected simple graph over dense vertex ids 0..n-1, unit edge weights.
/// Immutable after construction; graph-modifying operations return new graphs.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonically sorted (u < v, lexicographic) edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Number of vertices with degree >= 1.
    int non_isolated_count() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// True iff every vertex is reachable from vertex 0 (n <= 1 counts as connected).
bool is_connected(const Graph& g);

struct QubitEncoding {
    int qubit_count;                  // ceil(log2 n), 0 for n = 1
    std::vector<std::string> labels;  // zero-padded binary, width = qubit_count
};

/// Binary vertex encoding; requires n >= 1.
QubitEncoding qubit_encoding(const Graph& g);

}  // namespace qwmvc
