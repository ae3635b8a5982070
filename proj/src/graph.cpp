#include "qwmvc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qwmvc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("graph: vertex count must be non-negative");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("graph: duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        return false;
    }
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::non_isolated_count() const {
    int count = 0;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) > 0) {
            ++count;
        }
    }
    return count;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

QubitEncoding qubit_encoding(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("qubit_encoding: need at least one vertex");
    }
    int qubits = 0;
    while ((1 << qubits) < n) {
        ++qubits;
    }
    QubitEncoding enc{qubits, {}};
    enc.labels.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::string label(qubits, '0');
        for (int b = 0; b < qubits; ++b) {
            if (v & (1 << (qubits - 1 - b))) {
                label[b] = '1';
            }
        }
        enc.labels.push_back(std::move(label));
    }
    return enc;
}

}  // namespace qwmvc
