#pragma once

#include <vector>

#include "qwmvc/graph.hpp"

namespace qwmvc {

struct ExactResult {
    std::vector<int> cover;  // sorted ascending
    int size = 0;
    bool proven_optimal = false;
    long long nodes_explored = 0;
    double wall_time_s = 0.0;
};

/// Enumerates vertex subsets by increasing size and returns the first valid
/// cover (lexicographically smallest at the optimal size). Requires n <= 24,
/// else capacity_error.
ExactResult brute_force_mvc(const Graph& g);

/// Greedy maximal matching size of g; a lower bound on the MVC size.
int matching_lower_bound(const Graph& g);

constexpr long long kDefaultBnbBudget = 50'000'000;

/// Branch and bound on the max-degree vertex (v in cover / N(v) in cover)
/// with degree-0/degree-1 reductions and the maximal-matching bound; the
/// incumbent starts from fastvc_mvc. Exhausting the node budget returns the
/// incumbent with proven_optimal = false (a reported state, not an error).
ExactResult bnb_mvc(const Graph& g, long long node_budget = kDefaultBnbBudget);

}  // namespace qwmvc
