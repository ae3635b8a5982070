#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwmvc/graph.hpp"

namespace qwmvc {

/// How the walk time is chosen per iteration of the quantum heuristic.
enum class TimeMode {
    topt_active,   // t_opt(#non-isolated vertices of the current graph); default
    topt_initial,  // t_opt(n) of the input graph, fixed across iterations
    fixed,         // constant user-supplied time (bench's fixed001 uses 0.01)
};

struct QuantumParams {
    TimeMode time_mode = TimeMode::topt_active;
    double fixed_time = 0.01;
};

struct TraceEntry {
    int vertex;
    double score;         // P(vertex -> out) at selection
    int remaining_edges;  // uncovered edges after this selection
    double time;          // walk time used this iteration
};

struct CoverResult {
    std::vector<int> cover;  // sorted ascending
    std::string solver;
    bool valid = false;
    int iterations = 0;
    std::vector<TraceEntry> trace;  // filled by the quantum solver
    double wall_time_s = 0.0;

    int size() const { return static_cast<int>(cover.size()); }
};

/// True iff every edge has an endpoint in cover. Throws std::invalid_argument
/// if cover contains an id outside [0, n).
bool validate_cover(const Graph& g, const std::vector<int>& cover);

/// Iterative CTQW heuristic: score vertices by P(m->out), take the argmax over
/// vertices that still have an uncovered incident edge (ties -> lowest id),
/// decouple it, repeat until no edges remain. Deterministic.
CoverResult quantum_mvc(const Graph& g, const QuantumParams& params = {});

/// Maximal matching over a seeded random edge order; cover = matched endpoints.
CoverResult two_approx_mvc(const Graph& g, std::uint64_t seed);

struct FastVcParams {
    long long cutoff_iters = 0;  // 0 -> 100 * n
    int bms_k = 50;
    std::uint64_t seed = 0;
};

/// Greedy construction + redundancy removal, then BMS exchange: remove the
/// min-loss of bms_k sampled cover members, re-add the higher-gain endpoint of
/// a random uncovered edge, keep the best valid cover seen.
CoverResult fastvc_mvc(const Graph& g, const FastVcParams& params = {});

struct SaParams {
    double initial_temp = 1.0;
    double cooling = 0.98;           // geometric factor in (0,1)
    long long steps_per_temp = 0;    // 0 -> 50 * n
    double min_temp = 1e-3;
    double penalty_lambda = 2.0;     // > 1 so covering an edge beats dropping a vertex
    std::uint64_t seed = 0;
};

/// Single-flip simulated annealing on E(S) = |S| + lambda * #uncovered(S),
/// seeded from the two-approximation cover (same seed); returns the best valid
/// state encountered.
CoverResult sa_mvc(const Graph& g, const SaParams& params = {});

}  // namespace qwmvc
