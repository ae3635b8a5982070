#include "qwmvc/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qwmvc/ctqw.hpp"
#include "qwmvc/laplacian.hpp"
#include "qwmvc/rng.hpp"

namespace qwmvc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> mask_to_cover(const std::vector<char>& in_cover) {
    std::vector<int> cover;
    for (int v = 0; v < static_cast<int>(in_cover.size()); ++v) {
        if (in_cover[v]) {
            cover.push_back(v);
        }
    }
    return cover;
}

// Exact float ties on symmetric graphs come out of the eigensolver with
// ~1e-15 noise; scores within this margin of the maximum count as tied and
// the lowest id wins.
constexpr double kScoreTieTolerance = 1e-12;

}  // namespace

bool validate_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in_cover(g.vertex_count(), 0);
    for (int v : cover) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("validate_cover: vertex id out of range");
        }
        in_cover[v] = 1;
    }
    for (const auto& [u, v] : g.edges()) {
        if (!in_cover[u] && !in_cover[v]) {
            return false;
        }
    }
    return true;
}

CoverResult quantum_mvc(const Graph& g, const QuantumParams& params) {
    const auto start = Clock::now();
    CoverResult result;
    result.solver = "quantum";

    Graph current = g;
    while (current.edge_count() > 0) {
        double t;
        switch (params.time_mode) {
            case TimeMode::topt_active:
                t = t_opt(current.non_isolated_count());
                break;
            case TimeMode::topt_initial:
                t = t_opt(g.vertex_count());
                break;
            case TimeMode::fixed:
                t = params.fixed_time;
                break;
            default:
                throw std::invalid_argument("quantum_mvc: bad time mode");
        }
        const SpectralCache cache = spectral_decompose(normalized_gamma(current));
        const TransitionProfile profile = prob_out(cache, t);

        int selected = -1;
        double best_score = -1.0;
        for (int v = 0; v < current.vertex_count(); ++v) {
            if (current.degree(v) == 0) {
                continue;  // argmax is restricted to vertices with uncovered edges
            }
            if (profile.prob_out[v] > best_score + kScoreTieTolerance) {
                best_score = profile.prob_out[v];
                selected = v;
            }
        }
        current = decouple(current, selected);
        result.cover.push_back(selected);
        result.trace.push_back({selected, best_score, current.edge_count(), t});
        ++result.iterations;
    }

    std::sort(result.cover.begin(), result.cover.end());
    result.valid = validate_cover(g, result.cover);
    result.wall_time_s = seconds_since(start);
    return result;
}

CoverResult two_approx_mvc(const Graph& g, std::uint64_t seed) {
    const auto start = Clock::now();
    CoverResult result;
    result.solver = "2approx";

    std::vector<Edge> order = g.edges();
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    std::vector<char> matched(g.vertex_count(), 0);
    for (const auto& [u, v] : order) {
        if (!matched[u] && !matched[v]) {
            matched[u] = 1;
            matched[v] = 1;
            ++result.iterations;
        }
    }
    result.cover = mask_to_cover(matched);
    result.valid = validate_cover(g, result.cover);
    result.wall_time_s = seconds_since(start);
    return result;
}

namespace {

/// Shared bookkeeping for the local-search solvers: cover membership plus the
/// per-edge count of covering endpoints.
struct CoverState {
    const Graph& g;
    std::vector<char> in_cover;
    std::vector<int> covered_by;              // per edge index: 0, 1 or 2
    std::vector<std::vector<int>> incident;   // per vertex: incident edge indices
    std::vector<int> edge_index_of_uncovered;
    std::vector<int> uncovered;  // edge indices, unordered
    int cover_size = 0;

    explicit CoverState(const Graph& graph)
        : g(graph),
          in_cover(graph.vertex_count(), 0),
          covered_by(graph.edge_count(), 0),
          incident(graph.vertex_count()),
          edge_index_of_uncovered(graph.edge_count(), -1) {
        for (int e = 0; e < graph.edge_count(); ++e) {
            const auto& [u, v] = graph.edges()[e];
            incident[u].push_back(e);
            incident[v].push_back(e);
            push_uncovered(e);
        }
    }

    void push_uncovered(int e) {
        edge_index_of_uncovered[e] = static_cast<int>(uncovered.size());
        uncovered.push_back(e);
    }

    void pop_uncovered(int e) {
        const int pos = edge_index_of_uncovered[e];
        const int last = uncovered.back();
        uncovered[pos] = last;
        edge_index_of_uncovered[last] = pos;
        uncovered.pop_back();
        edge_index_of_uncovered[e] = -1;
    }

    void add(int v) {
        in_cover[v] = 1;
        ++cover_size;
        for (int e : incident[v]) {
            if (covered_by[e]++ == 0) {
                pop_uncovered(e);
            }
        }
    }

    void remove(int v) {
        in_cover[v] = 0;
        --cover_size;
        for (int e : incident[v]) {
            if (--covered_by[e] == 0) {
                push_uncovered(e);
            }
        }
    }

    bool valid() const { return uncovered.empty(); }

    // edges covered solely by v (v must be in the cover)
    int loss(int v) const {
        int l = 0;
        for (int e : incident[v]) {
            if (covered_by[e] == 1) {
                ++l;
            }
        }
        return l;
    }

    // uncovered edges incident to v (v must be outside the cover)
    int gain(int v) const {
        int s = 0;
        for (int e : incident[v]) {
            if (covered_by[e] == 0) {
                ++s;
            }
        }
        return s;
    }
};

}  // namespace

CoverResult fastvc_mvc(const Graph& g, const FastVcParams& params) {
    const auto start = Clock::now();
    if (params.bms_k < 1) {
        throw std::invalid_argument("fastvc_mvc: bms_k must be >= 1");
    }
    CoverResult result;
    result.solver = "fastvc";

    const int n = g.vertex_count();
    const long long cutoff =
        params.cutoff_iters > 0 ? params.cutoff_iters : 100LL * std::max(n, 1);
    Rng rng(params.seed);
    CoverState state(g);

    // greedy construction: highest uncovered-incidence first, lowest id on ties
    while (!state.valid()) {
        int best = -1, best_gain = 0;
        for (int v = 0; v < n; ++v) {
            if (state.in_cover[v]) {
                continue;
            }
            const int s = state.gain(v);
            if (s > best_gain) {
                best_gain = s;
                best = v;
            }
        }
        state.add(best);
    }
    // strip redundant vertices
    for (bool removed = true; removed;) {
        removed = false;
        for (int v = 0; v < n; ++v) {
            if (state.in_cover[v] && state.loss(v) == 0) {
                state.remove(v);
                removed = true;
            }
        }
    }

    std::vector<int> members = mask_to_cover(state.in_cover);
    std::vector<int> best_cover = members;

    for (long long iter = 0; iter < cutoff && !members.empty(); ++iter) {
        // BMS removal: best of bms_k sampled cover members by loss
        int victim = -1, victim_loss = 0;
        for (int s = 0; s < params.bms_k; ++s) {
            const int candidate = members[rng.below(members.size())];
            const int l = state.loss(candidate);
            if (victim < 0 || l < victim_loss) {
                victim = candidate;
                victim_loss = l;
            }
        }
        state.remove(victim);
        members.erase(std::find(members.begin(), members.end(), victim));

        if (!state.uncovered.empty()) {
            const int e = state.uncovered[rng.below(state.uncovered.size())];
            const auto& [u, v] = g.edges()[e];
            // an uncovered edge has both endpoints outside the cover
            const int pick = (state.gain(v) > state.gain(u)) ? v : u;  // ties go to the lower id u
            state.add(pick);
            members.push_back(pick);
        }
        if (state.valid() && state.cover_size < static_cast<int>(best_cover.size())) {
            best_cover = mask_to_cover(state.in_cover);
        }
        ++result.iterations;
    }

    std::sort(best_cover.begin(), best_cover.end());
    result.cover = std::move(best_cover);
    result.valid = validate_cover(g, result.cover);
    result.wall_time_s = seconds_since(start);
    return result;
}

CoverResult sa_mvc(const Graph& g, const SaParams& params) {
    const auto start = Clock::now();
    if (!(params.cooling > 0.0 && params.cooling < 1.0)) {
        throw std::invalid_argument("sa_mvc: cooling must be in (0, 1)");
    }
    if (!(params.penalty_lambda > 1.0)) {
        throw std::invalid_argument("sa_mvc: penalty_lambda must be > 1");
    }
    if (!(params.initial_temp > 0.0) || !(params.min_temp > 0.0)) {
        throw std::invalid_argument("sa_mvc: temperatures must be positive");
    }
    CoverResult result;
    result.solver = "sa";

    const int n = g.vertex_count();
    const long long steps =
        params.steps_per_temp > 0 ? params.steps_per_temp : 50LL * std::max(n, 1);
    Rng rng(params.seed);

    CoverState state(g);
    for (int v : two_approx_mvc(g, params.seed).cover) {
        state.add(v);
    }
    std::vector<int> best_cover = mask_to_cover(state.in_cover);

    if (n > 0) {
        const double lambda = params.penalty_lambda;
        for (double temp = params.initial_temp; temp > params.min_temp; temp *= params.cooling) {
            for (long long s = 0; s < steps; ++s) {
                const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                const double delta = state.in_cover[v]
                                         ? -1.0 + lambda * state.loss(v)
                                         : 1.0 - lambda * state.gain(v);
                if (delta <= 0.0 || rng.real() < std::exp(-delta / temp)) {
                    if (state.in_cover[v]) {
                        state.remove(v);
                    } else {
                        state.add(v);
                    }
                    if (state.valid() && state.cover_size < static_cast<int>(best_cover.size())) {
                        best_cover = mask_to_cover(state.in_cover);
                    }
                }
                ++result.iterations;
            }
        }
    }

    result.cover = std::move(best_cover);
    result.valid = validate_cover(g, result.cover);
    result.wall_time_s = seconds_since(start);
    return result;
}

}  // namespace qwmvc
