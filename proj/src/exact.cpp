#include "qwmvc/exact.hpp"

#include <algorithm>
#include <chrono>

#include "qwmvc/errors.hpp"
#include "qwmvc/heuristics.hpp"

namespace qwmvc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool covers_all(const Graph& g, std::uint32_t mask) {
    for (const auto& [u, v] : g.edges()) {
        if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
            return false;
        }
    }
    return true;
}

}  // namespace

ExactResult brute_force_mvc(const Graph& g) {
    const auto start = Clock::now();
    const int n = g.vertex_count();
    if (n > 24) {
        throw capacity_error("brute_force_mvc: more than 24 vertices");
    }
    ExactResult result;
    result.proven_optimal = true;
    for (int size = 0; size <= n; ++size) {
        // lexicographically ordered size-k combinations
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) {
            pick[i] = i;
        }
        while (true) {
            ++result.nodes_explored;
            std::uint32_t mask = 0;
            for (int v : pick) {
                mask |= 1u << v;
            }
            if (covers_all(g, mask)) {
                result.cover = pick;
                result.size = size;
                result.wall_time_s = seconds_since(start);
                return result;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[i];
            for (int j = i + 1; j < size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    result.size = n;  // unreachable: the full vertex set always covers
    result.wall_time_s = seconds_since(start);
    return result;
}

int matching_lower_bound(const Graph& g) {
    std::vector<char> matched(g.vertex_count(), 0);
    int size = 0;
    for (const auto& [u, v] : g.edges()) {
        if (!matched[u] && !matched[v]) {
            matched[u] = 1;
            matched[v] = 1;
            ++size;
        }
    }
    return size;
}

namespace {

/// Branch-and-bound search state over the residual graph, with an undo trail.
class BnbSearch {
public:
    BnbSearch(const Graph& g, long long budget, int incumbent_size, std::vector<int> incumbent)
        : g_(g),
          budget_(budget),
          alive_(g.vertex_count(), 1),
          degree_(g.vertex_count()),
          best_size_(incumbent_size),
          best_cover_(std::move(incumbent)) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            degree_[v] = g.degree(v);
        }
        alive_edges_ = g.edge_count();
    }

    void run() { dfs(); }

    long long nodes() const { return nodes_; }
    bool truncated() const { return truncated_; }
    int best_size() const { return best_size_; }
    const std::vector<int>& best_cover() const { return best_cover_; }

private:
    struct TrailEntry {
        int vertex;
        bool in_cover;
    };

    void remove_vertex(int v, bool in_cover) {
        alive_[v] = 0;
        for (int w : g_.neighbors(v)) {
            if (alive_[w]) {
                --degree_[w];
                --alive_edges_;
            }
        }
        if (in_cover) {
            cover_.push_back(v);
        }
        trail_.push_back({v, in_cover});
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry e = trail_.back();
            trail_.pop_back();
            alive_[e.vertex] = 1;
            int deg = 0;
            for (int w : g_.neighbors(e.vertex)) {
                if (alive_[w]) {
                    ++degree_[w];
                    ++alive_edges_;
                    ++deg;
                }
            }
            degree_[e.vertex] = deg;
            if (e.in_cover) {
                cover_.pop_back();
            }
        }
    }

    // repeatedly strip degree-0 vertices and resolve degree-1 vertices by
    // taking their neighbor
    void reduce() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (!alive_[v]) {
                    continue;
                }
                if (degree_[v] == 0) {
                    remove_vertex(v, false);
                    changed = true;
                } else if (degree_[v] == 1) {
                    for (int w : g_.neighbors(v)) {
                        if (alive_[w]) {
                            remove_vertex(w, true);
                            break;
                        }
                    }
                    changed = true;
                }
            }
        }
    }

    int matching_bound() const {
        std::vector<char> matched(g_.vertex_count(), 0);
        int size = 0;
        for (const auto& [u, v] : g_.edges()) {
            if (alive_[u] && alive_[v] && !matched[u] && !matched[v]) {
                matched[u] = 1;
                matched[v] = 1;
                ++size;
            }
        }
        return size;
    }

    void dfs() {
        ++nodes_;
        if (nodes_ > budget_) {
            truncated_ = true;
            return;
        }
        const std::size_t mark = trail_.size();
        reduce();
        const int cover_size = static_cast<int>(cover_.size());
        if (cover_size >= best_size_) {
            undo_to(mark);
            return;
        }
        if (alive_edges_ == 0) {
            best_size_ = cover_size;
            best_cover_ = cover_;
            undo_to(mark);
            return;
        }
        if (cover_size + matching_bound() >= best_size_) {
            undo_to(mark);
            return;
        }
        int branch_vertex = -1, branch_degree = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (alive_[v] && degree_[v] > branch_degree) {
                branch_degree = degree_[v];
                branch_vertex = v;
            }
        }
        // branch 1: vertex joins the cover
        const std::size_t branch_mark = trail_.size();
        remove_vertex(branch_vertex, true);
        dfs();
        undo_to(branch_mark);
        if (truncated_) {
            undo_to(mark);
            return;
        }
        // branch 2: vertex stays out, so every alive neighbor joins
        std::vector<int> nbrs;
        for (int w : g_.neighbors(branch_vertex)) {
            if (alive_[w]) {
                nbrs.push_back(w);
            }
        }
        for (int w : nbrs) {
            remove_vertex(w, true);
        }
        dfs();
        undo_to(branch_mark);
        undo_to(mark);
    }

    const Graph& g_;
    long long budget_;
    std::vector<char> alive_;
    std::vector<int> degree_;
    int alive_edges_ = 0;
    std::vector<int> cover_;
    std::vector<TrailEntry> trail_;
    long long nodes_ = 0;
    bool truncated_ = false;
    int best_size_;
    std::vector<int> best_cover_;
};

}  // namespace

ExactResult bnb_mvc(const Graph& g, long long node_budget) {
    const auto start = Clock::now();
    CoverResult incumbent = fastvc_mvc(g, {.cutoff_iters = 0, .bms_k = 50, .seed = 0x5eedULL});
    BnbSearch search(g, node_budget, incumbent.size(), incumbent.cover);
    search.run();

    ExactResult result;
    result.cover = search.best_cover();
    std::sort(result.cover.begin(), result.cover.end());
    result.size = search.best_size();
    result.proven_optimal = !search.truncated();
    result.nodes_explored = search.nodes();
    result.wall_time_s = seconds_since(start);
    return result;
}

}  // namespace qwmvc
