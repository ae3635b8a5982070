#include "qwmvc/wl.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "qwmvc/rng.hpp"

namespace qwmvc {

namespace {

std::uint64_t hash_u64(std::uint64_t x) { return mix64(x ^ 0x574c6861736821ULL); }

}  // namespace

std::string wl_hash(const Graph& g, int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("wl_hash: rounds must be >= 1");
    }
    const int n = g.vertex_count();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) {
        color[v] = hash_u64(static_cast<std::uint64_t>(g.degree(v)));
    }
    std::vector<std::uint64_t> next(n);
    std::vector<std::uint64_t> nbr_colors;
    for (int round = 0; round < rounds; ++round) {
        for (int v = 0; v < n; ++v) {
            nbr_colors.clear();
            for (int w : g.neighbors(v)) {
                nbr_colors.push_back(color[w]);
            }
            std::sort(nbr_colors.begin(), nbr_colors.end());
            std::uint64_t h = fnv1a64(&color[v], sizeof(color[v]));
            for (std::uint64_t c : nbr_colors) {
                h = fnv1a64(&c, sizeof(c), h);
            }
            next[v] = hash_u64(h);
        }
        color = next;
    }
    std::sort(color.begin(), color.end());
    std::uint64_t digest = fnv1a64(nullptr, 0);
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    digest = fnv1a64(&nn, sizeof(nn), digest);
    for (std::uint64_t c : color) {
        digest = fnv1a64(&c, sizeof(c), digest);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return std::string(buf);
}

}  // namespace qwmvc
