#include <doctest.h>

#include <stdexcept>

#include "qwmvc/rng.hpp"
#include "qwmvc/wl.hpp"
#include "support/test_graphs.hpp"

using namespace qwmvc;
using namespace qwmvc::testing;

TEST_CASE("wl digest is invariant under relabeling") {
    const Graph k4 = complete_graph(4);
    const Graph k4_permuted = permute_graph(k4, {2, 0, 3, 1});
    CHECK(wl_hash(k4) == wl_hash(k4_permuted));
}

TEST_CASE("wl distinguishes graphs with different degree multisets") {
    CHECK(wl_hash(complete_graph(3)) != wl_hash(path_graph(3)));
}

TEST_CASE("wl collides on the classic regular pair (documented limitation)") {
    // C6 and 2xC3 are both 2-regular on 6 vertices; refinement never splits them
    const Graph c6 = cycle_graph(6);
    const Graph two_c3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(wl_hash(c6) == wl_hash(two_c3));
}

TEST_CASE("wl invariance over 100 random permutations") {
    Rng rng(99);
    const Graph g = generate_er(18, 0.3, 4);
    const std::string digest = wl_hash(g);
    for (int i = 0; i < 100; ++i) {
        const auto perm = random_permutation(g.vertex_count(), rng);
        CHECK(wl_hash(permute_graph(g, perm)) == digest);
    }
}

TEST_CASE("wl validates rounds") {
    CHECK_THROWS_AS(wl_hash(complete_graph(3), 0), std::invalid_argument);
    CHECK(wl_hash(complete_graph(3), 1) != wl_hash(path_graph(3), 1));
}
