#pragma once

#include <string>

#include "qwmvc/graph.hpp"

namespace qwmvc {

/// Weisfeiler-Lehman digest: colors start as degrees, each round rehashes
/// (own color, sorted neighbor colors), and the digest hashes the sorted
/// final color multiset. Isomorphic graphs get equal digests; equal digests
/// do NOT prove isomorphism (e.g. C6 and two disjoint C3 collide).
/// Requires rounds >= 1.
std::string wl_hash(const Graph& g, int rounds = 3);

}  // namespace qwmvc
