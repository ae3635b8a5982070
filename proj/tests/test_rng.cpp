#include <doctest.h>

#include "qwmvc/rng.hpp"

using namespace qwmvc;

TEST_CASE("rng streams are deterministic per seed") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const auto xa = a.next_u64();
        all_equal = all_equal && xa == b.next_u64();
        any_diff = any_diff || xa != c.next_u64();
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("uniform helpers stay in range") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const auto x = rng.below(13);
        CHECK(x < 13);
        const double r = rng.real();
        CHECK(r >= 0.0);
        CHECK(r < 1.0);
        const int v = rng.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("mix64 separates nearby keys") {
    CHECK(mix64(1) != mix64(2));
    CHECK(mix64(0) != 0);
}
