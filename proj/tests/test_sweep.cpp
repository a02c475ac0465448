#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hyperlab/classify.hpp"
#include "hyperlab/sweep.hpp"

using namespace hyperlab;
namespace sw = hyperlab::sweep;

TEST_CASE("first_match finds the least index in both modes") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = 1 + rng() % 300000;
        const std::uint64_t salt = rng();
        auto pred = [&](std::int64_t i) { return ((i * 2654435761u) ^ salt) % 97 == 0; };
        std::int64_t serial = sw::first_match(n, sw::Mode::Serial, pred);
        std::int64_t parallel = sw::first_match(n, sw::Mode::Parallel, pred);
        CHECK(serial == parallel);
        if (serial >= 0) {
            CHECK(pred(serial));
            for (std::int64_t i = std::max<std::int64_t>(0, serial - 50); i < serial; ++i)
                CHECK_FALSE(pred(i));
        }
    }
}

TEST_CASE("first_match edge cases") {
    auto never = [](std::int64_t) { return false; };
    auto always = [](std::int64_t) { return true; };
    CHECK(sw::first_match(0, sw::Mode::Parallel, always) == -1);
    CHECK(sw::first_match(1000000, sw::Mode::Parallel, never) == -1);
    CHECK(sw::first_match(1000000, sw::Mode::Parallel, always) == 0);
    auto last_only = [](std::int64_t i) { return i == 999999; };
    CHECK(sw::first_match(1000000, sw::Mode::Parallel, last_only) == 999999);
    CHECK(sw::first_match(1000000, sw::Mode::Serial, last_only) == 999999);
}

TEST_CASE("all_of") {
    CHECK(sw::all_of(100000, sw::Mode::Parallel, [](std::int64_t i) { return i >= 0; }));
    CHECK_FALSE(sw::all_of(100000, sw::Mode::Parallel, [](std::int64_t i) { return i != 4321; }));
}

TEST_CASE("index decoding") {
    CHECK(sw::decode_pair(0, 7) == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(sw::decode_pair(15, 7) == std::pair<std::int64_t, std::int64_t>{2, 1});
    auto t = sw::decode_triple(5 * 49 + 3 * 7 + 6, 7);
    CHECK(t[0] == 5);
    CHECK(t[1] == 3);
    CHECK(t[2] == 6);
}

TEST_CASE("thread budget is sane") { CHECK(sw::thread_budget() >= 1); }

TEST_CASE("classifier verdicts and witnesses match between modes") {
    Ring k23 = Ring::integer_scaled({2, 3});
    Ring k24 = Ring::integer_scaled({2, 4});
    for (const Ring& r : {k23, k24}) {
        for (i64 d : {2, 12, 15, 30, 60, 105, 120}) {
            Ideal i = Ideal::principal_multiple(d);
            CHECK(is_prime(r, i, sw::Mode::Serial) == is_prime(r, i, sw::Mode::Parallel));
            CHECK(is_primary(r, i, sw::Mode::Serial) == is_primary(r, i, sw::Mode::Parallel));
            CHECK(is_two_absorbing(r, i, sw::Mode::Serial) ==
                  is_two_absorbing(r, i, sw::Mode::Parallel));
            CHECK(is_two_absorbing_primary(r, i, sw::Mode::Serial) ==
                  is_two_absorbing_primary(r, i, sw::Mode::Parallel));
        }
    }
}
