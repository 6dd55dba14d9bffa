#include <doctest.h>

#include "multsidon/decompose.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

using namespace multsidon;

namespace {

Decomposition dec(std::uint64_t m, std::uint64_t u, std::uint64_t v, SplitCase c) { return {m, u, v, c}; }

// min-v split straight from the split conditions, with Omega by trial division
std::pair<std::uint64_t, std::uint64_t> naive_min_v(std::uint64_t m, std::uint64_t n) {
    const std::uint64_t t = floor_two_thirds(n);
    for (std::uint64_t v = 1; v <= m; ++v) {
        if (m % v) continue;
        const std::uint64_t u = m / v;
        if (u > t && oracle::is_prime(u)) return {u, v};
        if (u <= t && v <= t && 2 * static_cast<int>(oracle::omega(u)) - 2 <= static_cast<int>(oracle::omega(v)))
            return {u, v};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("constructive split examples") {
    const auto s = build_sieve(1000);
    CHECK(lemma_decompose(97, 100, s) == dec(97, 97, 1, SplitCase::LargePrime));
    CHECK(lemma_decompose(60, 100, s) == dec(60, 5, 12, SplitCase::Balanced));
    CHECK(lemma_decompose(96, 100, s) == dec(96, 6, 16, SplitCase::Balanced));
    CHECK(lemma_prefix_length(60, 100, s) == 1);
    CHECK(lemma_prefix_length(96, 100, s) == 2);
    CHECK(lemma_prefix_length(97, 100, s) == 0);
    CHECK(lemma_decompose(1, 100, s).u == 1);
}

TEST_CASE("min-v examples") {
    const auto s = build_sieve(100);
    CHECK(min_v_decompose(60, 100, s) == dec(60, 15, 4, SplitCase::Balanced));
    CHECK(min_v_decompose(36, 100, s) == dec(36, 9, 4, SplitCase::Balanced));
    CHECK(min_v_decompose(97, 100, s) == dec(97, 97, 1, SplitCase::LargePrime));
}

TEST_CASE("split enumeration examples") {
    const auto s = build_sieve(100);
    std::vector<std::uint64_t> vs;
    for (const auto& d : enumerate_valid_splits(60, 100, s)) vs.push_back(d.v);
    CHECK(vs == std::vector<std::uint64_t>{4, 6, 10, 12, 15, 20});

    const auto p = enumerate_valid_splits(97, 100, s);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == dec(97, 97, 1, SplitCase::LargePrime));

    const auto one = enumerate_valid_splits(1, 100, s);
    REQUIRE(one.size() == 1);
    CHECK(one[0].u == 1);
    CHECK(one[0].v == 1);
}

TEST_CASE("error paths") {
    const auto s = build_sieve(100);
    CHECK_THROWS_AS(lemma_decompose(0, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(lemma_decompose(101, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(min_v_decompose(0, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_valid_splits(120, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(lemma_decompose(5, 1000, s), std::out_of_range);
}

TEST_CASE("every m up to 3000 splits, and min-v matches the naive scan") {
    const std::uint64_t n = 3000;
    const auto s = build_sieve(n);
    for (std::uint64_t m = 1; m <= n; ++m) {
        const auto l = lemma_decompose(m, n, s);
        CHECK(satisfies_invariants(l, n, s));
        CHECK(l.u * l.v == m);
        const auto mv = min_v_decompose(m, n, s);
        CHECK(satisfies_invariants(mv, n, s));
        CHECK(mv.v <= l.v);
        const auto [u, v] = naive_min_v(m, n);
        CHECK(mv.u == u);
        CHECK(mv.v == v);
        for (const auto& d : enumerate_valid_splits(m, n, s))
            CHECK(is_valid_split(d.u, d.v, n, s));
    }
}

TEST_CASE("invariant checker rejects broken splits") {
    const auto s = build_sieve(100);
    CHECK_FALSE(satisfies_invariants(dec(60, 6, 10, SplitCase::LargePrime), 100, s));
    CHECK_FALSE(satisfies_invariants(dec(60, 5, 11, SplitCase::Balanced), 100, s));
    CHECK_FALSE(satisfies_invariants(dec(96, 32, 3, SplitCase::Balanced), 100, s));
    CHECK(satisfies_invariants(dec(96, 6, 16, SplitCase::Balanced), 100, s));
    CHECK(to_string(SplitCase::LargePrime) == "LargePrime");
    CHECK(to_string(SplitCase::Balanced) == "Balanced");
}
