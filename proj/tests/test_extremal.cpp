#include <doctest.h>

#include "multsidon/extremal.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>

using namespace multsidon;

namespace {

bool witness_is_simple(const EdgeList& w, unsigned order) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (auto [a, b] : w) {
        if (a == b || a >= order || b >= order) return false;
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return true;
}

} // namespace

TEST_CASE("C6 membership") {
    const EdgeList c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    CHECK_FALSE(is_c6_free(c6));
    EdgeList k5;
    for (unsigned a = 0; a < 5; ++a)
        for (unsigned b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    CHECK(is_c6_free(k5));
    EdgeList k23;
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 2; b < 5; ++b) k23.emplace_back(a, b);
    CHECK(is_c6_free(k23));
    CHECK(is_c6_free(EdgeList{}));
}

TEST_CASE("ex(n, C6) against full enumeration") {
    CHECK(brute_force_ex_c6(5).max_edges == 10);
    CHECK(brute_force_ex_c6(3).max_edges == 3);
    for (unsigned n = 1; n <= 7; ++n) {
        const auto r = brute_force_ex_c6(n);
        CHECK(r.max_edges == oracle::ex_c6_exhaustive(n));
        CHECK(r.witness.size() == r.max_edges);
        CHECK(witness_is_simple(r.witness, n));
        CHECK(is_c6_free(r.witness));
        CHECK_FALSE(oracle::has_c6(n, r.witness));
    }
}

TEST_CASE("ex(n, C6) for 8 and 9") {
    // frozen from the branch and bound; full enumeration stops at 7
    CHECK(brute_force_ex_c6(8).max_edges == 16);
    CHECK(brute_force_ex_c6(9).max_edges == 20);
    CHECK(is_c6_free(brute_force_ex_c6(9).witness));
    CHECK_THROWS_AS(brute_force_ex_c6(10), BudgetExceeded);
}

TEST_CASE("bipartite ex against full enumeration") {
    for (unsigned u = 1; u <= 4; ++u)
        for (unsigned v = 1; v <= u; ++v) {
            const auto r = brute_force_ex_c6_bipartite(u, v);
            CHECK(r.max_edges == oracle::ex_c6_bipartite_exhaustive(u, v));
            CHECK(is_c6_free(r.witness));
            for (auto [a, b] : r.witness) {
                const auto lo = std::min(a, b), hi = std::max(a, b);
                CHECK(lo < u);
                CHECK(hi >= u);
                CHECK(hi < u + v);
            }
        }
    CHECK(brute_force_ex_c6_bipartite(5, 5).max_edges == 14);
    CHECK(brute_force_ex_c6_bipartite(3, 5).max_edges == brute_force_ex_c6_bipartite(5, 3).max_edges);
    CHECK_THROWS_AS(brute_force_ex_c6_bipartite(6, 1), BudgetExceeded);
}

TEST_CASE("closed-form bounds") {
    CHECK(bound_furedi_balanced(1000).strong == doctest::Approx(6272.0));
    CHECK(bound_furedi_balanced(1000).weak == doctest::Approx(10000.0));
    CHECK(bound_furedi_balanced(1).strong == doctest::Approx(0.6272));
    CHECK(bound_furedi_balanced(1).weak == doctest::Approx(1.0));
    CHECK(bound_furedi_balanced(64).strong == doctest::Approx(160.5632));
    CHECK(bound_furedi_unbalanced(8, 8) == doctest::Approx(276.159).epsilon(1e-5));
    CHECK(bound_furedi_unbalanced(1, 1) == doctest::Approx(33.26).epsilon(1e-3));
    CHECK(bound_furedi_unbalanced(1000, 1) == doctest::Approx(16142.0).epsilon(1e-4));
    CHECK(bound_gyori(10, 3) == doctest::Approx(24.5));
    CHECK(bound_gyori(1, 1) == doctest::Approx(2.5));
    CHECK(bound_gyori(100, 10) == doctest::Approx(250.0));
    CHECK_THROWS_AS(bound_gyori(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(bound_furedi_balanced(0), std::invalid_argument);
    CHECK_THROWS_AS(bound_furedi_unbalanced(0, 4), std::invalid_argument);
}
