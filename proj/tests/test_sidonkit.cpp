#include <doctest.h>

#include "multsidon/cli.hpp"
#include "multsidon/sidonkit.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

using namespace multsidon;

namespace {

using Set = std::vector<std::uint64_t>;

// greedy scan with the trial-division oracle deciding each insertion
Set oracle_greedy(std::uint64_t n) {
    Set a;
    for (std::uint64_t m = 1; m <= n; ++m) {
        a.push_back(m);
        if (!oracle::is_3sidon(a)) a.pop_back();
    }
    return a;
}

bool pair_sidon(const Set& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k)
                for (std::size_t l = k + 1; l < a.size(); ++l)
                    if (k != i && k != j && l != i && l != j && a[i] * a[j] == a[k] * a[l]) return false;
    return true;
}

} // namespace

TEST_CASE("verifier examples") {
    const auto s = build_sieve(100);
    CHECK_FALSE(verify_k_sidon(Set{1, 2, 3, 4, 5}, 3, s).has_value());
    const auto v = verify_k_sidon(Set{1, 2, 3, 4, 8, 12}, 3, s);
    REQUIRE(v.has_value());
    CHECK(v->lhs == Set{1, 4, 12});
    CHECK(v->rhs == Set{2, 3, 8});
    CHECK(v->product == 48);
    CHECK(is_valid_violation(*v));
    CHECK_FALSE(verify_k_sidon(Set{2, 3, 5, 7, 11, 13}, 3, s).has_value());
    CHECK_FALSE(verify_k_sidon(Set{}, 3, s).has_value());
    CHECK_THROWS_AS(verify_k_sidon(Set{1, 2, 300}, 3, s), std::out_of_range);
    CHECK_THROWS_AS(verify_k_sidon(Set{0, 2}, 3, s), std::invalid_argument);
    CHECK_THROWS_AS(verify_k_sidon(Set{1, 2}, 0, s), std::invalid_argument);
}

TEST_CASE("square product examples") {
    const auto s = build_sieve(100);
    const auto w = verify_square_free_products(Set{1, 2, 3, 4, 8, 12}, 6, s);
    REQUIRE(w.has_value());
    CHECK(*w == Set{1, 2, 3, 4, 8, 12});
    CHECK_FALSE(verify_square_free_products(Set{2, 3, 5, 7, 11, 13}, 6, s).has_value());
    CHECK_FALSE(verify_square_free_products(Set{4, 9, 16}, 6, s).has_value());
    CHECK_THROWS_AS(verify_square_free_products(Set{1, 2}, 5, s), std::invalid_argument);
    CHECK_THROWS_AS(verify_square_free_products(Set{1, 2}, 0, s), std::invalid_argument);
    CHECK(is_perfect_square(2304));
    CHECK_FALSE(is_perfect_square(2303));
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(static_cast<u128>(4294967296ULL) * 4294967296ULL));
}

TEST_CASE("violation validity is recomputed") {
    CHECK(is_valid_violation({{1, 4, 12}, {2, 3, 8}, 48}));
    CHECK_FALSE(is_valid_violation({{1, 4, 12}, {2, 3, 8}, 49}));
    CHECK_FALSE(is_valid_violation({{1, 4, 12}, {1, 4, 12}, 48}));
    CHECK_FALSE(is_valid_violation({{1, 4, 12}, {2, 3, 9}, 48}));
}

TEST_CASE("verifier matches the pairwise oracle on random sets") {
    const auto s = build_sieve(200);
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto a = random_subset(200, 8 + seed % 25, seed);
        const auto got = verify_k_sidon(a, 3, s);
        const auto want = oracle::smallest_triple_violation(a);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->lhs == Set(want->lhs.begin(), want->lhs.end()));
            CHECK(got->rhs == Set(want->rhs.begin(), want->rhs.end()));
            CHECK(is_valid_violation(*got));
        }
        // tiny passes force the multi-pass path; the answer must not move
        const auto split = verify_k_sidon(a, 3, s, VerifyOptions{7});
        CHECK(split == got);

        const auto sq = verify_square_free_products(a, 6, s);
        CHECK(sq.has_value() == oracle::has_square_six_subset(a));
        if (sq) {
            CHECK(sq->size() == 6);
            CHECK(oracle::product_is_square(*sq));
            for (auto x : *sq) CHECK(std::binary_search(a.begin(), a.end(), x));
        }
        CHECK(verify_square_free_products(a, 6, s, VerifyOptions{5}).has_value() == sq.has_value());
        CHECK(verify_k_sidon(a, 2, s).has_value() == !pair_sidon(a));
    }
}

TEST_CASE("duplicates are ignored") {
    const auto s = build_sieve(100);
    CHECK_FALSE(verify_k_sidon(Set{2, 2, 3, 3, 5, 5, 7}, 3, s).has_value());
}

TEST_CASE("TripleIndex admits exactly what the verifier accepts") {
    const auto s = build_sieve(60);
    TripleIndex idx(TripleKey::Product, s);
    Set kept;
    for (std::uint64_t m = 1; m <= 60; ++m) {
        Set trial = kept;
        trial.push_back(m);
        CHECK(idx.admits(m) == oracle::is_3sidon(trial));
        if (idx.admits(m)) {
            idx.add(m);
            kept.push_back(m);
        }
    }
    CHECK(Set(idx.members().begin(), idx.members().end()) == kept);
    idx.remove_last();
    CHECK(idx.members().size() == kept.size() - 1);
    CHECK(idx.admits(kept.back()));
    CHECK_THROWS_AS(idx.add(1), std::invalid_argument);

    TripleIndex sq(TripleKey::SquareKernel, s);
    for (std::uint64_t m : {1, 2, 3, 4, 8}) sq.add(m);
    CHECK_FALSE(sq.admits(12));
    CHECK(sq.admits(5));
    TripleIndex empty(TripleKey::Product, s);
    CHECK_THROWS_AS(empty.remove_last(), std::logic_error);
}

TEST_CASE("greedy matches the oracle scan") {
    const auto s = build_sieve(200);
    CHECK(greedy_3sidon(1, s) == Set{1});
    CHECK(greedy_3sidon(8, s) == Set{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(greedy_3sidon(12, s) == Set{1, 2, 3, 4, 5, 6, 7, 8, 11});
    for (std::uint64_t n : {12, 20, 40, 90})
        CHECK(greedy_3sidon(n, s) == oracle_greedy(n));
}

TEST_CASE("exact maximum 3-Sidon sets") {
    const auto s = build_sieve(20);
    // size and lexicographically first maximum set, from the oracle's
    // exhaustive subset scan (largest size first)
    const std::vector<std::size_t> g3{0, 1, 2, 3, 4, 5, 6, 7, 8, 8, 9, 10, 10, 11, 11, 11, 11, 12, 13, 14, 14};
    for (std::uint64_t n = 1; n <= 20; ++n) {
        const auto r = exact_max_3sidon(n, 50'000'000, s);
        CHECK(r.optimal);
        CHECK_FALSE(r.budget_hit);
        CHECK(r.size == g3[n]);
        CHECK(r.best_set.size() == r.size);
        CHECK_FALSE(verify_k_sidon(r.best_set, 3, s).has_value());
    }
    CHECK(exact_max_3sidon(5, 1000, s).best_set == Set{1, 2, 3, 4, 5});
    CHECK(exact_max_3sidon(12, 1'000'000, s).best_set == Set{1, 2, 3, 4, 5, 7, 8, 9, 10, 11});
    CHECK(exact_max_3sidon(20, 1'000'000, s).best_set == Set{1, 2, 3, 5, 7, 9, 10, 11, 13, 14, 16, 17, 18, 19});
    CHECK(oracle::max_subset(9, [](const Set& a) { return oracle::is_3sidon(a); }).first == 8);
}

TEST_CASE("exact search honours the budget") {
    const auto s = build_sieve(30);
    const auto r = exact_max_3sidon(30, 50, s);
    CHECK_FALSE(r.optimal);
    CHECK(r.budget_hit);
    CHECK_FALSE(verify_k_sidon(r.best_set, 3, s).has_value());
    CHECK_THROWS_AS(exact_max_3sidon(31, 10, s), std::out_of_range);
    CHECK_THROWS_AS(exact_max_3sidon(10, 0, s), std::invalid_argument);
}

TEST_CASE("exact maximum square-product-free sets") {
    const auto s = build_sieve(15);
    // oracle: exhaustive subset scan with 6-subset square tests
    const std::vector<std::size_t> f6{0, 1, 2, 3, 4, 5, 6, 7, 8, 8, 8, 9, 9, 10, 10, 10};
    for (std::uint64_t n = 1; n <= 15; ++n) {
        const auto r = exact_max_square_product_free(n, 50'000'000, s);
        CHECK(r.optimal);
        CHECK(r.size == f6[n]);
        CHECK_FALSE(verify_square_free_products(r.best_set, 6, s).has_value());
    }
    CHECK(exact_max_square_product_free(15, 1'000'000, s).best_set == Set{1, 2, 3, 4, 5, 6, 7, 8, 11, 13});
}

TEST_CASE("base construction") {
    const auto s = build_sieve(3000);
    CHECK(base_construction(10, s) == Set{2, 3, 4, 5, 6, 7, 10});
    CHECK(base_construction(2, s) == Set{2});
    CHECK(base_construction(20, s).size() == 12);
    CHECK_THROWS_AS(base_construction(1, s), std::invalid_argument);
    for (std::uint64_t n = 2; n <= 300; ++n) {
        const auto b = base_construction(n, s);
        CHECK(b.size() == prime_pi(n, s) + prime_pi(n / 2, s));
        CHECK(std::is_sorted(b.begin(), b.end()));
        if (n <= 120) CHECK(oracle::is_3sidon(b));
    }
    CHECK_FALSE(verify_k_sidon(base_construction(3000, s), 3, s).has_value());
}
