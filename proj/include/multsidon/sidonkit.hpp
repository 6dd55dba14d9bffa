#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "multsidon/arith.hpp"

namespace multsidon {

// s1 ... sk = t1 ... tk with all 2k elements pairwise distinct.
struct Violation {
    std::vector<std::uint64_t> lhs;  // ascending
    std::vector<std::uint64_t> rhs;  // ascending, lhs < rhs lexicographically
    u128 product = 0;

    bool operator==(const Violation&) const = default;
};

// Recomputes distinctness and both products from scratch.
bool is_valid_violation(const Violation& v);

struct VerifyOptions {
    // soft cap on k-subsets held in memory at once; larger inputs take several passes
    std::size_t max_subsets_per_pass = std::size_t{1} << 23;
};

// nullopt when A is multiplicative k-Sidon; otherwise the lexicographically
// smallest violation. Duplicate elements are ignored.
std::optional<Violation> verify_k_sidon(std::span<const std::uint64_t> elements, unsigned k,
                                        const FactorSieve& sieve, VerifyOptions options = {});

// nullopt when no `count`-element subset has a perfect-square product;
// otherwise one such subset (ascending). count must be even and positive.
std::optional<std::vector<std::uint64_t>>
verify_square_free_products(std::span<const std::uint64_t> elements, unsigned count,
                            const FactorSieve& sieve, VerifyOptions options = {});

bool is_perfect_square(u128 x);

enum class TripleKey { Product, SquareKernel };

// Incrementally grown set that rejects an element when it would complete two
// disjoint triples with the same key (equal products, or a square 6-product).
// Removal is LIFO only.
class TripleIndex {
public:
    TripleIndex(TripleKey mode, const FactorSieve& sieve) : mode_(mode), sieve_(&sieve) {}

    bool admits(std::uint64_t m) const;
    void add(std::uint64_t m);
    void remove_last();

    std::span<const std::uint64_t> members() const { return members_; }

private:
    struct Entry {
        u128 key;
        std::uint32_t slot[3];
        std::uint32_t next;
    };
    struct KeyHash {
        std::size_t operator()(u128 k) const noexcept;
    };

    u128 weight(std::uint64_t m) const;
    u128 combine(u128 a, u128 b) const;

    TripleKey mode_;
    const FactorSieve* sieve_;
    std::vector<std::uint64_t> members_;
    std::vector<u128> weights_;
    std::vector<Entry> entries_;
    std::unordered_map<u128, std::uint32_t, KeyHash> heads_;
};

struct SearchResult {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> best_set;
    std::size_t size = 0;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    bool budget_hit = false;
};

// Branch and bound over 1..n ascending, include-branch first. Among maximum
// sets the lexicographically smallest is returned.
SearchResult exact_max_3sidon(std::uint64_t n, std::uint64_t budget, const FactorSieve& sieve);

// Same search for sets with no 6-element subset of square product.
SearchResult exact_max_square_product_free(std::uint64_t n, std::uint64_t budget,
                                           const FactorSieve& sieve);

std::vector<std::uint64_t> greedy_3sidon(std::uint64_t n, const FactorSieve& sieve);

// Primes up to n together with 2p for primes p <= n/2.
std::vector<std::uint64_t> base_construction(std::uint64_t n, const FactorSieve& sieve);

} // namespace multsidon
