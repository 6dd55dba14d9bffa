#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "multsidon/arith.hpp"

namespace multsidon {

enum class SplitCase { LargePrime, Balanced };

std::string_view to_string(SplitCase c);

// m = u * v, where either u is a prime above n^(2/3) (LargePrime), or
// u, v <= n^(2/3) with 2*Omega(u) - 2 <= Omega(v) (Balanced).
struct Decomposition {
    std::uint64_t m = 1;
    std::uint64_t u = 1;
    std::uint64_t v = 1;
    SplitCase split = SplitCase::Balanced;

    bool operator==(const Decomposition&) const = default;
};

// True when (u, v) with u * v <= n satisfies one of the two split conditions.
bool is_valid_split(std::uint64_t u, std::uint64_t v, std::uint64_t n, const FactorSieve& sieve);

// Constructive split: largest prime if it exceeds n^(2/3), otherwise the
// shortest nonincreasing prime prefix whose product reaches m^(1/3).
Decomposition lemma_decompose(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve);

// Length of the prefix chosen by lemma_decompose in the Balanced case; 0 for LargePrime.
std::size_t lemma_prefix_length(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve);

// The valid split with the smallest v.
Decomposition min_v_decompose(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve);

// Every valid divisor pair, sorted by v ascending. Found by trial division,
// independently of the factorization path used by min_v_decompose.
std::vector<Decomposition> enumerate_valid_splits(std::uint64_t m, std::uint64_t n,
                                                  const FactorSieve& sieve);

// Checks the Decomposition invariants against n; returns false on any breach.
bool satisfies_invariants(const Decomposition& d, std::uint64_t n, const FactorSieve& sieve);

} // namespace multsidon
