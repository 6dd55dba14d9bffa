#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace multsidon {

using u128 = unsigned __int128;

// Smallest-prime-factor table for 2 <= m <= limit, plus a prefix prime count.
// Immutable after construction.
class FactorSieve {
public:
    explicit FactorSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    // spf(m) for 2 <= m <= limit; spf(1) is reported as 1.
    std::uint32_t spf(std::uint64_t m) const;
    bool is_prime(std::uint64_t m) const;

    std::span<const std::uint32_t> primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

FactorSieve build_sieve(std::uint64_t limit);

// Number of prime factors with multiplicity; big_omega(1) == 0.
unsigned big_omega(std::uint64_t m, const FactorSieve& sieve);

std::uint64_t prime_pi(std::uint64_t x, const FactorSieve& sieve);

// Prime factors sorted nonincreasing, with multiplicity. Empty for m == 1.
std::vector<std::uint32_t> factor_desc(std::uint64_t m, const FactorSieve& sieve);

// Product of the primes that divide m to an odd power.
std::uint64_t squarefree_kernel(std::uint64_t m, const FactorSieve& sieve);

// Exact integer helpers for the fractional-power boundaries used everywhere.
std::uint64_t isqrt(std::uint64_t x);
std::uint64_t icbrt(u128 x);

// floor(n^(2/3)), i.e. the largest t with t^3 <= n^2.
std::uint64_t floor_two_thirds(std::uint64_t n);

// u > n^(2/3)  <=>  u^3 > n^2
bool exceeds_two_thirds(std::uint64_t u, std::uint64_t n);

// floor(n^(num/den)) computed exactly; den > 0, num >= 0.
std::uint64_t floor_rational_power(std::uint64_t n, unsigned num, unsigned den);

} // namespace multsidon
