#include "multsidon/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace multsidon {

namespace {

void check_args(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve) {
    if (m < 1)
        throw std::invalid_argument("decompose: m must be positive");
    if (m > n)
        throw std::invalid_argument("decompose: m = " + std::to_string(m) +
                                    " exceeds n = " + std::to_string(n));
    if (n > sieve.limit())
        throw std::out_of_range("decompose: n exceeds sieve limit");
}

bool cube_at_least(std::uint64_t u, std::uint64_t m) {
    return static_cast<u128>(u) * u * u >= m;
}

} // namespace

std::string_view to_string(SplitCase c) {
    return c == SplitCase::LargePrime ? "LargePrime" : "Balanced";
}

bool is_valid_split(std::uint64_t u, std::uint64_t v, std::uint64_t n, const FactorSieve& sieve) {
    if (exceeds_two_thirds(u, n))
        return sieve.is_prime(u);
    if (exceeds_two_thirds(v, n))
        return false;
    return 2 * static_cast<long>(big_omega(u, sieve)) - 2 <= static_cast<long>(big_omega(v, sieve));
}

Decomposition lemma_decompose(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve) {
    check_args(m, n, sieve);
    auto primes = factor_desc(m, sieve);
    if (!primes.empty() && exceeds_two_thirds(primes.front(), n))
        return {m, primes.front(), m / primes.front(), SplitCase::LargePrime};

    std::uint64_t u = 1;
    for (std::uint32_t p : primes) {
        if (cube_at_least(u, m))
            break;
        u *= p;
    }
    return {m, u, m / u, SplitCase::Balanced};
}

std::size_t lemma_prefix_length(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve) {
    check_args(m, n, sieve);
    auto primes = factor_desc(m, sieve);
    if (!primes.empty() && exceeds_two_thirds(primes.front(), n))
        return 0;
    std::uint64_t u = 1;
    std::size_t i = 0;
    while (i < primes.size() && !cube_at_least(u, m))
        u *= primes[i++];
    return i;
}

Decomposition min_v_decompose(std::uint64_t m, std::uint64_t n, const FactorSieve& sieve) {
    check_args(m, n, sieve);

    auto primes = factor_desc(m, sieve);
    if (!primes.empty() && exceeds_two_thirds(primes.front(), n))
        return {m, primes.front(), m / primes.front(), SplitCase::LargePrime};

    // divisors of m from its factorization, then the first valid v wins
    std::vector<std::uint64_t> divisors{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::uint32_t p = primes[i];
        std::size_t e = 0;
        while (i < primes.size() && primes[i] == p) {
            ++i;
            ++e;
        }
        const std::size_t base = divisors.size();
        std::uint64_t pk = 1;
        for (std::size_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divisors.push_back(divisors[j] * pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    for (std::uint64_t v : divisors) {
        std::uint64_t u = m / v;
        if (is_valid_split(u, v, n, sieve))
            return {m, u, v, SplitCase::Balanced};
    }
    throw std::logic_error("min_v_decompose: no valid split for m = " + std::to_string(m));
}

std::vector<Decomposition> enumerate_valid_splits(std::uint64_t m, std::uint64_t n,
                                                  const FactorSieve& sieve) {
    check_args(m, n, sieve);
    std::vector<Decomposition> out;
    auto consider = [&](std::uint64_t u, std::uint64_t v) {
        if (!is_valid_split(u, v, n, sieve))
            return;
        SplitCase c = exceeds_two_thirds(u, n) ? SplitCase::LargePrime : SplitCase::Balanced;
        out.push_back({m, u, v, c});
    };
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        consider(d, m / d);
        if (d * d != m)
            consider(m / d, d);
    }
    std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
        if (a.v != b.v)
            return a.v < b.v;
        return a.split == SplitCase::LargePrime && b.split != SplitCase::LargePrime;
    });
    return out;
}

bool satisfies_invariants(const Decomposition& d, std::uint64_t n, const FactorSieve& sieve) {
    if (d.u == 0 || d.v == 0 || static_cast<u128>(d.u) * d.v != d.m)
        return false;
    if (d.split == SplitCase::LargePrime)
        return sieve.is_prime(d.u) && exceeds_two_thirds(d.u, n);
    return !exceeds_two_thirds(d.u, n) && !exceeds_two_thirds(d.v, n) &&
           2 * static_cast<long>(big_omega(d.u, sieve)) - 2 <=
               static_cast<long>(big_omega(d.v, sieve));
}

} // namespace multsidon
