#include "multsidon/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace multsidon {

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("sieve limit must be at least 2");
    if (limit > 0xFFFFFFFFull)
        throw std::invalid_argument("sieve limit exceeds 32-bit table range");

    // linear sieve: every composite is struck exactly once by its spf
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || i * p > limit)
                break;
            spf_[i * p] = p;
        }
    }
}

std::uint32_t FactorSieve::spf(std::uint64_t m) const {
    if (m == 0 || m > limit_)
        throw std::out_of_range("spf: " + std::to_string(m) + " outside [1, " +
                                std::to_string(limit_) + "]");
    return m == 1 ? 1 : spf_[m];
}

bool FactorSieve::is_prime(std::uint64_t m) const {
    return m >= 2 && spf(m) == m;
}

FactorSieve build_sieve(std::uint64_t limit) { return FactorSieve(limit); }

unsigned big_omega(std::uint64_t m, const FactorSieve& sieve) {
    if (m == 0 || m > sieve.limit())
        throw std::out_of_range("big_omega: argument outside sieve range");
    unsigned count = 0;
    while (m > 1) {
        m /= sieve.spf(m);
        ++count;
    }
    return count;
}

std::uint64_t prime_pi(std::uint64_t x, const FactorSieve& sieve) {
    if (x > sieve.limit())
        throw std::out_of_range("prime_pi: argument exceeds sieve limit");
    auto primes = sieve.primes();
    return static_cast<std::uint64_t>(
        std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

std::vector<std::uint32_t> factor_desc(std::uint64_t m, const FactorSieve& sieve) {
    if (m == 0 || m > sieve.limit())
        throw std::out_of_range("factor_desc: argument outside sieve range");
    std::vector<std::uint32_t> out;
    while (m > 1) {
        std::uint32_t p = sieve.spf(m);
        out.push_back(p);
        m /= p;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::uint64_t squarefree_kernel(std::uint64_t m, const FactorSieve& sieve) {
    if (m == 0 || m > sieve.limit())
        throw std::out_of_range("squarefree_kernel: argument outside sieve range");
    std::uint64_t kernel = 1;
    while (m > 1) {
        std::uint32_t p = sieve.spf(m);
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1)
            kernel *= p;
    }
    return kernel;
}

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t icbrt(u128 x) {
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(x)));
    auto cube = [](std::uint64_t t) { return static_cast<u128>(t) * t * t; };
    while (r > 0 && cube(r) > x)
        --r;
    while (cube(r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t floor_two_thirds(std::uint64_t n) {
    return icbrt(static_cast<u128>(n) * n);
}

bool exceeds_two_thirds(std::uint64_t u, std::uint64_t n) {
    // u^3 can reach 2^192 for 64-bit u; anything above 2^42 already wins for n < 2^63
    if (u >= (1ull << 42))
        return true;
    return static_cast<u128>(u) * u * u > static_cast<u128>(n) * n;
}

std::uint64_t floor_rational_power(std::uint64_t n, unsigned num, unsigned den) {
    using boost::multiprecision::cpp_int;
    if (den == 0)
        throw std::invalid_argument("floor_rational_power: zero denominator");
    if (n <= 1 || num == 0)
        return num == 0 ? 1 : n;

    const cpp_int target = boost::multiprecision::pow(cpp_int(n), num);
    auto fits = [&](std::uint64_t t) {
        return boost::multiprecision::pow(cpp_int(t), den) <= target;
    };
    double guess = std::pow(static_cast<double>(n), static_cast<double>(num) / den);
    auto t = static_cast<std::uint64_t>(guess);
    while (t > 0 && !fits(t))
        --t;
    while (fits(t + 1))
        ++t;
    return t;
}

} // namespace multsidon
