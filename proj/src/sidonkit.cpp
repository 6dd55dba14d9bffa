#include "multsidon/sidonkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace multsidon {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// product of two squarefree numbers, reduced to its squarefree part
u128 kernel_combine(u128 a, u128 b) {
    u128 g = gcd128(a, b);
    return (a / g) * (b / g);
}

std::uint64_t mix64(u128 key) {
    auto x = static_cast<std::uint64_t>(key) ^ (static_cast<std::uint64_t>(key >> 64) * 0x9E3779B97F4A7C15ull);
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDull;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ull;
    x ^= x >> 33;
    return x;
}

std::vector<std::uint64_t> normalized(std::span<const std::uint64_t> elements, const FactorSieve& sieve) {
    std::vector<std::uint64_t> out(elements.begin(), elements.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::uint64_t a : out) {
        if (a == 0)
            throw std::invalid_argument("set elements must be positive");
        if (a > sieve.limit())
            throw std::out_of_range("set element " + std::to_string(a) + " exceeds sieve limit");
    }
    return out;
}

// Drops elements that cannot take part in any equal-key pair: in Product mode
// an element owning a prime no other element has; in SquareKernel mode an
// element owning a prime no other element has to an odd power.
std::vector<std::uint64_t> participants(std::vector<std::uint64_t> elems, TripleKey mode,
                                        const FactorSieve& sieve) {
    auto primes_of = [&](std::uint64_t m) {
        std::vector<std::uint32_t> ps;
        while (m > 1) {
            std::uint32_t p = sieve.spf(m);
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (mode == TripleKey::Product || e % 2 == 1)
                ps.push_back(p);
        }
        return ps;
    };
    std::vector<std::vector<std::uint32_t>> primes(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        primes[i] = primes_of(elems[i]);

    std::vector<bool> alive(elems.size(), true);
    for (bool changed = true; changed;) {
        changed = false;
        std::unordered_map<std::uint32_t, std::size_t> holders;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (alive[i])
                for (std::uint32_t p : primes[i])
                    ++holders[p];
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (!alive[i])
                continue;
            for (std::uint32_t p : primes[i]) {
                if (holders[p] == 1) {
                    alive[i] = false;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (alive[i])
            out.push_back(elems[i]);
    return out;
}

double choose(std::size_t n, unsigned k) {
    if (k > n)
        return 0.0;
    double c = 1.0;
    for (unsigned i = 0; i < k; ++i)
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

struct PairHit {
    std::vector<std::uint32_t> lhs;  // indices, ascending
    std::vector<std::uint32_t> rhs;
    u128 key = 0;
};

// Finds the lexicographically smallest pair of disjoint k-subsets of `elems`
// with equal key. Keys are the subset product of `weights` (Product) or the
// squarefree part of that product (SquareKernel).
std::optional<PairHit> smallest_equal_key_pair(const std::vector<u128>& weights, unsigned k,
                                               TripleKey mode, std::size_t cap) {
    const std::size_t n = weights.size();
    if (k == 0 || n < 2 * static_cast<std::size_t>(k))
        return std::nullopt;

    const double total = choose(n, k);
    const auto passes = static_cast<std::uint64_t>(
        std::max(1.0, std::ceil(total / static_cast<double>(std::max<std::size_t>(cap, 1)))));

    struct Item {
        u128 key;
        std::uint64_t ordinal;
    };
    std::vector<Item> items;
    std::vector<std::uint32_t> members;
    std::optional<PairHit> best;

    std::vector<std::uint32_t> idx(k);
    std::vector<u128> partial(k + 1);
    partial[0] = 1;

    auto combine = [mode](u128 acc, u128 w) {
        return mode == TripleKey::Product ? acc * w : kernel_combine(acc, w);
    };

    for (std::uint64_t pass = 0; pass < passes; ++pass) {
        items.clear();
        members.clear();
        std::uint64_t ordinal = 0;

        // lexicographic k-subset enumeration with running keys
        std::size_t depth = 0;
        idx[0] = 0;
        while (true) {
            if (idx[depth] + (k - depth) > n) {
                if (depth == 0)
                    break;
                --depth;
                ++idx[depth];
                continue;
            }
            partial[depth + 1] = combine(partial[depth], weights[idx[depth]]);
            if (depth + 1 == k) {
                const u128 key = partial[k];
                if (passes == 1 || mix64(key) % passes == pass) {
                    items.push_back({key, ordinal++});
                    members.insert(members.end(), idx.begin(), idx.end());
                }
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = idx[depth - 1] + 1;
            }
        }

        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.key != b.key ? a.key < b.key : a.ordinal < b.ordinal;
        });

        auto subset = [&](const Item& it) {
            const std::uint32_t* p = members.data() + it.ordinal * k;
            return std::vector<std::uint32_t>(p, p + k);
        };
        auto disjoint = [&](const Item& a, const Item& b) {
            const std::uint32_t* p = members.data() + a.ordinal * k;
            const std::uint32_t* q = members.data() + b.ordinal * k;
            std::size_t i = 0, j = 0;
            while (i < k && j < k) {
                if (p[i] == q[j])
                    return false;
                if (p[i] < q[j])
                    ++i;
                else
                    ++j;
            }
            return true;
        };

        for (std::size_t lo = 0; lo < items.size();) {
            std::size_t hi = lo + 1;
            while (hi < items.size() && items[hi].key == items[lo].key)
                ++hi;
            // ordinals ascend within a run, and ordinal order is lexicographic order
            bool done = false;
            for (std::size_t i = lo; i < hi && !done; ++i) {
                for (std::size_t j = i + 1; j < hi; ++j) {
                    if (!disjoint(items[i], items[j]))
                        continue;
                    PairHit hit{subset(items[i]), subset(items[j]), items[i].key};
                    if (!best || std::tie(hit.lhs, hit.rhs) < std::tie(best->lhs, best->rhs))
                        best = std::move(hit);
                    done = true;
                    break;
                }
            }
            lo = hi;
        }
    }
    return best;
}

void check_product_width(const std::vector<std::uint64_t>& elems, unsigned k) {
    if (elems.empty())
        return;
    const auto bits = static_cast<unsigned>(std::bit_width(elems.back()));
    if (static_cast<unsigned long>(bits) * k > 128)
        throw std::overflow_error("k-fold products of these elements exceed 128 bits");
}

} // namespace

bool is_valid_violation(const Violation& v) {
    if (v.lhs.size() != v.rhs.size() || v.lhs.empty())
        return false;
    std::vector<std::uint64_t> all = v.lhs;
    all.insert(all.end(), v.rhs.begin(), v.rhs.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    u128 left = 1, right = 1;
    for (std::uint64_t a : v.lhs)
        left *= a;
    for (std::uint64_t b : v.rhs)
        right *= b;
    return left == right && left == v.product;
}

std::optional<Violation> verify_k_sidon(std::span<const std::uint64_t> elements, unsigned k,
                                        const FactorSieve& sieve, VerifyOptions options) {
    if (k < 1)
        throw std::invalid_argument("verify_k_sidon: k must be positive");
    auto elems = normalized(elements, sieve);
    check_product_width(elems, k);
    elems = participants(std::move(elems), TripleKey::Product, sieve);

    std::vector<u128> weights(elems.begin(), elems.end());
    auto hit = smallest_equal_key_pair(weights, k, TripleKey::Product, options.max_subsets_per_pass);
    if (!hit)
        return std::nullopt;
    Violation v;
    for (std::uint32_t i : hit->lhs)
        v.lhs.push_back(elems[i]);
    for (std::uint32_t i : hit->rhs)
        v.rhs.push_back(elems[i]);
    v.product = hit->key;
    return v;
}

std::optional<std::vector<std::uint64_t>>
verify_square_free_products(std::span<const std::uint64_t> elements, unsigned count,
                            const FactorSieve& sieve, VerifyOptions options) {
    if (count == 0 || count % 2 != 0)
        throw std::invalid_argument("verify_square_free_products: count must be even and positive");
    auto elems = normalized(elements, sieve);
    check_product_width(elems, count / 2);
    elems = participants(std::move(elems), TripleKey::SquareKernel, sieve);

    std::vector<u128> weights;
    weights.reserve(elems.size());
    for (std::uint64_t a : elems)
        weights.push_back(squarefree_kernel(a, sieve));
    auto hit = smallest_equal_key_pair(weights, count / 2, TripleKey::SquareKernel,
                                       options.max_subsets_per_pass);
    if (!hit)
        return std::nullopt;
    std::vector<std::uint64_t> witness;
    for (std::uint32_t i : hit->lhs)
        witness.push_back(elems[i]);
    for (std::uint32_t i : hit->rhs)
        witness.push_back(elems[i]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

bool is_perfect_square(u128 x) {
    // floor sqrt by Newton iteration from above
    if (x < 2)
        return true;
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(x))) + 2;
    while (r * r > x)
        r = (r + x / r) / 2;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r * r == x;
}

std::size_t TripleIndex::KeyHash::operator()(u128 k) const noexcept {
    return static_cast<std::size_t>(mix64(k));
}

u128 TripleIndex::weight(std::uint64_t m) const {
    return mode_ == TripleKey::Product ? static_cast<u128>(m) : squarefree_kernel(m, *sieve_);
}

u128 TripleIndex::combine(u128 a, u128 b) const {
    return mode_ == TripleKey::Product ? a * b : kernel_combine(a, b);
}

bool TripleIndex::admits(std::uint64_t m) const {
    const u128 wm = weight(m);
    const std::size_t size = members_.size();
    for (std::uint32_t a = 0; a < size; ++a) {
        if (members_[a] == m)
            throw std::invalid_argument("TripleIndex: element already present");
        const u128 wam = combine(wm, weights_[a]);
        for (std::uint32_t b = a + 1; b < size; ++b) {
            auto it = heads_.find(combine(wam, weights_[b]));
            if (it == heads_.end())
                continue;
            for (std::uint32_t e = it->second; e != kNone; e = entries_[e].next) {
                const auto& s = entries_[e].slot;
                bool clash = false;
                for (std::uint32_t x : s)
                    clash = clash || x == a || x == b;
                if (!clash)
                    return false;
            }
        }
    }
    return true;
}

void TripleIndex::add(std::uint64_t m) {
    if (std::find(members_.begin(), members_.end(), m) != members_.end())
        throw std::invalid_argument("TripleIndex: element already present");
    const u128 wm = weight(m);
    const auto c = static_cast<std::uint32_t>(members_.size());
    for (std::uint32_t a = 0; a < c; ++a) {
        const u128 wam = combine(wm, weights_[a]);
        for (std::uint32_t b = a + 1; b < c; ++b) {
            const u128 key = combine(wam, weights_[b]);
            auto [it, fresh] = heads_.try_emplace(key, kNone);
            entries_.push_back({key, {a, b, c}, it->second});
            it->second = static_cast<std::uint32_t>(entries_.size() - 1);
        }
    }
    members_.push_back(m);
    weights_.push_back(wm);
}

void TripleIndex::remove_last() {
    if (members_.empty())
        throw std::logic_error("TripleIndex: remove_last on empty set");
    const auto c = static_cast<std::uint32_t>(members_.size() - 1);
    while (!entries_.empty() && entries_.back().slot[2] == c) {
        const Entry& e = entries_.back();
        auto it = heads_.find(e.key);
        if (e.next == kNone)
            heads_.erase(it);
        else
            it->second = e.next;
        entries_.pop_back();
    }
    members_.pop_back();
    weights_.pop_back();
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(std::uint64_t n, std::uint64_t budget, TripleKey mode, const FactorSieve& sieve)
        : n_(n), budget_(budget), index_(mode, sieve) {}

    SearchResult run() {
        descend(1);
        SearchResult r;
        r.n = n_;
        r.best_set = best_;
        r.size = best_.size();
        r.nodes_explored = nodes_;
        r.budget_hit = budget_hit_;
        r.optimal = !budget_hit_;
        return r;
    }

private:
    void descend(std::uint64_t next) {
        if (budget_hit_)
            return;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        const std::size_t have = index_.members().size();
        if (next > n_) {
            if (have > best_.size())
                best_.assign(index_.members().begin(), index_.members().end());
            return;
        }
        if (have + (n_ - next + 1) <= best_.size())
            return;
        if (index_.admits(next)) {
            index_.add(next);
            descend(next + 1);
            index_.remove_last();
        }
        descend(next + 1);
    }

    std::uint64_t n_;
    std::uint64_t budget_;
    TripleIndex index_;
    std::vector<std::uint64_t> best_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

void check_search_args(std::uint64_t n, std::uint64_t budget, const FactorSieve& sieve) {
    if (n < 1)
        throw std::invalid_argument("search: n must be positive");
    if (n > sieve.limit())
        throw std::out_of_range("search: n exceeds sieve limit");
    if (budget == 0)
        throw std::invalid_argument("search: budget must be positive");
}

} // namespace

SearchResult exact_max_3sidon(std::uint64_t n, std::uint64_t budget, const FactorSieve& sieve) {
    check_search_args(n, budget, sieve);
    return BranchAndBound(n, budget, TripleKey::Product, sieve).run();
}

SearchResult exact_max_square_product_free(std::uint64_t n, std::uint64_t budget,
                                           const FactorSieve& sieve) {
    check_search_args(n, budget, sieve);
    return BranchAndBound(n, budget, TripleKey::SquareKernel, sieve).run();
}

std::vector<std::uint64_t> greedy_3sidon(std::uint64_t n, const FactorSieve& sieve) {
    check_search_args(n, 1, sieve);
    TripleIndex index(TripleKey::Product, sieve);
    for (std::uint64_t m = 1; m <= n; ++m)
        if (index.admits(m))
            index.add(m);
    return {index.members().begin(), index.members().end()};
}

std::vector<std::uint64_t> base_construction(std::uint64_t n, const FactorSieve& sieve) {
    if (n < 2)
        throw std::invalid_argument("base_construction: n must be at least 2");
    if (n > sieve.limit())
        throw std::out_of_range("base_construction: n exceeds sieve limit");
    std::vector<std::uint64_t> out;
    for (std::uint32_t p : sieve.primes()) {
        if (p > n)
            break;
        out.push_back(p);
        if (2ull * p <= n)
            out.push_back(2ull * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace multsidon
