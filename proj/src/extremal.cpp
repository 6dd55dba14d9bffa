#include "multsidon/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>


namespace multsidon {

bool is_c6_free(const EdgeGraph& g) { return !find_six_cycle(g.topology()); }

bool is_c6_free(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
    return !find_six_cycle(SimpleGraph({edges.begin(), edges.end()}));
}

namespace {

// Decides whether some C6-free graph reaches `target` edges, choosing edges
// from `candidates` on top of `fixed`, with an optional degree window.
// Adjacency is a bitmask per vertex, so order is limited to 32.
class EdgeSearch {
public:
    EdgeSearch(std::size_t order, EdgeList candidates, const EdgeList& fixed, std::size_t target)
        : order_(order), adj_(order, 0), degree_(order, 0), candidates_(std::move(candidates)),
          target_(target), max_degree_(order) {
        if (order > 32)
            throw std::invalid_argument("EdgeSearch: order above 32");
        for (const auto& [a, b] : fixed)
            toggle(a, b);
    }

    void degree_window(std::size_t lo, std::size_t hi) {
        min_degree_ = lo;
        max_degree_ = hi;
    }

    bool run() {
        for (std::size_t v = 0; v < order_; ++v)
            if (degree_[v] > max_degree_)
                return false;
        return descend(0);
    }

    EdgeList edges() const {
        EdgeList out;
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = a + 1; b < order_; ++b)
                if (adj_[a] >> b & 1u)
                    out.emplace_back(a, b);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void toggle(std::size_t a, std::size_t b) {
        const bool on = !(adj_[a] >> b & 1u);
        adj_[a] ^= 1u << b;
        adj_[b] ^= 1u << a;
        const std::size_t delta = on ? 1 : static_cast<std::size_t>(-1);
        degree_[a] += delta;
        degree_[b] += delta;
        edges_ += delta;
    }

    // ends[s]: vertices joined to s by a simple path with exactly five edges
    void five_step_ends(std::vector<std::uint32_t>& ends) const {
        ends.assign(order_, 0);
        for (std::size_t s = 0; s < order_; ++s)
            walk(s, s, 1u << s, 0, ends[s]);
    }

    void walk(std::size_t s, std::size_t at, std::uint32_t seen, unsigned depth, std::uint32_t& out) const {
        const std::uint32_t next = adj_[at] & ~seen;
        if (depth == 4) {
            out |= next;
            return;
        }
        for (std::uint32_t rest = next; rest != 0; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            walk(s, v, seen | (1u << v), depth + 1, out);
        }
    }

    bool descend(std::size_t pos) {
        ++nodes_;
        if (edges_ >= target_)
            return true;

        // forward check: a candidate that already closes a 6-cycle never becomes addable again
        std::vector<std::uint32_t> ends;
        five_step_ends(ends);
        std::vector<std::size_t> open(order_, 0);
        std::size_t addable = 0;
        std::size_t first = candidates_.size();
        for (std::size_t i = pos; i < candidates_.size(); ++i) {
            const auto [a, b] = candidates_[i];
            if (degree_[a] >= max_degree_ || degree_[b] >= max_degree_ || (ends[a] >> b & 1u))
                continue;
            ++open[a];
            ++open[b];
            ++addable;
            first = std::min(first, i);
        }
        if (edges_ + addable < target_)
            return false;
        std::size_t room = 0;
        for (std::size_t v = 0; v < order_; ++v) {
            if (degree_[v] + open[v] < min_degree_)
                return false;
            room += std::min(open[v], max_degree_ - degree_[v]);
        }
        if (edges_ + room / 2 < target_)
            return false;

        const auto [a, b] = candidates_[first];
        toggle(a, b);
        if (descend(first + 1))
            return true;
        toggle(a, b);
        return descend(first + 1);
    }

    std::size_t order_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::size_t> degree_;
    EdgeList candidates_;
    std::size_t target_;
    std::size_t min_degree_ = 0;
    std::size_t max_degree_;
    std::size_t edges_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExtremalResult brute_force_ex_c6(unsigned n) {
    if (n > kMaxGeneralOrder)
        throw BudgetExceeded("brute_force_ex_c6: order " + std::to_string(n) + " above cap " +
                             std::to_string(kMaxGeneralOrder));
    ExtremalResult best;
    if (n == 0)
        return best;

    // ex(v) for v < 6 is the complete graph; larger orders build on the previous value
    for (unsigned v = 1; v <= n; ++v) {
        if (v < 6) {
            best.witness.clear();
            for (unsigned a = 0; a < v; ++a)
                for (unsigned b = a + 1; b < v; ++b)
                    best.witness.emplace_back(a, b);
            best.max_edges = best.witness.size();
            continue;
        }
        const std::size_t prev = best.max_edges;
        // each edge survives in v - 2 of the v one-vertex deletions
        const std::size_t upper = std::min<std::size_t>(v * (v - 1) / 2, v * prev / (v - 2));
        bool settled = false;
        for (std::size_t target = upper; target > prev && !settled; --target) {
            // deleting any vertex leaves at most `prev` edges
            const std::size_t min_deg = target - prev;
            const std::size_t lowest_max = (2 * target + v - 1) / v;
            for (std::size_t max_deg = v - 1; max_deg >= std::max<std::size_t>(lowest_max, 1); --max_deg) {
                // vertex 0 has maximum degree and is joined to 1..max_deg
                EdgeList fixed, candidates;
                for (unsigned b = 1; b <= max_deg; ++b)
                    fixed.emplace_back(0, b);
                for (unsigned a = 1; a < v; ++a)
                    for (unsigned b = a + 1; b < v; ++b)
                        candidates.emplace_back(a, b);
                if (max_deg < min_deg)
                    break;
                EdgeSearch search(v, std::move(candidates), fixed, target);
                search.degree_window(min_deg, max_deg);
                const bool ok = search.run();
                best.nodes_explored += search.nodes();
                if (ok) {
                    best.max_edges = target;
                    best.witness = search.edges();
                    settled = true;
                    break;
                }
                if (max_deg == 1)
                    break;
            }
        }
        if (!settled) {
            // ex(v) = ex(v - 1): keep the previous witness plus an isolated vertex
            best.max_edges = prev;
        }
    }
    return best;
}

ExtremalResult brute_force_ex_c6_bipartite(unsigned u, unsigned v) {
    if (u > kMaxBipartiteClass || v > kMaxBipartiteClass)
        throw BudgetExceeded("brute_force_ex_c6_bipartite: class size above cap " +
                             std::to_string(kMaxBipartiteClass));
    ExtremalResult best;
    if (u == 0 || v == 0)
        return best;

    EdgeList candidates;
    for (unsigned a = 0; a < u; ++a)
        for (unsigned b = 0; b < v; ++b)
            candidates.emplace_back(a, u + b);

    for (std::size_t target = candidates.size(); target > 0; --target) {
        EdgeSearch search(u + v, candidates, {}, target);
        const bool ok = search.run();
        best.nodes_explored += search.nodes();
        if (ok) {
            best.max_edges = target;
            best.witness = search.edges();
            return best;
        }
    }
    return best;
}

BalancedBound bound_furedi_balanced(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("bound_furedi_balanced: n must be positive");
    const double p = std::pow(static_cast<double>(n), 4.0 / 3.0);
    return {0.6272 * p, p};
}

double bound_furedi_unbalanced(std::uint64_t u, std::uint64_t v) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("bound_furedi_unbalanced: class sizes must be positive");
    const double uv = static_cast<double>(u) * static_cast<double>(v);
    return std::cbrt(2.0) * std::pow(uv, 2.0 / 3.0) + 16.0 * (static_cast<double>(u) + static_cast<double>(v));
}

double bound_gyori(std::uint64_t u, std::uint64_t v) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("bound_gyori: class sizes must be positive");
    if (v > u)
        throw std::invalid_argument("bound_gyori: requires v <= u");
    const double dv = static_cast<double>(v);
    return 2.0 * static_cast<double>(u) + dv * dv / 2.0;
}

} // namespace multsidon
