#include "multsidon/encode.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace multsidon {

EdgeGraph::EdgeGraph(std::uint64_t n, std::vector<LabeledEdge> edges,
                     std::vector<std::uint64_t> skipped_squares, const FactorSieve& sieve)
    : n_(n), edges_(std::move(edges)), skipped_squares_(std::move(skipped_squares)) {
    std::sort(edges_.begin(), edges_.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
        return std::pair(a.low(), a.high()) < std::pair(b.low(), b.high());
    });
    std::sort(skipped_squares_.begin(), skipped_squares_.end());

    const std::uint64_t t = floor_two_thirds(n);
    full_vertex_count_ = prime_pi(n, sieve) + t - prime_pi(t, sieve);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_)
        pairs.emplace_back(e.low(), e.high());
    graph_ = SimpleGraph(std::move(pairs));
}

std::optional<std::uint64_t> EdgeGraph::label_of(std::uint64_t a, std::uint64_t b) const {
    if (a > b)
        std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [](const LabeledEdge& e, const std::pair<std::uint64_t, std::uint64_t>& key) {
                                   return std::pair(e.low(), e.high()) < key;
                               });
    if (it == edges_.end() || it->low() != a || it->high() != b)
        return std::nullopt;
    return it->label();
}

EdgeGraph build_graph(std::span<const std::uint64_t> elements, std::uint64_t n,
                      const FactorSieve& sieve, unsigned workers) {
    if (n > sieve.limit())
        throw std::invalid_argument("build_graph: n exceeds sieve limit");
    std::vector<std::uint64_t> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("build_graph: repeated element");
    for (std::uint64_t a : sorted)
        if (a < 1 || a > n)
            throw std::invalid_argument("build_graph: element " + std::to_string(a) +
                                        " outside [1, " + std::to_string(n) + "]");

    std::vector<Decomposition> splits(sorted.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            splits[i] = min_v_decompose(sorted[i], n, sieve);
    };
    workers = std::max(1u, workers);
    if (workers == 1 || sorted.size() < 1024) {
        work(0, sorted.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (sorted.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < sorted.size(); begin += chunk)
            pool.emplace_back(work, begin, std::min(sorted.size(), begin + chunk));
    }

    std::vector<LabeledEdge> edges;
    std::vector<std::uint64_t> squares;
    for (const auto& d : splits) {
        if (d.u == d.v)
            squares.push_back(d.m);
        else
            edges.push_back({d});
    }
    return EdgeGraph(n, std::move(edges), std::move(squares), sieve);
}

std::optional<Hexagon> find_hexagon(const EdgeGraph& g) {
    auto cycle = find_six_cycle(g.topology());
    if (!cycle)
        return std::nullopt;
    Hexagon h;
    h.vertices.assign(cycle->begin(), cycle->end());
    for (std::size_t i = 0; i < 6; ++i)
        h.edge_labels.push_back(*g.label_of(h.vertices[i], h.vertices[(i + 1) % 6]));
    return h;
}

TripleSolution hexagon_to_solution(const Hexagon& h) {
    if (h.vertices.size() != 6 || h.edge_labels.size() != 6)
        throw std::invalid_argument("hexagon_to_solution: a hexagon needs exactly six vertices and edges");
    std::vector<std::uint64_t> distinct = h.vertices;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
        throw std::invalid_argument("hexagon_to_solution: repeated vertex");
    for (std::size_t i = 0; i < 6; ++i) {
        if (static_cast<u128>(h.vertices[i]) * h.vertices[(i + 1) % 6] != h.edge_labels[i])
            throw std::invalid_argument("hexagon_to_solution: label is not the endpoint product");
    }
    // s1 = x1x2, t1 = x2x3, s2 = x3x4, t2 = x4x5, s3 = x5x6, t3 = x6x1
    return {{h.edge_labels[0], h.edge_labels[2], h.edge_labels[4]},
            {h.edge_labels[1], h.edge_labels[3], h.edge_labels[5]}};
}

void write_edge_list(std::ostream& out, const EdgeGraph& g) {
    for (const auto& e : g.edges())
        out << e.low() << ' ' << e.high() << ' ' << e.label() << '\n';
}

} // namespace multsidon
