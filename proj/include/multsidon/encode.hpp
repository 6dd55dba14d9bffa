#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "multsidon/arith.hpp"
#include "multsidon/decompose.hpp"
#include "multsidon/graph.hpp"

namespace multsidon {

// One element a of the encoded set, drawn as the edge {u, v} with u * v = a.
struct LabeledEdge {
    Decomposition split;

    std::uint64_t label() const { return split.m; }
    std::uint64_t low() const { return split.u < split.v ? split.u : split.v; }
    std::uint64_t high() const { return split.u < split.v ? split.v : split.u; }
};

// The graph whose vertices are the integers up to n^(2/3) and the primes in
// (n^(2/3), n], with one edge per non-square-split element of the set.
class EdgeGraph {
public:
    EdgeGraph(std::uint64_t n, std::vector<LabeledEdge> edges,
              std::vector<std::uint64_t> skipped_squares, const FactorSieve& sieve);

    std::uint64_t n() const { return n_; }
    std::span<const LabeledEdge> edges() const { return edges_; }
    std::span<const std::uint64_t> skipped_squares() const { return skipped_squares_; }

    // |V(G)| = pi(n) + floor(n^(2/3)) - pi(n^(2/3)), including isolated vertices.
    std::uint64_t full_vertex_count() const { return full_vertex_count_; }
    std::size_t incident_vertex_count() const { return graph_.vertex_count(); }
    std::uint64_t isolated_vertex_count() const {
        return full_vertex_count_ - graph_.vertex_count();
    }

    const SimpleGraph& topology() const { return graph_; }

    // Label of the edge {a, b}, if present.
    std::optional<std::uint64_t> label_of(std::uint64_t a, std::uint64_t b) const;

private:
    std::uint64_t n_;
    std::vector<LabeledEdge> edges_;  // sorted by (low, high)
    std::vector<std::uint64_t> skipped_squares_;
    std::uint64_t full_vertex_count_;
    SimpleGraph graph_;
};

// Elements must be distinct and lie in [1, n]. workers > 1 splits the
// decompositions across threads; the result does not depend on it.
EdgeGraph build_graph(std::span<const std::uint64_t> elements, std::uint64_t n,
                      const FactorSieve& sieve, unsigned workers = 1);

struct Hexagon {
    std::vector<std::uint64_t> vertices;     // cycle order
    std::vector<std::uint64_t> edge_labels;  // edge_labels[i] joins vertices[i], vertices[i+1 mod 6]
};

std::optional<Hexagon> find_hexagon(const EdgeGraph& g);

// s1 s2 s3 = t1 t2 t3 read off alternating edges of a hexagon.
struct TripleSolution {
    std::array<std::uint64_t, 3> lhs{};
    std::array<std::uint64_t, 3> rhs{};
};

// Throws std::invalid_argument unless h has six distinct vertices and each
// label is the product of its edge's endpoints.
TripleSolution hexagon_to_solution(const Hexagon& h);

// "u v label" per line, endpoints ascending, lines sorted.
void write_edge_list(std::ostream& out, const EdgeGraph& g);

} // namespace multsidon
