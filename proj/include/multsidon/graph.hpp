#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace multsidon {

// Undirected simple graph on arbitrary 64-bit vertex ids. Ids are compressed
// to dense indices in ascending id order, so index order == id order.
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Rejects loops and repeated edges with std::invalid_argument.
    explicit SimpleGraph(std::vector<std::pair<std::uint64_t, std::uint64_t>> edges,
                         std::vector<std::uint64_t> extra_vertices = {});

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::uint64_t id(std::size_t index) const { return ids_[index]; }
    std::optional<std::size_t> index_of(std::uint64_t id) const;

    // Neighbor indices, ascending.
    std::span<const std::uint32_t> neighbors(std::size_t index) const {
        return {adj_.data() + offsets_[index], adj_.data() + offsets_[index + 1]};
    }

    bool adjacent(std::size_t a, std::size_t b) const;

private:
    std::vector<std::uint64_t> ids_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adj_;
    std::size_t edge_count_ = 0;
};

// First 6-cycle in canonical order: the smallest vertex first, then DFS with
// neighbors ascending. Returned as vertex ids in cycle order.
std::optional<std::array<std::uint64_t, 6>> find_six_cycle(const SimpleGraph& g);

} // namespace multsidon
