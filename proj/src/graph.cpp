#include "multsidon/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace multsidon {

SimpleGraph::SimpleGraph(std::vector<std::pair<std::uint64_t, std::uint64_t>> edges,
                         std::vector<std::uint64_t> extra_vertices) {
    ids_ = std::move(extra_vertices);
    ids_.reserve(ids_.size() + 2 * edges.size());
    for (auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("SimpleGraph: loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        ids_.push_back(a);
        ids_.push_back(b);
    }
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());

    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("SimpleGraph: parallel edge");
    edge_count_ = edges.size();

    std::vector<std::size_t> degree(ids_.size(), 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(2 * edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = static_cast<std::uint32_t>(*index_of(a));
        auto ib = static_cast<std::uint32_t>(*index_of(b));
        arcs.emplace_back(ia, ib);
        arcs.emplace_back(ib, ia);
    }
    std::sort(arcs.begin(), arcs.end());
    offsets_.assign(ids_.size() + 1, 0);
    for (const auto& arc : arcs)
        ++offsets_[arc.first + 1];
    for (std::size_t i = 0; i < ids_.size(); ++i)
        offsets_[i + 1] += offsets_[i];
    adj_.reserve(arcs.size());
    for (const auto& arc : arcs)
        adj_.push_back(arc.second);
}

std::optional<std::size_t> SimpleGraph::index_of(std::uint64_t id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(b));
}

namespace {

// Cycles are rooted at their smallest vertex `root`; only vertices above the
// root are visited. near1/near2 mark vertices within 1 / 2 steps of root
// (through vertices above root), so the last two DFS levels prune early.
class SixCycleSearch {
public:
    explicit SixCycleSearch(const SimpleGraph& g)
        : g_(g), near1_(g.vertex_count(), 0), near2_(g.vertex_count(), 0),
          on_path_(g.vertex_count(), 0) {}

    std::optional<std::array<std::uint64_t, 6>> run() {
        for (std::size_t root = 0; root < g_.vertex_count(); ++root) {
            if (g_.neighbors(root).size() < 2)
                continue;
            if (search_from(root)) {
                std::array<std::uint64_t, 6> out{};
                for (std::size_t i = 0; i < 6; ++i)
                    out[i] = g_.id(path_[i]);
                return out;
            }
        }
        return std::nullopt;
    }

private:
    bool search_from(std::size_t root) {
        root_ = static_cast<std::uint32_t>(root);
        std::vector<std::uint32_t> touched;
        for (std::uint32_t a : g_.neighbors(root)) {
            if (a <= root_)
                continue;
            near1_[a] = 1;
            touched.push_back(a);
        }
        std::vector<std::uint32_t> touched2;
        for (std::uint32_t a : touched)
            for (std::uint32_t b : g_.neighbors(a))
                if (b > root_ && !near2_[b]) {
                    near2_[b] = 1;
                    touched2.push_back(b);
                }

        path_[0] = root_;
        on_path_[root_] = 1;
        bool found = extend(1);
        on_path_[root_] = 0;

        for (std::uint32_t a : touched)
            near1_[a] = 0;
        for (std::uint32_t b : touched2)
            near2_[b] = 0;
        return found;
    }

    // path_[0..depth) is fixed; choose path_[depth]
    bool extend(std::size_t depth) {
        const std::uint32_t last = path_[depth - 1];
        for (std::uint32_t next : g_.neighbors(last)) {
            if (next <= root_ || on_path_[next])
                continue;
            // the 6th vertex must close back to root; the 5th must be one step from such a vertex
            if (depth == 5 && !near1_[next])
                continue;
            if (depth == 4 && !near2_[next])
                continue;
            // orientation: the 2nd vertex is smaller than the 6th
            if (depth == 5 && next < path_[1])
                continue;
            path_[depth] = next;
            if (depth == 5)
                return true;
            on_path_[next] = 1;
            bool found = extend(depth + 1);
            on_path_[next] = 0;
            if (found)
                return true;
        }
        return false;
    }

    const SimpleGraph& g_;
    std::vector<std::uint8_t> near1_;
    std::vector<std::uint8_t> near2_;
    std::vector<std::uint8_t> on_path_;
    std::array<std::uint32_t, 6> path_{};
    std::uint32_t root_ = 0;
};

} // namespace

std::optional<std::array<std::uint64_t, 6>> find_six_cycle(const SimpleGraph& g) {
    return SixCycleSearch(g).run();
}

} // namespace multsidon
