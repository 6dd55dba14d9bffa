#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multsidon/encode.hpp"

namespace multsidon {

using EdgeList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

bool is_c6_free(const EdgeGraph& g);
bool is_c6_free(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExtremalResult {
    std::size_t max_edges = 0;
    EdgeList witness;  // C6-free, max_edges edges
    std::uint64_t nodes_explored = 0;
};

inline constexpr unsigned kMaxGeneralOrder = 9;
inline constexpr unsigned kMaxBipartiteClass = 5;

// Exact ex(n, C6) for n <= 9; throws BudgetExceeded above that.
ExtremalResult brute_force_ex_c6(unsigned n);

// Exact ex(u, v, C6): classes {0..u-1} and {u..u+v-1}; u, v <= 5.
ExtremalResult brute_force_ex_c6_bipartite(unsigned u, unsigned v);

struct BalancedBound {
    double strong = 0;  // 0.6272 n^(4/3)
    double weak = 0;    // n^(4/3)
};

BalancedBound bound_furedi_balanced(std::uint64_t n);

// 2^(1/3) (uv)^(2/3) + 16(u + v)
double bound_furedi_unbalanced(std::uint64_t u, std::uint64_t v);

// 2u + v^2/2, requires v <= u
double bound_gyori(std::uint64_t u, std::uint64_t v);

} // namespace multsidon
