#include <doctest.h>

#include "multsidon/cli.hpp"
#include "multsidon/encode.hpp"
#include "multsidon/sidonkit.hpp"
#include "oracles.hpp"

#include <sstream>
#include <stdexcept>

using namespace multsidon;

namespace {

using Edges = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Edges edge_pairs(const EdgeGraph& g) {
    Edges out;
    for (const auto& e : g.edges()) out.emplace_back(e.low(), e.high());
    return out;
}

} // namespace

TEST_CASE("prime hexagon encoding") {
    const auto s = build_sieve(150);
    const std::vector<std::uint64_t> a{6, 15, 35, 77, 143, 26};
    const auto g = build_graph(a, 150, s);
    CHECK(edge_pairs(g) == Edges{{2, 3}, {2, 13}, {3, 5}, {5, 7}, {7, 11}, {11, 13}});
    CHECK(g.skipped_squares().empty());
    CHECK(g.incident_vertex_count() == 6);
    // pi(150) + 28 - pi(28) = 35 + 28 - 9
    CHECK(g.full_vertex_count() == 54);
    CHECK(g.isolated_vertex_count() == 48);
    CHECK(g.label_of(13, 2) == 26);
    CHECK_FALSE(g.label_of(2, 5).has_value());

    const auto h = find_hexagon(g);
    REQUIRE(h.has_value());
    CHECK(h->vertices == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
    CHECK(h->edge_labels == std::vector<std::uint64_t>{6, 15, 35, 77, 143, 26});

    const auto sol = hexagon_to_solution(*h);
    CHECK(sol.lhs == std::array<std::uint64_t, 3>{6, 35, 143});
    CHECK(sol.rhs == std::array<std::uint64_t, 3>{15, 77, 26});
    CHECK(sol.lhs[0] * sol.lhs[1] * sol.lhs[2] == 30030);
    CHECK(sol.rhs[0] * sol.rhs[1] * sol.rhs[2] == 30030);
}

TEST_CASE("single element graphs") {
    const auto s = build_sieve(100);
    const std::vector<std::uint64_t> sq{36};
    const auto g = build_graph(sq, 100, s);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].low() == 4);
    CHECK(g.edges()[0].high() == 9);
    CHECK(g.edges()[0].label() == 36);

    const std::vector<std::uint64_t> p{97};
    const auto gp = build_graph(p, 100, s);
    REQUIRE(gp.edges().size() == 1);
    CHECK(gp.edges()[0].low() == 1);
    CHECK(gp.edges()[0].high() == 97);
    CHECK(gp.edges()[0].split.split == SplitCase::LargePrime);
}

TEST_CASE("squares whose split is u == v are set aside") {
    const auto s = build_sieve(100);
    // 1 = 1*1 and 4 = 2*2 have no other valid split
    const std::vector<std::uint64_t> a{1, 4, 6};
    const auto g = build_graph(a, 100, s);
    CHECK(g.skipped_squares().size() == 2);
    CHECK(g.edges().size() == 1);
}

TEST_CASE("build_graph input checks") {
    const auto s = build_sieve(100);
    CHECK_THROWS_AS(build_graph(std::vector<std::uint64_t>{5, 5}, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(std::vector<std::uint64_t>{0}, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(std::vector<std::uint64_t>{101}, 100, s), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(std::vector<std::uint64_t>{5}, 200, s), std::invalid_argument);
}

TEST_CASE("graphs without hexagons") {
    const SimpleGraph path({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    CHECK_FALSE(find_six_cycle(path).has_value());
    const SimpleGraph tri({{1, 2}, {2, 3}, {1, 3}, {10, 11}});
    CHECK_FALSE(find_six_cycle(tri).has_value());
    const SimpleGraph c6({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    const auto c = find_six_cycle(c6);
    REQUIRE(c.has_value());
    CHECK(*c == std::array<std::uint64_t, 6>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("SimpleGraph rejects loops and repeated edges") {
    CHECK_THROWS_AS(SimpleGraph({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph({{1, 2}, {2, 1}}), std::invalid_argument);
    const SimpleGraph g({{5, 9}}, {2});
    CHECK(g.vertex_count() == 3);
    CHECK(g.id(0) == 2);
    CHECK(g.index_of(9) == 2);
    CHECK_FALSE(g.index_of(7).has_value());
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("six-cycle search matches brute force on small random graphs") {
    std::uint64_t state = 12345;
    auto next = [&] { state = state * 6364136223846793005ULL + 1442695040888963407ULL; return state >> 33; };
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned order = 6 + next() % 3;
        const unsigned percent = 15 + next() % 40;
        Edges edges;
        for (unsigned a = 0; a < order; ++a)
            for (unsigned b = a + 1; b < order; ++b)
                if (next() % 100 < percent) edges.emplace_back(a, b);
        const SimpleGraph g(edges);
        const auto c = find_six_cycle(g);
        CHECK(c.has_value() == oracle::has_c6(order, edges));
        if (c) {
            for (int i = 0; i < 6; ++i)
                CHECK(g.adjacent(*g.index_of((*c)[i]), *g.index_of((*c)[(i + 1) % 6])));
        }
    }
}

TEST_CASE("hexagon on 1..6") {
    Hexagon h{{1, 2, 3, 4, 5, 6}, {2, 6, 12, 20, 30, 6}};
    const auto sol = hexagon_to_solution(h);
    CHECK(sol.lhs[0] * sol.lhs[1] * sol.lhs[2] == 720);
    CHECK(sol.rhs[0] * sol.rhs[1] * sol.rhs[2] == 720);
}

TEST_CASE("hexagon_to_solution preconditions") {
    CHECK_THROWS_AS(hexagon_to_solution(Hexagon{{1, 2, 3, 4, 5}, {2, 6, 12, 20, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(hexagon_to_solution(Hexagon{{1, 2, 3, 1, 5, 6}, {2, 6, 3, 5, 30, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(hexagon_to_solution(Hexagon{{1, 2, 3, 4, 5, 6}, {2, 6, 12, 20, 31, 6}}), std::invalid_argument);
}

TEST_CASE("worker count does not change the graph") {
    const std::uint64_t n = 5000;
    const auto s = build_sieve(n);
    const auto a = random_subset(n, 3000, 7);
    const auto one = build_graph(a, n, s, 1);
    const auto four = build_graph(a, n, s, 4);
    CHECK(edge_pairs(one) == edge_pairs(four));
    std::ostringstream x, y;
    write_edge_list(x, one);
    write_edge_list(y, four);
    CHECK(x.str() == y.str());
    CHECK(one.skipped_squares().size() == four.skipped_squares().size());
}

TEST_CASE("edge list export") {
    const auto s = build_sieve(100);
    const auto g = build_graph(std::vector<std::uint64_t>{36, 97}, 100, s);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "1 97 97\n4 9 36\n");
}

TEST_CASE("hexagons found in random sets are real violations") {
    const std::uint64_t n = 400;
    const auto s = build_sieve(n);
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto a = random_subset(n, 120, seed);
        const auto g = build_graph(a, n, s);
        const auto h = find_hexagon(g);
        if (!h) {
            CHECK(oracle::is_3sidon(a) == !verify_k_sidon(a, 3, s).has_value());
            continue;
        }
        ++found;
        const auto sol = hexagon_to_solution(*h);
        std::vector<std::uint64_t> six(sol.lhs.begin(), sol.lhs.end());
        six.insert(six.end(), sol.rhs.begin(), sol.rhs.end());
        CHECK(oracle::smallest_triple_violation(six).has_value());
        CHECK_FALSE(oracle::is_3sidon(a));
    }
    CHECK(found > 0);
}
