#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "iset/counting.hpp"

using namespace iset;
using namespace iset::testing;

TEST_CASE("frozen counts for small graphs") {
    CHECK(brute_force_count(Graph(0)) == 1);
    CHECK(brute_force_count(Graph(3)) == 8);
    CHECK(brute_force_count(make_path(3)) == 5);
    CHECK(brute_force_count(make_cycle(4)) == 7);
    CHECK(brute_force_count(make_cycle(5)) == 11);
    CHECK(brute_force_count(make_complete(3)) == 4);
    CHECK(brute_force_count(make_petersen()) == 76);
}

TEST_CASE("frozen polynomials for small graphs") {
    CHECK(brute_force_polynomial(Graph(0)) == Polynomial{1});
    CHECK(brute_force_polynomial(make_path(3)) == Polynomial{1, 3, 1});
    CHECK(brute_force_polynomial(make_cycle(4)) == Polynomial{1, 4, 2});
    CHECK(brute_force_polynomial(Graph(3)) == Polynomial{1, 3, 3, 1});
    CHECK(brute_force_polynomial(make_petersen()) == Polynomial{1, 10, 30, 30, 5});
}

TEST_CASE("brute force enforces its vertex cap") {
    CHECK_NOTHROW(brute_force_count(Graph(kBruteForceCap)));
    CHECK_THROWS_AS(brute_force_count(Graph(kBruteForceCap + 1)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_polynomial(Graph(kBruteForceCap + 1)), std::invalid_argument);
}

TEST_CASE("kernel matches the brute-force oracle") {
    CHECK(count_independent_sets(Graph(0)) == 1);
    CHECK(count_independent_sets(make_petersen()) == 76);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 17;
        double p = 0.1 + 0.2 * (trial % 5);
        Graph g = random_graph(rng, n, p);
        CHECK(count_independent_sets(g) == brute_force_count(g));
    }
}

TEST_CASE("polynomial kernel matches the brute-force oracle") {
    CHECK(independence_polynomial(Graph(0)) == Polynomial{1});
    CHECK(independence_polynomial(make_cycle(5)) == Polynomial{1, 5, 5});

    std::mt19937 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        int n = trial % 15;
        double p = 0.15 + 0.2 * (trial % 4);
        Graph g = random_graph(rng, n, p);
        CHECK(independence_polynomial(g) == brute_force_polynomial(g));
    }
}

TEST_CASE("polynomial structural invariants") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 13;
        Graph g = random_graph(rng, n, 0.35);
        Polynomial p = independence_polynomial(g);
        CHECK(p[0] == 1);
        if (p.size() > 1) CHECK(p[1] == n);
        long pairs_minus_edges = static_cast<long>(n) * (n - 1) / 2 - static_cast<long>(g.num_edges());
        if (p.size() > 2) CHECK(p[2] == pairs_minus_edges);
        BigCount at_one = 0;
        for (const BigCount& c : p) at_one += c;
        CHECK(at_one == count_independent_sets(g));
        CHECK(static_cast<int>(p.size()) - 1 == independence_number(g));
    }
}

TEST_CASE("deletion identity") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 11;
        Graph g = random_graph(rng, n, 0.3);
        int v = trial % n;
        std::vector<int> rest, closed_out;
        for (int u = 0; u < n; ++u) {
            if (u != v) rest.push_back(u);
            if (u != v && !g.has_edge(u, v)) closed_out.push_back(u);
        }
        BigCount without_v = count_independent_sets(induced_subgraph(g, VertexSet(rest, n)));
        BigCount without_closed =
            count_independent_sets(induced_subgraph(g, VertexSet(closed_out, n)));
        CHECK(count_independent_sets(g) == without_v + without_closed);
    }
}

TEST_CASE("counts multiply over disjoint components") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = random_graph(rng, 3 + trial % 7, 0.4);
        Graph b = random_graph(rng, 2 + trial % 6, 0.4);
        Graph both(a.num_vertices() + b.num_vertices());
        for (auto [u, v] : a.edges()) both.add_edge(u, v);
        for (auto [u, v] : b.edges()) both.add_edge(a.num_vertices() + u, a.num_vertices() + v);
        CHECK(count_independent_sets(both) ==
              count_independent_sets(a) * count_independent_sets(b));
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(Graph(0)) == 0);
    CHECK(independence_number(Graph(6)) == 6);
    CHECK(independence_number(make_complete(7)) == 1);
    CHECK(independence_number(make_cycle(5)) == 2);
    CHECK(independence_number(make_cycle(7)) == 3);
    CHECK(independence_number(make_petersen()) == 4);
    CHECK(independence_number(make_complete_bipartite(3, 5)) == 5);

    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        int n = trial % 13;
        Graph g = random_graph(rng, n, 0.3);
        Polynomial p = brute_force_polynomial(g);
        CHECK(independence_number(g) == static_cast<int>(p.size()) - 1);
    }
}

TEST_CASE("memo budget never changes results") {
    Graph g = make_petersen();
    for (std::size_t budget : {std::size_t{0}, std::size_t{200}, std::size_t{1} << 14}) {
        CountOptions opts;
        opts.memo_budget_bytes = budget;
        CHECK(count_independent_sets(g, opts) == 76);
        CHECK(independence_polynomial(g, opts) == Polynomial{1, 10, 30, 30, 5});
    }

    std::mt19937 rng(61);
    Graph r = random_graph(rng, 18, 0.25);
    CountOptions tight;
    tight.memo_budget_bytes = 500;
    CHECK(count_independent_sets(r, tight) == count_independent_sets(r));
}

TEST_CASE("complete bipartite counts follow the closed form") {
    for (int d = 1; d <= 8; ++d) {
        BigCount expected = (BigCount(1) << (d + 1)) - 1;
        CHECK(count_independent_sets(make_complete_bipartite(d, d)) == expected);
    }
}
