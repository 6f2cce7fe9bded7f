#pragma once

#include <random>
#include <utility>
#include <vector>

#include "iset/graph.hpp"
#include "iset/matching.hpp"

namespace iset::testing {

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline Graph make_petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(v, v + 5);                // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Random r-regular bipartite graph with equal sides, built by stacking r
/// random permutations that are rejection-sampled to stay edge-disjoint.
inline BipartiteGraph random_regular_bipartite(std::mt19937& rng, int side, int r) {
    BipartiteGraph g(side, side);
    std::vector<int> perm(side);
    for (int round = 0; round < r; ++round) {
        while (true) {
            for (int i = 0; i < side; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            bool fresh = true;
            for (int i = 0; i < side && fresh; ++i)
                if (g.has_edge(i, perm[i])) fresh = false;
            if (fresh) break;
        }
        for (int i = 0; i < side; ++i) g.add_edge(i, perm[i]);
    }
    return g;
}

inline VertexSet full_set(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return VertexSet(v, n);
}

}  // namespace iset::testing
