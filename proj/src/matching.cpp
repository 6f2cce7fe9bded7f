#include "iset/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace iset {

BipartiteGraph::BipartiteGraph(int left, int right) : left_size(left), right_size(right) {
    if (left < 0 || right < 0) throw std::invalid_argument("bipartite side sizes must be nonnegative");
    adj.resize(static_cast<size_t>(left));
}

void BipartiteGraph::add_edge(int u, int v) {
    if (u < 0 || u >= left_size)
        throw std::invalid_argument("left vertex " + std::to_string(u) + " out of range [0, " +
                                    std::to_string(left_size) + ")");
    if (v < 0 || v >= right_size)
        throw std::invalid_argument("right vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(right_size) + ")");
    auto& au = adj[static_cast<size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
}

bool BipartiteGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= left_size || v < 0 || v >= right_size) return false;
    const auto& au = adj[static_cast<size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

long long BipartiteGraph::num_edges() const {
    long long total = 0;
    for (const auto& a : adj) total += static_cast<long long>(a.size());
    return total;
}

std::vector<int> BipartiteGraph::right_degrees() const {
    std::vector<int> deg(static_cast<size_t>(right_size), 0);
    for (const auto& a : adj)
        for (int v : a) ++deg[static_cast<size_t>(v)];
    return deg;
}

std::optional<int> BipartiteGraph::regular_degree() const {
    if (left_size == 0 && right_size == 0) return 0;
    int d = left_size > 0 ? static_cast<int>(adj[0].size()) : 0;
    for (const auto& a : adj)
        if (static_cast<int>(a.size()) != d) return std::nullopt;
    for (int rd : right_degrees())
        if (rd != d) return std::nullopt;
    return d;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp state; all scans ascending for determinism.
struct HopcroftKarp {
    const BipartiteGraph& g;
    std::vector<int> left_match, right_match, dist;

    explicit HopcroftKarp(const BipartiteGraph& graph)
        : g(graph),
          left_match(static_cast<size_t>(graph.left_size), -1),
          right_match(static_cast<size_t>(graph.right_size), -1),
          dist(static_cast<size_t>(graph.left_size), kInf) {}

    bool bfs() {
        std::queue<int> q;
        for (int u = 0; u < g.left_size; ++u) {
            if (left_match[static_cast<size_t>(u)] == -1) {
                dist[static_cast<size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<size_t>(u)] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[static_cast<size_t>(u)]) {
                int w = right_match[static_cast<size_t>(v)];
                if (w == -1) {
                    found = true;
                } else if (dist[static_cast<size_t>(w)] == kInf) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : g.adj[static_cast<size_t>(u)]) {
            int w = right_match[static_cast<size_t>(v)];
            if (w == -1 || (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1 && dfs(w))) {
                left_match[static_cast<size_t>(u)] = v;
                right_match[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<size_t>(u)] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (int u = 0; u < g.left_size; ++u)
                if (left_match[static_cast<size_t>(u)] == -1) dfs(u);
    }
};

}  // namespace

MatchingOutcome perfect_matching(const BipartiteGraph& g) {
    HopcroftKarp hk(g);
    hk.run();
    MatchingOutcome out;
    out.left_match = hk.left_match;
    bool left_saturated = true;
    for (int u = 0; u < g.left_size; ++u)
        if (out.left_match[static_cast<size_t>(u)] == -1) left_saturated = false;
    out.perfect = left_saturated && g.left_size == g.right_size;
    if (!left_saturated) {
        // Alternating reachability from unmatched left vertices: free edge to
        // the right, matching edge back to the left.
        std::vector<char> seen_left(static_cast<size_t>(g.left_size), 0);
        std::vector<char> seen_right(static_cast<size_t>(g.right_size), 0);
        std::queue<int> q;
        for (int u = 0; u < g.left_size; ++u)
            if (out.left_match[static_cast<size_t>(u)] == -1) {
                seen_left[static_cast<size_t>(u)] = 1;
                q.push(u);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[static_cast<size_t>(u)]) {
                if (seen_right[static_cast<size_t>(v)]) continue;
                seen_right[static_cast<size_t>(v)] = 1;
                int w = hk.right_match[static_cast<size_t>(v)];
                if (w != -1 && !seen_left[static_cast<size_t>(w)]) {
                    seen_left[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        for (int u = 0; u < g.left_size; ++u)
            if (seen_left[static_cast<size_t>(u)]) out.hall_witness.push_back(u);
    }
    return out;
}

BipartiteGraph regular_subgraph(const BipartiteGraph& g, int target) {
    if (g.left_size != g.right_size)
        throw std::invalid_argument("regular subgraph extraction needs equal sides, got " +
                                    std::to_string(g.left_size) + " and " + std::to_string(g.right_size));
    auto degree = g.regular_degree();
    if (!degree) throw std::invalid_argument("regular subgraph extraction needs a regular input");
    if (target < 0 || target > *degree)
        throw std::invalid_argument("target degree " + std::to_string(target) + " outside [0, " +
                                    std::to_string(*degree) + "]");
    BipartiteGraph residual = g;
    BipartiteGraph result(g.left_size, g.right_size);
    for (int step = 0; step < target; ++step) {
        MatchingOutcome m = perfect_matching(residual);
        if (!m.perfect)
            throw std::logic_error("matching peel " + std::to_string(step + 1) +
                                   " failed on a regular bipartite graph");
        for (int u = 0; u < residual.left_size; ++u) {
            int v = m.left_match[static_cast<size_t>(u)];
            result.add_edge(u, v);
            auto& au = residual.adj[static_cast<size_t>(u)];
            au.erase(std::lower_bound(au.begin(), au.end(), v));
        }
        auto residual_degree = residual.regular_degree();
        if (!residual_degree || *residual_degree != *degree - step - 1)
            throw std::logic_error("residual lost regularity after peel " + std::to_string(step + 1));
    }
    return result;
}

}  // namespace iset
