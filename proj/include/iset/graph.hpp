#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iset {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Adjacency lists are kept sorted ascending so that iteration order, and
/// everything downstream of it, is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long long num_edges() const { return num_edges_; }

    /// Adds the edge {u, v}. Throws std::invalid_argument on loops or
    /// out-of-range endpoints; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// The common degree if the graph is regular, std::nullopt otherwise.
    /// The empty graph counts as 0-regular.
    std::optional<int> regular_degree() const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    long long num_edges_ = 0;
};

/// A subset of the vertices of a graph with `universe` vertices.
/// Members are sorted ascending and duplicate-free.
struct VertexSet {
    std::vector<int> members;
    int universe = 0;

    VertexSet() = default;
    VertexSet(std::vector<int> members_in, int universe_in);

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
};

/// Builds a graph from an explicit vertex count and edge list.
/// Duplicate edges are merged; loops and out-of-range endpoints throw.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// The subgraph induced by `vs`, with vertices relabeled 0..|vs|-1 in
/// ascending order of their original indices.
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

/// Disjoint union of a and b (b's vertices shifted by a.num_vertices())
/// plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);

/// Complement graph: same vertices, exactly the missing non-loop edges.
Graph complement(const Graph& g);

/// Encodes in graph6 format (canonical: upper triangle in column order,
/// 6-bit chunks, bias 63; 1-, 4-, or 8-byte size prefix).
std::string graph6_encode(const Graph& g);

/// Decodes a graph6 string. Throws std::invalid_argument on malformed
/// input: bad characters, wrong length, or nonzero padding bits.
Graph graph6_decode(const std::string& s);

}  // namespace iset
