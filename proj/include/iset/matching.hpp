#pragma once

#include <optional>
#include <vector>

namespace iset {

/// Bipartite graph with separate left/right vertex ranges, each 0-based.
/// Adjacency lists are sorted ascending; together with the fixed scan order
/// in the matching routines this makes every result deterministic.
struct BipartiteGraph {
    int left_size = 0;
    int right_size = 0;
    std::vector<std::vector<int>> adj;  // adj[u] = right neighbors of left u

    BipartiteGraph() = default;
    BipartiteGraph(int left, int right);

    /// Adds edge (left u, right v); duplicate edges are a no-op.
    /// Out-of-range endpoints throw std::invalid_argument.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    long long num_edges() const;

    /// Right-side degree sequence, derived from the adjacency lists.
    std::vector<int> right_degrees() const;

    /// The common degree when every left and right vertex has the same
    /// degree, std::nullopt otherwise.
    std::optional<int> regular_degree() const;
};

/// Result of a perfect-matching attempt.
/// When `perfect` is false and some left vertex is unmatched, hall_witness
/// is a left set S with |N(S)| < |S| (the alternating-reachable left
/// vertices from the unmatched ones). When the failure is only a side-size
/// mismatch with the left side saturated, hall_witness is empty.
struct MatchingOutcome {
    bool perfect = false;
    std::vector<int> left_match;    // right partner of each left vertex, -1 if none
    std::vector<int> hall_witness;  // ascending left indices
};

/// Maximum matching via Hopcroft-Karp, then a perfect-matching verdict.
/// Deterministic: vertices are scanned in ascending index and augmenting
/// paths follow the smallest admissible neighbor.
MatchingOutcome perfect_matching(const BipartiteGraph& g);

/// Extracts a `target`-regular spanning subgraph from a regular bipartite
/// graph with equal sides by peeling `target` successive perfect matchings.
/// After each peel the residual is asserted to be regular of degree one
/// less. Throws std::invalid_argument when the input is not regular with
/// equal sides or target is outside [0, degree]; throws std::logic_error if
/// a peel unexpectedly fails.
BipartiteGraph regular_subgraph(const BipartiteGraph& g, int target);

}  // namespace iset
