#pragma once

#include <optional>
#include <string>

#include "iset/certificate.hpp"
#include "iset/graph.hpp"

namespace iset {

/// Inclusive degree interval; empty when min_degree > max_degree.
struct DegreeRange {
    int min_degree = 0;
    int max_degree = -1;

    bool contains(int d) const { return d >= min_degree && d <= max_degree; }
};

/// Selects the even low-degree construction case from the clique profile of
/// Z(n/2, alpha). Requires n even, 2 <= alpha <= n/2.
CaseTag classify_case(int n, int alpha);

/// Case-independent degree range shared by all five even cases:
/// floor(n/2alpha) + ceil(n/2alpha) <= d <= n/2 + floor(n/2alpha) - 1.
DegreeRange degree_range_low(int n, int alpha);

/// Exact per-case degree range (a superset of degree_range_low; the
/// divisible case admits one extra low degree, other cases vary at the
/// bottom end).
DegreeRange degree_range_low_case(int n, int alpha);

/// Degree range of the odd-order construction: even d with
/// 2*(floor(m/2alpha) + ceil(m/2alpha)) <= d <= m/2 + floor(m/2alpha) - 1
/// where m = n - 1. Requires n odd, 2 <= alpha <= (n-1)/2. Only even d in
/// the interval are constructible.
DegreeRange degree_range_odd(int n, int alpha);

/// The two-sided scaffold on n vertices (n even): each side partitioned
/// into alpha cliques matching the profile of Z(n/2, alpha) (larger cliques
/// first on one side, last on the other), plus a complete bipartite join
/// between the i-th clique of each side. Side one occupies vertices
/// [0, n/2), side two [n/2, n).
Graph base_graph_low(int n, int alpha);

/// Reason construct_even would reject these parameters, or nullopt when
/// they are valid.
std::optional<std::string> construct_even_rejection(int n, int d, int alpha);

/// Reason construct_odd would reject these parameters, or nullopt.
std::optional<std::string> construct_odd_rejection(int n, int d, int alpha);

/// Builds a d-regular graph on n vertices (n even) with independence
/// number exactly alpha and at least i(Z(n/2, alpha)) independent sets,
/// together with its verification certificate. Throws
/// std::invalid_argument outside the per-case degree range.
ConstructionCertificate construct_even(int n, int d, int alpha);

/// Odd-order variant: builds the even graph on n-1 vertices, removes d/2
/// disjoint cross matching edges whose endpoints cover the first clique
/// pair, and adds an apex vertex adjacent to all their endpoints. Requires
/// n odd and d even in degree_range_odd.
ConstructionCertificate construct_odd(int n, int d, int alpha);

}  // namespace iset
