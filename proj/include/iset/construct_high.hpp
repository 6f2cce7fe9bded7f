#pragma once

#include <optional>
#include <string>

#include "iset/certificate.hpp"
#include "iset/graph.hpp"

namespace iset {

/// Builds the circulant R(m, r, g): vertices 0..m-1, v adjacent to
/// v +- (g+1) .. v +- (g + floor(r/2)) mod m, plus v + m/2 when r is odd.
/// Validates existence: r in [0, m), r odd requires m even, and r > 0
/// requires 2g + r <= m - 1.
Graph build_circulant(const CirculantSpec& spec);

/// Independence bound (g+1) * ceil(m / (g + 1 + floor(r/2))) for
/// R(m, r, g); every independent set hits at most g+1 vertices per window
/// of g + 1 + floor(r/2) consecutive positions.
int circulant_alpha_bound(const CirculantSpec& spec);

/// Scaffold for the high-degree regime, n/2 <= d < n, 2 <= alpha <= n-d:
/// two sides of n-d vertices, each partitioned into alpha cliques with the
/// profile of Z(n-d, alpha) (identical labeling, smaller cliques first), a
/// perfect matching inside each clique pair, a complete bipartite join
/// between unequal clique pairs, and 2d-n isolated center vertices. Side
/// one occupies [0, n-d), side two [n-d, 2(n-d)), center [2(n-d), n).
Graph base_graph_high(int n, int d, int alpha);

std::optional<std::string> construct_high_dense_rejection(int n, int d, int alpha);
std::optional<std::string> construct_high_general_rejection(int n, int d, int alpha);
std::optional<std::string> construct_claim_lb_rejection(int n, int d);

/// Dense variant (3d >= 2n, nd even): base graph plus R(2d-n, 3d-2n) on
/// the center block and a complete join from the center to both sides.
/// Requires ceil((2d-n)/(1+floor((3d-2n)/2))) <= alpha <= n-d.
ConstructionCertificate construct_high_dense(int n, int d, int alpha);

/// General variant (n/2 <= d < n, nd even): base graph plus a complete
/// join from the center to side two and a circulant R(d, 2d-n, g) overlaid
/// on side one followed by the center, g = ceil((n-d)/alpha). Requires
/// 2*(g + floor((2d-n)/2)) <= d - 2 and
/// (g+1) * ceil(d/(g+1+floor((2d-n)/2))) <= alpha.
ConstructionCertificate construct_high_general(int n, int d, int alpha);

/// Lower-bound witness for the near-extremal claim (n/2 <= d < n, nd
/// even): the join of n-d isolated vertices with R(d, 2d-n). Independence
/// number is exactly n-d by regularity; the isolated side alone
/// contributes 2^(n-d) independent sets.
ConstructionCertificate construct_claim_lb(int n, int d);

}  // namespace iset
