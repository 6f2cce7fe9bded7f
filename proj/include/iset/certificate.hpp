#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iset/graph.hpp"

namespace iset {

/// Construction family a certificate belongs to. The first five are the
/// even low-degree cases, selected by the clique-profile shape.
enum class CaseTag {
    divisible,             // alpha divides n/2
    equal_counts,          // equally many small and large cliques
    big_majority,          // larger cliques form the majority
    small_majority_gap2,   // smaller cliques lead by at least two
    small_majority_gap1,   // smaller cliques lead by exactly one
    odd_apex,              // odd order: even construction plus an apex vertex
    high_dense,            // high degree, dense filler on the center block
    high_general,          // high degree, circulant overlay across one side
    claim_join,            // independent set joined to a circulant
};

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& s);

/// Parameters of a circulant graph R(m, r, g): m vertices, degree r,
/// offsets g+1 .. g+floor(r/2) in both directions, plus the antipodal
/// offset m/2 when r is odd (which forces m even). Exists iff r = 0 or
/// 2g + r <= m - 1.
struct CirculantSpec {
    int m = 0;
    int r = 0;
    int g = 0;
};

/// Everything needed to re-verify a construction without trusting the
/// construction code: the graph, the claimed parameters, a clique cover
/// bounding the independence number from above, and a vertex set whose
/// induced subgraph is the target clique profile (bounding it from below
/// and carrying the count lower bound).
struct ConstructionCertificate {
    Graph graph;
    CaseTag tag = CaseTag::divisible;
    int n = 0;
    int d = 0;
    int alpha = 0;

    // Target profile: the witness must induce Z(zykov_n, zykov_alpha).
    int zykov_n = 0;
    int zykov_alpha = 0;

    // Low/odd: partitions all vertices. High: partitions side_x u side_y.
    // Claim: empty (regularity alone caps the independence number).
    std::vector<VertexSet> clique_cover;

    VertexSet zykov_witness;

    // Construction layout; side_w may be empty.
    std::vector<int> side_x;
    std::vector<int> side_y;
    std::vector<int> side_w;

    // Circulant overlay, when the construction uses one, and the global
    // vertex indices v_0 .. v_{m-1} it is laid out on.
    std::optional<CirculantSpec> filler;
    std::vector<int> filler_order;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct CertificateReport {
    std::vector<CheckResult> checks;

    /// True when every non-skipped check passed.
    bool all_passed() const;

    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    /// Exact independence number is checked only up to this many vertices.
    int alpha_cap = 34;
    /// Exact set counting is compared only up to this many vertices.
    int count_cap = 30;
};

/// Regime-aware re-verification of a certificate:
///  - the graph is d-regular on n vertices
///  - the clique cover is a partition into alpha cliques of the region the
///    regime promises (all vertices, or the two labeled sides), plus the
///    regime's side conditions (join completeness, overlay containment,
///    overlay independence bound, witness independence)
///  - the witness induces exactly Z(zykov_n, zykov_alpha)
///  - within caps: independence number equals alpha exactly, and the number
///    of independent sets is at least i(Z(zykov_n, zykov_alpha))
CertificateReport verify_certificate(const ConstructionCertificate& cert,
                                     const VerifyOptions& options = {});

/// JSON round trip (stable snake_case schema, graph as graph6).
std::string certificate_to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const std::string& text);

}  // namespace iset
