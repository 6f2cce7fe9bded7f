#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iset/counting.hpp"
#include "iset/graph.hpp"

namespace iset {

/// Upper bound on log2 i(G) for d-regular graphs with d <= n/2 and
/// independence number at most alpha, using the smooth profile main term:
///   alpha * log2(1 + n/(2 alpha)) + c * n * sqrt(log2(d) / d).
/// c is a free parameter (the analysis fixes only its existence), so the
/// value is reported but never certifies anything.
double smooth_container_bound(int n, int d, int alpha, double c);

/// Sharper variant whose main term is the exact clique-profile value
///   log2 i(Z(floor(n/2), alpha)) + c * n * sqrt(log2(d) / d).
/// Requires alpha <= floor(n/2). Parametric in c like the smooth bound.
double zykov_container_bound(int n, int d, int alpha, double c);

/// Exact upper bound n * i(Z(n-d, alpha)) valid for d-regular graphs with
/// 2d >= n and independence number at most alpha <= n-d: every independent
/// set lies in the non-neighborhood of one of the n vertices.
BigCount easy_container_bound(int n, int d, int alpha);

/// Exact upper bound n * 2^(n-d) valid for d-regular graphs with
/// n/2 < d < n and nd even, no independence hypothesis needed.
BigCount degree_container_bound(int n, int d);

/// Container-family size estimate for d-regular graphs with split
/// parameter phi (0 < phi < d): at most floor(n*d/(2d - phi)) vertices in
/// any defect set, and at most sum_{i <= n/phi} C(n, i) distinct families.
struct ContainerSizeReport {
    int phi = 0;
    bool natural_log = false;  // phi default used ln instead of log2
    long long defect_cap = 0;
    BigCount family_count;
    double family_log2 = 0.0;
};

/// phi defaults to floor(sqrt(d * log2 d)), or floor(sqrt(d * ln d)) with
/// natural_log set. Throws std::invalid_argument when the resulting phi
/// falls outside (0, d).
ContainerSizeReport container_size_formula(int n, int d, std::optional<int> phi = std::nullopt,
                                           bool natural_log = false);

/// One evaluated bound. Certified entries are exact integer comparisons;
/// parametric entries (free constant c) are informational only.
struct BoundEntry {
    std::string name;
    bool applicable = false;
    bool certified = false;
    bool satisfied = true;  // meaningful only when applicable
    double log2_value = 0.0;
};

struct BoundReport {
    int n = 0;
    std::optional<int> d;  // empty when the graph is not regular
    int alpha_claim = 0;
    int alpha_actual = 0;
    bool alpha_ok = false;  // alpha_actual <= alpha_claim
    BigCount exact_count;
    double exact_log2 = 0.0;
    std::vector<BoundEntry> entries;

    /// alpha_ok plus every applicable certified bound satisfied.
    bool verified() const;
};

/// Slack used when comparing exact log2 counts against float bounds.
inline constexpr double kLogCompareSlack = 1e-9;

/// Counts i(G) and alpha(G) exactly, then evaluates every applicable
/// bound against them under the claim alpha(G) <= alpha_claim:
///   zykov_total       i(G) <= i(Z(n, alpha_claim))             (exact)
///   easy_container    i(G) <= n * i(Z(n-d, alpha_claim))       (exact)
///   degree_container  i(G) <= n * 2^(n-d)                      (exact)
///   smooth_container  log2 i(G) <= smooth_container_bound(c)   (parametric)
///   zykov_container   log2 i(G) <= zykov_container_bound(c)    (parametric)
BoundReport verify_bounds(const Graph& g, int alpha_claim, double c = 1.0,
                          const CountOptions& options = {});

std::string bound_report_to_json(const BoundReport& report);
std::string bound_report_to_csv(const BoundReport& report);

}  // namespace iset
