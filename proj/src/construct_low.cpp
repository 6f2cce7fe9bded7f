#include "iset/construct_low.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iset/matching.hpp"
#include "iset/zykov.hpp"

namespace iset {

namespace {

struct Block {
    int start = 0;
    int size = 0;
};

Block sub_main(const Block& b) { return Block{b.start + 1, b.size - 1}; }  // all but the lowest vertex
Block sub_single(const Block& b) { return Block{b.start, 1}; }             // the lowest vertex alone

// Side-by-side block layout for the even construction. Side one holds na
// blocks of size a then nb of size b starting at vertex 0; side two holds
// nb of size b then na of size a starting at n/2. (a, b) are oriented per
// case: a is the majority block size on side one.
struct LowLayout {
    int half = 0;
    int alpha = 0;
    CaseTag tag = CaseTag::divisible;
    int a = 0;
    int b = 0;
    int na = 0;
    int nb = 0;
    std::vector<Block> x;
    std::vector<Block> y;
};

CaseTag classify_profile(const ZykovProfile& p) {
    if (p.num_large == 0) return CaseTag::divisible;
    if (p.num_small == p.num_large) return CaseTag::equal_counts;
    if (p.num_large > p.num_small) return CaseTag::big_majority;
    if (p.num_small >= p.num_large + 2) return CaseTag::small_majority_gap2;
    return CaseTag::small_majority_gap1;
}

LowLayout make_layout(int n, int alpha) {
    LowLayout L;
    L.half = n / 2;
    L.alpha = alpha;
    ZykovProfile p = zykov_profile(L.half, alpha);
    L.tag = classify_profile(p);
    switch (L.tag) {
        case CaseTag::divisible:
            L.a = static_cast<int>(p.small_size);
            L.b = L.a;
            L.na = alpha;
            L.nb = 0;
            break;
        case CaseTag::big_majority:
            L.a = static_cast<int>(p.large_size);
            L.b = static_cast<int>(p.small_size);
            L.na = static_cast<int>(p.num_large);
            L.nb = static_cast<int>(p.num_small);
            break;
        default:  // equal_counts, small_majority_gap2, small_majority_gap1
            L.a = static_cast<int>(p.small_size);
            L.b = static_cast<int>(p.large_size);
            L.na = static_cast<int>(p.num_small);
            L.nb = static_cast<int>(p.num_large);
            break;
    }
    int pos = 0;
    for (int i = 0; i < L.na; ++i, pos += L.a) L.x.push_back({pos, L.a});
    for (int i = 0; i < L.nb; ++i, pos += L.b) L.x.push_back({pos, L.b});
    pos = L.half;
    for (int i = 0; i < L.nb; ++i, pos += L.b) L.y.push_back({pos, L.b});
    for (int i = 0; i < L.na; ++i, pos += L.a) L.y.push_back({pos, L.a});
    return L;
}

void add_clique(Graph& g, const Block& blk) {
    for (int i = 0; i < blk.size; ++i)
        for (int j = i + 1; j < blk.size; ++j) g.add_edge(blk.start + i, blk.start + j);
}

void add_complete_join(Graph& g, const Block& p, const Block& q) {
    for (int i = 0; i < p.size; ++i)
        for (int j = 0; j < q.size; ++j) g.add_edge(p.start + i, q.start + j);
}

// Perfect matching between equal-size blocks: vertex i of p to vertex
// (i + offset) mod size of q.
void add_block_matching(Graph& g, const Block& p, const Block& q, int offset) {
    if (p.size != q.size)
        throw std::logic_error("matched blocks differ in size: " + std::to_string(p.size) + " vs " +
                               std::to_string(q.size));
    for (int i = 0; i < p.size; ++i) g.add_edge(p.start + i, q.start + (i + offset) % q.size);
}

Graph build_base(const LowLayout& L) {
    Graph g(2 * L.half);
    for (const auto& blk : L.x) add_clique(g, blk);
    for (const auto& blk : L.y) add_clique(g, blk);
    for (int i = 0; i < L.alpha; ++i) add_complete_join(g, L.x[static_cast<size_t>(i)], L.y[static_cast<size_t>(i)]);
    return g;
}

// Degree of the regularized scaffold G2 for each case.
int g2_degree(const LowLayout& L) {
    switch (L.tag) {
        case CaseTag::divisible: return 2 * L.a - 1;
        case CaseTag::equal_counts: return L.a + L.b - 1;
        case CaseTag::big_majority: return 2 * L.a - 1;
        case CaseTag::small_majority_gap2: return L.a + L.b - 1;
        default: return L.a + L.b;  // small_majority_gap1
    }
}

// Degree of the leftover cross graph G3 = cross minus (G2 and the reserved
// matchings F), derived from the per-case bookkeeping.
int g3_degree(const LowLayout& L) {
    switch (L.tag) {
        case CaseTag::divisible: return L.half - L.a;
        case CaseTag::equal_counts: return L.half - L.b;
        case CaseTag::big_majority: return L.half - L.a - 1;
        case CaseTag::small_majority_gap2: return L.half - L.b;
        default: return L.half - L.b - 1;  // small_majority_gap1
    }
}

// Extra matchings that turn the base graph into the regular scaffold G2.
// Identity offsets throughout; the reserved family F uses offset one so the
// two never collide even when a clique pair appears in both.
void add_regularizers(Graph& g, const LowLayout& L) {
    const auto& x = L.x;
    const auto& y = L.y;
    switch (L.tag) {
        case CaseTag::divisible:
        case CaseTag::equal_counts:
            break;
        case CaseTag::big_majority:
            for (int i = 1; i <= L.nb; ++i) add_block_matching(g, x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(L.alpha - i)], 0);
            for (int j = 1; j <= L.nb; ++j) add_block_matching(g, x[static_cast<size_t>(L.alpha - j)], y[static_cast<size_t>(j - 1)], 0);
            break;
        case CaseTag::small_majority_gap2:
            for (int i = L.nb + 2; i <= L.na; ++i) add_block_matching(g, x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(i - 2)], 0);
            add_block_matching(g, x[static_cast<size_t>(L.nb)], y[static_cast<size_t>(L.na - 1)], 0);
            break;
        case CaseTag::small_majority_gap1: {
            for (int i = 1; i <= L.na - 2; ++i) add_block_matching(g, x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(L.alpha - i)], 0);
            for (int j = 1; j <= L.na - 2; ++j) add_block_matching(g, x[static_cast<size_t>(j + L.na)], y[static_cast<size_t>(j - 1)], 0);
            add_block_matching(g, x[static_cast<size_t>(L.na - 2)], y[static_cast<size_t>(L.na - 1)], 0);
            add_block_matching(g, x[static_cast<size_t>(L.na - 1)], y[static_cast<size_t>(L.na)], 0);
            // The two size-b blocks flanking the middle are split into their
            // lowest vertex and the rest; the remainders are matched across
            // to the middle blocks and the two singletons joined directly.
            add_block_matching(g, x[static_cast<size_t>(L.na - 1)], sub_main(y[static_cast<size_t>(L.nb - 1)]), 0);
            add_block_matching(g, sub_main(x[static_cast<size_t>(L.na)]), y[static_cast<size_t>(L.na - 1)], 0);
            g.add_edge(sub_single(x[static_cast<size_t>(L.na)]).start, sub_single(y[static_cast<size_t>(L.nb - 1)]).start);
            break;
        }
        default:
            throw std::logic_error("unexpected case tag in even scaffold");
    }
}

// The reserved cross matchings F, excluded from G3 so the final graph never
// uses them. Offset one keeps them disjoint from every identity matching.
std::vector<std::pair<int, int>> reserved_matchings(const LowLayout& L) {
    std::vector<std::pair<int, int>> edges;
    auto collect = [&](const Block& p, const Block& q) {
        if (p.size != q.size) throw std::logic_error("reserved blocks differ in size");
        for (int i = 0; i < p.size; ++i) edges.emplace_back(p.start + i, q.start + (i + 1) % q.size);
    };
    const auto& x = L.x;
    const auto& y = L.y;
    switch (L.tag) {
        case CaseTag::divisible:
            break;
        case CaseTag::equal_counts:
            for (int i = 1; i <= L.nb; ++i) collect(x[static_cast<size_t>(L.na + i - 1)], y[static_cast<size_t>(i - 1)]);
            break;
        case CaseTag::big_majority:
            for (int i = 1; i <= L.na; ++i) collect(x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(L.nb + i - 1)]);
            break;
        case CaseTag::small_majority_gap2:
            for (int i = L.na + 1; i <= L.alpha; ++i) collect(x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(i - L.na - 1)]);
            break;
        case CaseTag::small_majority_gap1:
            for (int i = L.na + 1; i <= L.alpha; ++i) collect(x[static_cast<size_t>(i - 1)], y[static_cast<size_t>(L.alpha - i)]);
            break;
        default:
            throw std::logic_error("unexpected case tag in reserved matchings");
    }
    return edges;
}

DegreeRange case_range(const LowLayout& L) {
    switch (L.tag) {
        case CaseTag::divisible: return {2 * L.a - 1, L.half + L.a - 1};
        case CaseTag::equal_counts: return {2 * L.a, L.half + L.a - 1};
        case CaseTag::big_majority: return {2 * L.a - 1, L.half + L.a - 2};
        case CaseTag::small_majority_gap2: return {2 * L.a, L.half + L.a - 1};
        default: return {2 * L.a + 1, L.half + L.a - 1};  // small_majority_gap1
    }
}

std::optional<std::string> even_shape_rejection(int n, int alpha) {
    if (n < 4 || n % 2 != 0) return "order must be even and at least 4, got " + std::to_string(n);
    if (alpha < 2 || alpha > n / 2)
        return "independence target " + std::to_string(alpha) + " outside [2, " + std::to_string(n / 2) + "]";
    return std::nullopt;
}

struct EvenParts {
    LowLayout layout;
    Graph graph;
    std::vector<std::pair<int, int>> peeled_edges;  // cross edges chosen by the peeling
    int d_prime = 0;
};

EvenParts build_even_parts(int n, int d, int alpha) {
    if (auto why = construct_even_rejection(n, d, alpha)) throw std::invalid_argument(*why);
    LowLayout L = make_layout(n, alpha);
    Graph g2 = build_base(L);
    add_regularizers(g2, L);
    auto deg2 = g2.regular_degree();
    if (!deg2 || *deg2 != g2_degree(L)) throw std::logic_error("even scaffold lost regularity");

    // Cross edges still available: everything between the sides not already
    // used by the scaffold and not reserved.
    BipartiteGraph used(L.half, L.half);
    for (int u = 0; u < L.half; ++u)
        for (int v : g2.neighbors(u))
            if (v >= L.half) used.add_edge(u, v - L.half);
    for (auto [u, v] : reserved_matchings(L)) {
        if (used.has_edge(u, v - L.half)) throw std::logic_error("reserved matching collides with the scaffold");
        used.add_edge(u, v - L.half);
    }
    BipartiteGraph avail(L.half, L.half);
    for (int u = 0; u < L.half; ++u)
        for (int v = 0; v < L.half; ++v)
            if (!used.has_edge(u, v)) avail.add_edge(u, v);
    auto deg3 = avail.regular_degree();
    if (!deg3 || *deg3 != g3_degree(L)) throw std::logic_error("leftover cross graph lost regularity");

    EvenParts parts{L, g2, {}, d - *deg2};
    BipartiteGraph chosen = regular_subgraph(avail, parts.d_prime);
    for (int u = 0; u < L.half; ++u)
        for (int v : chosen.adj[static_cast<size_t>(u)]) {
            parts.graph.add_edge(u, L.half + v);
            parts.peeled_edges.emplace_back(u, L.half + v);
        }
    auto final_degree = parts.graph.regular_degree();
    if (!final_degree || *final_degree != d) throw std::logic_error("even construction lost regularity");
    return parts;
}

VertexSet block_pair_set(const LowLayout& L, int i, int universe, bool with_extra = false, int extra = -1) {
    std::vector<int> members;
    for (int k = 0; k < L.x[static_cast<size_t>(i)].size; ++k) members.push_back(L.x[static_cast<size_t>(i)].start + k);
    for (int k = 0; k < L.y[static_cast<size_t>(i)].size; ++k) members.push_back(L.y[static_cast<size_t>(i)].start + k);
    if (with_extra) members.push_back(extra);
    return VertexSet(std::move(members), universe);
}

}  // namespace

CaseTag classify_case(int n, int alpha) {
    if (auto why = even_shape_rejection(n, alpha)) throw std::invalid_argument(*why);
    return classify_profile(zykov_profile(n / 2, alpha));
}

DegreeRange degree_range_low(int n, int alpha) {
    if (auto why = even_shape_rejection(n, alpha)) throw std::invalid_argument(*why);
    int half = n / 2;
    int f = half / alpha;
    int ce = (half + alpha - 1) / alpha;
    return {f + ce, half + f - 1};
}

DegreeRange degree_range_low_case(int n, int alpha) {
    if (auto why = even_shape_rejection(n, alpha)) throw std::invalid_argument(*why);
    return case_range(make_layout(n, alpha));
}

DegreeRange degree_range_odd(int n, int alpha) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("order must be odd and at least 5, got " + std::to_string(n));
    int m = n - 1;
    if (alpha < 2 || alpha > m / 2)
        throw std::invalid_argument("independence target " + std::to_string(alpha) + " outside [2, " +
                                    std::to_string(m / 2) + "]");
    int half = m / 2;
    int f = half / alpha;
    int ce = (half + alpha - 1) / alpha;
    return {2 * (f + ce), half + f - 1};
}

Graph base_graph_low(int n, int alpha) {
    if (auto why = even_shape_rejection(n, alpha)) throw std::invalid_argument(*why);
    return build_base(make_layout(n, alpha));
}

std::optional<std::string> construct_even_rejection(int n, int d, int alpha) {
    if (auto why = even_shape_rejection(n, alpha)) return why;
    DegreeRange r = case_range(make_layout(n, alpha));
    if (!r.contains(d))
        return "degree " + std::to_string(d) + " outside case range [" + std::to_string(r.min_degree) +
               ", " + std::to_string(r.max_degree) + "]";
    return std::nullopt;
}

std::optional<std::string> construct_odd_rejection(int n, int d, int alpha) {
    if (n < 5 || n % 2 == 0) return "order must be odd and at least 5, got " + std::to_string(n);
    int m = n - 1;
    if (alpha < 2 || alpha > m / 2)
        return "independence target " + std::to_string(alpha) + " outside [2, " + std::to_string(m / 2) + "]";
    if (d % 2 != 0) return "odd-order construction needs an even degree, got " + std::to_string(d);
    DegreeRange r = degree_range_odd(n, alpha);
    if (!r.contains(d))
        return "degree " + std::to_string(d) + " outside odd range [" + std::to_string(r.min_degree) +
               ", " + std::to_string(r.max_degree) + "]";
    return std::nullopt;
}

ConstructionCertificate construct_even(int n, int d, int alpha) {
    EvenParts parts = build_even_parts(n, d, alpha);
    const LowLayout& L = parts.layout;
    ConstructionCertificate cert;
    cert.graph = std::move(parts.graph);
    cert.tag = L.tag;
    cert.n = n;
    cert.d = d;
    cert.alpha = alpha;
    cert.zykov_n = L.half;
    cert.zykov_alpha = alpha;
    for (int i = 0; i < alpha; ++i) cert.clique_cover.push_back(block_pair_set(L, i, n));
    std::vector<int> witness;
    for (int v = L.half; v < n; ++v) witness.push_back(v);
    cert.zykov_witness = VertexSet(witness, n);
    for (int v = 0; v < L.half; ++v) cert.side_x.push_back(v);
    for (int v = L.half; v < n; ++v) cert.side_y.push_back(v);
    return cert;
}

ConstructionCertificate construct_odd(int n, int d, int alpha) {
    if (auto why = construct_odd_rejection(n, d, alpha)) throw std::invalid_argument(*why);
    EvenParts parts = build_even_parts(n - 1, d, alpha);
    const LowLayout& L = parts.layout;
    int half = L.half;

    // A perfect matching inside the peeled cross edges; d' >= 1 in the odd
    // degree range, so one exists.
    BipartiteGraph peeled(half, half);
    for (auto [u, v] : parts.peeled_edges) peeled.add_edge(u, v - half);
    MatchingOutcome m = perfect_matching(peeled);
    if (!m.perfect) throw std::logic_error("peeled cross graph lost its perfect matching");

    std::vector<int> right_partner(static_cast<size_t>(half));
    for (int u = 0; u < half; ++u) right_partner[static_cast<size_t>(m.left_match[static_cast<size_t>(u)])] = u;

    const Block& x1 = L.x[0];
    const Block& y1 = L.y[0];
    auto in_x1 = [&](int u) { return u >= x1.start && u < x1.start + x1.size; };
    auto in_y1_right = [&](int v) { return v + half >= y1.start && v + half < y1.start + y1.size; };

    // Matching edges touching the first clique pair cover it exactly (the
    // peeled graph has no edges inside the pair), then lowest-index fill.
    std::vector<std::pair<int, int>> removed;
    for (int u = x1.start; u < x1.start + x1.size; ++u) removed.emplace_back(u, m.left_match[static_cast<size_t>(u)]);
    for (int v = y1.start - half; v < y1.start - half + y1.size; ++v)
        removed.emplace_back(right_partner[static_cast<size_t>(v)], v);
    int need = d / 2;
    for (int u = 0; u < half && static_cast<int>(removed.size()) < need; ++u) {
        int v = m.left_match[static_cast<size_t>(u)];
        if (in_x1(u) || in_y1_right(v)) continue;
        removed.emplace_back(u, v);
    }
    if (static_cast<int>(removed.size()) != need) throw std::logic_error("could not reserve enough matching edges");

    Graph g(n);
    BipartiteGraph dropped(half, half);
    for (auto [u, v] : removed) dropped.add_edge(u, v);
    for (auto [u, v] : parts.graph.edges()) {
        if (v >= half && u < half && dropped.has_edge(u, v - half)) continue;
        g.add_edge(u, v);
    }
    int apex = n - 1;
    for (auto [u, v] : removed) {
        g.add_edge(u, apex);
        g.add_edge(v + half, apex);
    }
    auto degree = g.regular_degree();
    if (!degree || *degree != d) throw std::logic_error("odd construction lost regularity");

    ConstructionCertificate cert;
    cert.graph = std::move(g);
    cert.tag = CaseTag::odd_apex;
    cert.n = n;
    cert.d = d;
    cert.alpha = alpha;
    cert.zykov_n = half;
    cert.zykov_alpha = alpha;
    cert.clique_cover.push_back(block_pair_set(L, 0, n, true, apex));
    for (int i = 1; i < alpha; ++i) cert.clique_cover.push_back(block_pair_set(L, i, n));
    std::vector<int> witness;
    for (int v = half; v < n - 1; ++v) witness.push_back(v);
    cert.zykov_witness = VertexSet(witness, n);
    for (int v = 0; v < half; ++v) cert.side_x.push_back(v);
    for (int v = half; v < n - 1; ++v) cert.side_y.push_back(v);
    cert.side_w.push_back(apex);
    return cert;
}

}  // namespace iset
