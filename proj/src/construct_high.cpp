#include "iset/construct_high.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iset/zykov.hpp"

namespace iset {

namespace {

std::optional<std::string> circulant_rejection(const CirculantSpec& spec) {
    if (spec.m < 1) return "circulant needs at least one vertex, got " + std::to_string(spec.m);
    if (spec.r < 0 || spec.r >= spec.m)
        return "circulant degree " + std::to_string(spec.r) + " outside [0, " + std::to_string(spec.m) + ")";
    if (spec.g < 0) return "circulant gap must be nonnegative, got " + std::to_string(spec.g);
    if (spec.r % 2 == 1 && spec.m % 2 == 1)
        return "odd circulant degree needs an even vertex count";
    if (spec.r > 0 && 2 * spec.g + spec.r > spec.m - 1)
        return "circulant offsets collide: need 2g + r <= m - 1, got 2*" + std::to_string(spec.g) +
               " + " + std::to_string(spec.r) + " > " + std::to_string(spec.m - 1);
    return std::nullopt;
}

}  // namespace

Graph build_circulant(const CirculantSpec& spec) {
    if (auto why = circulant_rejection(spec)) throw std::invalid_argument(*why);
    Graph g(spec.m);
    for (int v = 0; v < spec.m; ++v) {
        for (int off = spec.g + 1; off <= spec.g + spec.r / 2; ++off) g.add_edge(v, (v + off) % spec.m);
        if (spec.r % 2 == 1) g.add_edge(v, (v + spec.m / 2) % spec.m);
    }
    auto degree = g.regular_degree();
    if (!degree || *degree != spec.r) throw std::logic_error("circulant degree check failed");
    return g;
}

int circulant_alpha_bound(const CirculantSpec& spec) {
    if (auto why = circulant_rejection(spec)) throw std::invalid_argument(*why);
    int window = spec.g + 1 + spec.r / 2;
    return (spec.g + 1) * ((spec.m + window - 1) / window);
}

namespace {

struct Block {
    int start = 0;
    int size = 0;
};

// Identical clique layout for both sides of the high-degree scaffold:
// profile of Z(n-d, alpha), smaller cliques first.
struct HighLayout {
    int side = 0;  // n - d
    int alpha = 0;
    std::vector<Block> blocks;  // side-one blocks; side two is shifted by `side`
};

HighLayout make_high_layout(int n, int d, int alpha) {
    HighLayout L;
    L.side = n - d;
    L.alpha = alpha;
    ZykovProfile p = zykov_profile(L.side, alpha);
    int pos = 0;
    for (long long i = 0; i < p.num_small; ++i, pos += static_cast<int>(p.small_size))
        L.blocks.push_back({pos, static_cast<int>(p.small_size)});
    for (long long i = 0; i < p.num_large; ++i, pos += static_cast<int>(p.large_size))
        L.blocks.push_back({pos, static_cast<int>(p.large_size)});
    return L;
}

std::optional<std::string> high_shape_rejection(int n, int d, int alpha) {
    if (n < 2) return "order must be at least 2, got " + std::to_string(n);
    if (2 * d < n || d >= n)
        return "degree " + std::to_string(d) + " outside [" + std::to_string((n + 1) / 2) + ", " +
               std::to_string(n - 1) + "] for the high regime";
    if ((static_cast<long long>(n) * d) % 2 != 0) return "n * d must be even";
    if (alpha < 2 || alpha > n - d)
        return "independence target " + std::to_string(alpha) + " outside [2, " + std::to_string(n - d) + "]";
    return std::nullopt;
}

Graph build_high_base(const HighLayout& L, int n) {
    Graph g(n);
    int side = L.side;
    for (const auto& blk : L.blocks) {
        for (int i = 0; i < blk.size; ++i)
            for (int j = i + 1; j < blk.size; ++j) {
                g.add_edge(blk.start + i, blk.start + j);
                g.add_edge(side + blk.start + i, side + blk.start + j);
            }
        for (int i = 0; i < blk.size; ++i) g.add_edge(blk.start + i, side + blk.start + i);
    }
    for (size_t bi = 0; bi < L.blocks.size(); ++bi)
        for (size_t bj = 0; bj < L.blocks.size(); ++bj) {
            if (bi == bj) continue;
            for (int i = 0; i < L.blocks[bi].size; ++i)
                for (int j = 0; j < L.blocks[bj].size; ++j)
                    g.add_edge(L.blocks[bi].start + i, side + L.blocks[bj].start + j);
        }
    return g;
}

// Clique cover of the two sides by alpha cliques: block i of side one with
// block i+1 (cyclically) of side two, which are completely joined.
std::vector<VertexSet> shifted_cover(const HighLayout& L, int n) {
    std::vector<VertexSet> cover;
    for (int i = 0; i < L.alpha; ++i) {
        const Block& bx = L.blocks[static_cast<size_t>(i)];
        const Block& by = L.blocks[static_cast<size_t>((i + 1) % L.alpha)];
        std::vector<int> members;
        for (int k = 0; k < bx.size; ++k) members.push_back(bx.start + k);
        for (int k = 0; k < by.size; ++k) members.push_back(L.side + by.start + k);
        cover.emplace_back(std::move(members), n);
    }
    return cover;
}

void fill_sides(ConstructionCertificate& cert, int side, int n, int w_start) {
    for (int v = 0; v < side; ++v) cert.side_x.push_back(v);
    for (int v = side; v < 2 * side; ++v) cert.side_y.push_back(v);
    for (int v = w_start; v < n; ++v) cert.side_w.push_back(v);
}

// Adds the circulant edges through the given vertex order, refusing to
// duplicate an existing edge.
void overlay_circulant(Graph& g, const Graph& circ, const std::vector<int>& order) {
    for (auto [p, q] : circ.edges()) {
        int u = order[static_cast<size_t>(p)];
        int v = order[static_cast<size_t>(q)];
        if (g.has_edge(u, v)) throw std::logic_error("circulant overlay duplicates an existing edge");
        g.add_edge(u, v);
    }
}

}  // namespace

Graph base_graph_high(int n, int d, int alpha) {
    if (auto why = high_shape_rejection(n, d, alpha)) throw std::invalid_argument(*why);
    return build_high_base(make_high_layout(n, d, alpha), n);
}

std::optional<std::string> construct_high_dense_rejection(int n, int d, int alpha) {
    if (auto why = high_shape_rejection(n, d, alpha)) return why;
    if (3 * d < 2 * n)
        return "degree " + std::to_string(d) + " below the dense threshold of two thirds of " + std::to_string(n);
    int m = 2 * d - n;
    int r = 3 * d - 2 * n;
    int lower = (m + r / 2) / (1 + r / 2);  // ceil(m / (1 + floor(r/2)))
    if (alpha < lower)
        return "independence target " + std::to_string(alpha) + " below the center-block floor " +
               std::to_string(lower);
    return std::nullopt;
}

ConstructionCertificate construct_high_dense(int n, int d, int alpha) {
    if (auto why = construct_high_dense_rejection(n, d, alpha)) throw std::invalid_argument(*why);
    HighLayout L = make_high_layout(n, d, alpha);
    Graph g = build_high_base(L, n);
    int side = L.side;
    int w_start = 2 * side;
    CirculantSpec spec{2 * d - n, 3 * d - 2 * n, 0};
    std::vector<int> order;
    for (int v = w_start; v < n; ++v) order.push_back(v);
    overlay_circulant(g, build_circulant(spec), order);
    for (int w = w_start; w < n; ++w)
        for (int u = 0; u < 2 * side; ++u) g.add_edge(w, u);
    auto degree = g.regular_degree();
    if (!degree || *degree != d) throw std::logic_error("dense construction lost regularity");

    ConstructionCertificate cert;
    cert.graph = std::move(g);
    cert.tag = CaseTag::high_dense;
    cert.n = n;
    cert.d = d;
    cert.alpha = alpha;
    cert.zykov_n = side;
    cert.zykov_alpha = alpha;
    cert.clique_cover = shifted_cover(L, n);
    std::vector<int> witness;
    for (int v = 0; v < side; ++v) witness.push_back(v);
    cert.zykov_witness = VertexSet(std::move(witness), n);
    fill_sides(cert, side, n, w_start);
    cert.filler = spec;
    cert.filler_order = std::move(order);
    return cert;
}

std::optional<std::string> construct_high_general_rejection(int n, int d, int alpha) {
    if (auto why = high_shape_rejection(n, d, alpha)) return why;
    int nd = n - d;
    int g = (nd + alpha - 1) / alpha;  // ceil((n-d)/alpha)
    int half_r = (2 * d - n) / 2;
    if (2 * (g + half_r) > d - 2)
        return "offset budget exceeded: 2*(gap + half-degree) = " + std::to_string(2 * (g + half_r)) +
               " > " + std::to_string(d - 2);
    int window = g + 1 + half_r;
    int bound = (g + 1) * ((d + window - 1) / window);
    if (bound > alpha)
        return "overlay independence bound " + std::to_string(bound) + " exceeds target " +
               std::to_string(alpha);
    return std::nullopt;
}

ConstructionCertificate construct_high_general(int n, int d, int alpha) {
    if (auto why = construct_high_general_rejection(n, d, alpha)) throw std::invalid_argument(*why);
    HighLayout L = make_high_layout(n, d, alpha);
    Graph g = build_high_base(L, n);
    int side = L.side;
    int w_start = 2 * side;
    for (int w = w_start; w < n; ++w)
        for (int y = side; y < 2 * side; ++y) g.add_edge(w, y);
    // Overlay order: side one block by block, then the center block; the
    // circulant skips at least gap = ceil((n-d)/alpha) positions, which is
    // at least the largest block size, so it never doubles a clique edge.
    CirculantSpec spec{d, 2 * d - n, (side + alpha - 1) / alpha};
    std::vector<int> order;
    for (int v = 0; v < side; ++v) order.push_back(v);
    for (int v = w_start; v < n; ++v) order.push_back(v);
    overlay_circulant(g, build_circulant(spec), order);
    auto degree = g.regular_degree();
    if (!degree || *degree != d) throw std::logic_error("general construction lost regularity");

    ConstructionCertificate cert;
    cert.graph = std::move(g);
    cert.tag = CaseTag::high_general;
    cert.n = n;
    cert.d = d;
    cert.alpha = alpha;
    cert.zykov_n = side;
    cert.zykov_alpha = alpha;
    cert.clique_cover = shifted_cover(L, n);
    std::vector<int> witness;
    for (int v = side; v < 2 * side; ++v) witness.push_back(v);
    cert.zykov_witness = VertexSet(std::move(witness), n);
    fill_sides(cert, side, n, w_start);
    cert.filler = spec;
    cert.filler_order = std::move(order);
    return cert;
}

std::optional<std::string> construct_claim_lb_rejection(int n, int d) {
    if (n < 2) return "order must be at least 2, got " + std::to_string(n);
    if (2 * d < n || d >= n)
        return "degree " + std::to_string(d) + " outside [" + std::to_string((n + 1) / 2) + ", " +
               std::to_string(n - 1) + "]";
    if ((static_cast<long long>(n) * d) % 2 != 0) return "n * d must be even";
    return std::nullopt;
}

ConstructionCertificate construct_claim_lb(int n, int d) {
    if (auto why = construct_claim_lb_rejection(n, d)) throw std::invalid_argument(*why);
    int iso = n - d;
    CirculantSpec spec{d, 2 * d - n, 0};
    Graph circ = build_circulant(spec);
    Graph g(n);
    for (auto [u, v] : circ.edges()) g.add_edge(iso + u, iso + v);
    for (int e = 0; e < iso; ++e)
        for (int v = iso; v < n; ++v) g.add_edge(e, v);
    auto degree = g.regular_degree();
    if (!degree || *degree != d) throw std::logic_error("claim construction lost regularity");

    ConstructionCertificate cert;
    cert.graph = std::move(g);
    cert.tag = CaseTag::claim_join;
    cert.n = n;
    cert.d = d;
    cert.alpha = iso;
    cert.zykov_n = iso;
    cert.zykov_alpha = iso;
    std::vector<int> witness;
    for (int v = 0; v < iso; ++v) witness.push_back(v);
    cert.zykov_witness = VertexSet(std::move(witness), n);
    for (int v = 0; v < iso; ++v) cert.side_x.push_back(v);
    for (int v = iso; v < n; ++v) cert.side_w.push_back(v);
    cert.filler = spec;
    for (int v = iso; v < n; ++v) cert.filler_order.push_back(v);
    return cert;
}

}  // namespace iset
