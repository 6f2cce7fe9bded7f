#include "iset/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace iset {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph size must be nonnegative, got " + std::to_string(n));
    adj_.resize(static_cast<size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(num_vertices()) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " not allowed");
    auto& au = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // already present
    au.insert(it, v);
    auto& av = adj_[static_cast<size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++num_edges_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& au = adj_[static_cast<size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(num_edges_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<int> Graph::regular_degree() const {
    if (num_vertices() == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < num_vertices(); ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

VertexSet::VertexSet(std::vector<int> members_in, int universe_in)
    : members(std::move(members_in)), universe(universe_in) {
    if (universe < 0) throw std::invalid_argument("vertex set universe must be nonnegative");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members)
        if (v < 0 || v >= universe)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe of size " +
                                        std::to_string(universe));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    if (vs.universe != g.num_vertices())
        throw std::invalid_argument("vertex set universe " + std::to_string(vs.universe) +
                                    " does not match graph size " + std::to_string(g.num_vertices()));
    std::vector<int> index(static_cast<size_t>(g.num_vertices()), -1);
    for (int i = 0; i < vs.size(); ++i) index[static_cast<size_t>(vs.members[static_cast<size_t>(i)])] = i;
    Graph h(vs.size());
    for (int i = 0; i < vs.size(); ++i) {
        int u = vs.members[static_cast<size_t>(i)];
        for (int v : g.neighbors(u)) {
            int j = index[static_cast<size_t>(v)];
            if (j > i) h.add_edge(i, j);
        }
    }
    return h;
}

Graph join(const Graph& a, const Graph& b) {
    int na = a.num_vertices();
    int nb = b.num_vertices();
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.num_vertices();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

namespace {

// Appends `count` size bytes encoding `n` in big-endian 6-bit groups.
void append_size_groups(std::string& out, long long n, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        append_size_groups(out, n, 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_size_groups(out, n, 6);
    }
    int bit = 0;
    int chunk = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.has_edge(row, static_cast<int>(col)) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                bit = 0;
                chunk = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((chunk << (6 - bit)) + 63));
    return out;
}

Graph graph6_decode(const std::string& s) {
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("malformed graph6: byte out of printable range");
    size_t pos = 0;
    auto next = [&]() -> long long {
        if (pos >= s.size()) throw std::invalid_argument("malformed graph6: truncated size prefix");
        return s[pos++] - 63;
    };
    long long n;
    if (s.empty()) throw std::invalid_argument("malformed graph6: empty string");
    if (s[0] != '~') {
        n = next();
    } else {
        ++pos;
        bool wide = pos < s.size() && s[pos] == '~';
        int groups = 3;
        if (wide) {
            ++pos;
            groups = 6;
        }
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | next();
        if (n > 1'000'000'000)
            throw std::invalid_argument("graph6 size " + std::to_string(n) + " too large");
    }
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != need)
        throw std::invalid_argument("malformed graph6: expected " + std::to_string(need) +
                                    " data bytes, got " + std::to_string(s.size() - pos));
    Graph g(static_cast<int>(n));
    long long bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            long long byte = pos + bit_index / 6;
            int shift = 5 - static_cast<int>(bit_index % 6);
            if (((s[static_cast<size_t>(byte)] - 63) >> shift) & 1) g.add_edge(row, col);
            ++bit_index;
        }
    }
    // Padding bits past the triangle must be zero.
    for (long long b = bits; b < need * 6; ++b) {
        long long byte = pos + b / 6;
        int shift = 5 - static_cast<int>(b % 6);
        if (((s[static_cast<size_t>(byte)] - 63) >> shift) & 1)
            throw std::invalid_argument("malformed graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace iset
