#include "iset/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace iset {

namespace {

using Word = std::uint64_t;

// Dynamic fixed-width bitset over the graph's vertices.
struct Mask {
    std::vector<Word> w;

    bool operator==(const Mask&) const = default;

    bool none() const {
        for (Word x : w)
            if (x) return false;
        return true;
    }

    int pop() const {
        int c = 0;
        for (Word x : w) c += std::popcount(x);
        return c;
    }

    bool test(int v) const { return (w[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1; }

    void reset(int v) { w[static_cast<size_t>(v >> 6)] &= ~(Word{1} << (v & 63)); }

    int lowest() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
        return -1;
    }

    Mask and_not(const Mask& o) const {
        Mask r = *this;
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
        return r;
    }

    int pop_and(const Mask& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }

    bool subset_of(const Mask& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

struct MaskHash {
    size_t operator()(const Mask& m) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (Word x : m.w) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

struct NeighborTable {
    int n = 0;
    size_t words = 0;
    std::vector<Mask> open;    // N(v)
    std::vector<Mask> closed;  // N[v]

    explicit NeighborTable(const Graph& g) {
        n = g.num_vertices();
        words = static_cast<size_t>((n + 63) / 64);
        if (words == 0) words = 1;
        Mask empty{std::vector<Word>(words, 0)};
        open.assign(static_cast<size_t>(n), empty);
        closed.assign(static_cast<size_t>(n), empty);
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) open[static_cast<size_t>(v)].w[static_cast<size_t>(u >> 6)] |= Word{1} << (u & 63);
            closed[static_cast<size_t>(v)] = open[static_cast<size_t>(v)];
            closed[static_cast<size_t>(v)].w[static_cast<size_t>(v >> 6)] |= Word{1} << (v & 63);
        }
    }

    Mask full() const {
        Mask m{std::vector<Word>(words, 0)};
        for (int v = 0; v < n; ++v) m.w[static_cast<size_t>(v >> 6)] |= Word{1} << (v & 63);
        return m;
    }
};

// Splits `mask` into connected components of the induced subgraph.
std::vector<Mask> components_of(const NeighborTable& nt, Mask mask) {
    std::vector<Mask> comps;
    while (!mask.none()) {
        Mask comp{std::vector<Word>(nt.words, 0)};
        Mask frontier{std::vector<Word>(nt.words, 0)};
        int seed = mask.lowest();
        frontier.w[static_cast<size_t>(seed >> 6)] |= Word{1} << (seed & 63);
        while (!frontier.none()) {
            for (size_t i = 0; i < nt.words; ++i) comp.w[i] |= frontier.w[i];
            Mask next{std::vector<Word>(nt.words, 0)};
            Mask f = frontier;
            for (int v = f.lowest(); v != -1; f.reset(v), v = f.lowest()) {
                const Mask& nb = nt.open[static_cast<size_t>(v)];
                for (size_t i = 0; i < nt.words; ++i) next.w[i] |= nb.w[i] & mask.w[i] & ~comp.w[i];
            }
            frontier = next;
        }
        mask = mask.and_not(comp);
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Maximum-degree vertex within the mask, lowest index on ties.
int pick_pivot(const NeighborTable& nt, const Mask& mask) {
    int best = -1, best_deg = -1;
    Mask m = mask;
    for (int v = m.lowest(); v != -1; m.reset(v), v = m.lowest()) {
        int deg = nt.open[static_cast<size_t>(v)].pop_and(mask);
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    }
    return best;
}

// Value operations for the plain count.
struct CountOps {
    using Value = BigCount;
    static Value one() { return Value(1); }
    static void add_into(Value& a, const Value& b) { a += b; }
    static void mul_into(Value& a, const Value& b) { a *= b; }
    // Weight applied to the closed-neighborhood branch (picking the pivot).
    static void promote(Value&) {}
    static size_t bytes(const Value& v) { return 32 + mpz_size(v.get_mpz_t()) * sizeof(mp_limb_t); }
};

// Value operations for the independence polynomial.
struct PolyOps {
    using Value = Polynomial;
    static Value one() { return Value{BigCount(1)}; }
    static void add_into(Value& a, const Value& b) {
        if (a.size() < b.size()) a.resize(b.size(), BigCount(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    }
    static void mul_into(Value& a, const Value& b) {
        Value r(a.size() + b.size() - 1, BigCount(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        a = std::move(r);
    }
    static void promote(Value& a) { a.insert(a.begin(), BigCount(0)); }
    static size_t bytes(const Value& v) {
        size_t s = 24;
        for (const auto& c : v) s += CountOps::bytes(c);
        return s;
    }
};

template <class Ops>
class Kernel {
public:
    Kernel(const Graph& g, const CountOptions& options) : nt_(g), budget_(options.memo_budget_bytes) {}

    typename Ops::Value run() { return eval(nt_.full()); }

private:
    using Value = typename Ops::Value;

    Value eval(const Mask& mask) {
        if (mask.none()) return Ops::one();
        auto comps = components_of(nt_, mask);
        if (comps.size() == 1) return component(comps[0]);
        Value total = Ops::one();
        for (const auto& c : comps) Ops::mul_into(total, component(c));
        return total;
    }

    Value component(const Mask& mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        int v = pick_pivot(nt_, mask);
        Mask without_v = mask;
        without_v.reset(v);
        Value result = eval(without_v);
        Value closed = eval(mask.and_not(nt_.closed[static_cast<size_t>(v)]));
        Ops::promote(closed);
        Ops::add_into(result, closed);
        remember(mask, result);
        return result;
    }

    void remember(const Mask& mask, const Value& value) {
        size_t cost = 64 + mask.w.size() * sizeof(Word) + Ops::bytes(value);
        if (memo_bytes_ + cost > budget_) {
            memo_.clear();
            memo_bytes_ = 0;
            if (cost > budget_) return;  // single entry larger than the budget
        }
        memo_.emplace(mask, value);
        memo_bytes_ += cost;
    }

    NeighborTable nt_;
    size_t budget_;
    size_t memo_bytes_ = 0;
    std::unordered_map<Mask, Value, MaskHash> memo_;
};

}  // namespace

BigCount count_independent_sets(const Graph& g, const CountOptions& options) {
    return Kernel<CountOps>(g, options).run();
}

Polynomial independence_polynomial(const Graph& g, const CountOptions& options) {
    return Kernel<PolyOps>(g, options).run();
}

namespace {

// Greedy clique cover of the induced subgraph; its size bounds the
// independence number from above.
int clique_cover_bound(const NeighborTable& nt, const Mask& mask) {
    std::vector<Mask> cliques;
    Mask m = mask;
    for (int v = m.lowest(); v != -1; m.reset(v), v = m.lowest()) {
        bool placed = false;
        for (auto& c : cliques) {
            if (c.subset_of(nt.open[static_cast<size_t>(v)])) {
                c.w[static_cast<size_t>(v >> 6)] |= Word{1} << (v & 63);
                placed = true;
                break;
            }
        }
        if (!placed) {
            Mask c{std::vector<Word>(nt.words, 0)};
            c.w[static_cast<size_t>(v >> 6)] |= Word{1} << (v & 63);
            cliques.push_back(std::move(c));
        }
    }
    return static_cast<int>(cliques.size());
}

void alpha_search(const NeighborTable& nt, const Mask& mask, int current, int& best) {
    if (mask.none()) {
        best = std::max(best, current);
        return;
    }
    if (current + clique_cover_bound(nt, mask) <= best) return;
    int v = pick_pivot(nt, mask);
    alpha_search(nt, mask.and_not(nt.closed[static_cast<size_t>(v)]), current + 1, best);
    Mask without_v = mask;
    without_v.reset(v);
    alpha_search(nt, without_v, current, best);
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    NeighborTable nt(g);
    int best = 0;
    for (const auto& comp : components_of(nt, nt.full())) {
        int comp_best = 0;
        alpha_search(nt, comp, 0, comp_best);
        best += comp_best;
    }
    return best;
}

namespace {

std::vector<std::uint32_t> small_neighbor_masks(const Graph& g) {
    int n = g.num_vertices();
    if (n > kBruteForceCap)
        throw std::invalid_argument("brute force capped at " + std::to_string(kBruteForceCap) +
                                    " vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> nbr(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= std::uint32_t{1} << u;
    return nbr;
}

// Per-size counts of independent sets by full subset scan. is_indep is
// computed incrementally: S is independent iff S minus its lowest vertex is
// independent and that vertex has no neighbor in S.
std::vector<std::uint64_t> brute_force_by_size(const Graph& g) {
    auto nbr = small_neighbor_masks(g);
    int n = g.num_vertices();
    std::vector<std::uint64_t> by_size(static_cast<size_t>(n + 1), 0);
    std::uint64_t total = std::uint64_t{1} << n;
    std::vector<char> indep(static_cast<size_t>(total), 0);
    indep[0] = 1;
    by_size[0] = 1;
    for (std::uint64_t s = 1; s < total; ++s) {
        int low = std::countr_zero(s);
        std::uint64_t rest = s & (s - 1);
        if (indep[static_cast<size_t>(rest)] && (nbr[static_cast<size_t>(low)] & s) == 0) {
            indep[static_cast<size_t>(s)] = 1;
            ++by_size[static_cast<size_t>(std::popcount(s))];
        }
    }
    return by_size;
}

}  // namespace

BigCount brute_force_count(const Graph& g) {
    auto by_size = brute_force_by_size(g);
    std::uint64_t total = 0;
    for (std::uint64_t c : by_size) total += c;
    return BigCount(static_cast<unsigned long>(total));
}

Polynomial brute_force_polynomial(const Graph& g) {
    auto by_size = brute_force_by_size(g);
    size_t degree = by_size.size() - 1;
    while (degree > 0 && by_size[degree] == 0) --degree;
    Polynomial p(degree + 1);
    for (size_t i = 0; i <= degree; ++i) p[i] = BigCount(static_cast<unsigned long>(by_size[i]));
    return p;
}

}  // namespace iset
