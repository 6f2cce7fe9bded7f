#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "iset/graph.hpp"

namespace iset {

/// Arbitrary-precision nonnegative integer used for all exact set counts.
using BigCount = mpz_class;

/// Polynomial with BigCount coefficients, index = term degree.
using Polynomial = std::vector<BigCount>;

struct CountOptions {
    /// Approximate cap on memo table size in bytes. When an insertion would
    /// exceed it the whole table is cleared (wholesale eviction) and filling
    /// starts over; results are unaffected, only speed.
    std::size_t memo_budget_bytes = std::size_t{1} << 30;
};

/// Number of independent sets, empty set included. The n = 0 graph counts 1.
///
/// Deletion recursion i(G) = i(G - v) + i(G - N[v]) on a maximum-degree
/// pivot (ties broken toward the lowest index), with connected components
/// counted separately and multiplied, and results memoized per call on the
/// surviving vertex subset.
BigCount count_independent_sets(const Graph& g, const CountOptions& options = {});

/// Coefficient vector (c_0, ..., c_alpha): c_t = number of independent sets
/// of size t. Always c_0 = 1; degree = independence number. Same kernel as
/// count_independent_sets with per-size bookkeeping.
Polynomial independence_polynomial(const Graph& g, const CountOptions& options = {});

/// Independence number via branch and bound with a greedy-coloring upper
/// bound. Exact for any size this tool handles.
int independence_number(const Graph& g);

/// Reference oracle: scans all 2^n subsets. Throws std::invalid_argument
/// when n exceeds the hard cap of 26 vertices.
BigCount brute_force_count(const Graph& g);

/// Reference oracle for the polynomial, same subset scan and the same
/// 26-vertex cap.
Polynomial brute_force_polynomial(const Graph& g);

/// Hard vertex cap enforced by the brute-force oracles.
inline constexpr int kBruteForceCap = 26;

}  // namespace iset
