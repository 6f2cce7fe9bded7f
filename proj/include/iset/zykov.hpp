#pragma once

#include "iset/counting.hpp"
#include "iset/graph.hpp"

namespace iset {

/// Clique profile of Z(N, alpha): the disjoint union of alpha near-equal
/// cliques covering N vertices. num_small cliques have size small_size =
/// floor(N/alpha) and num_large have size large_size = small_size + 1.
/// When alpha divides N the convention is num_small = alpha, num_large = 0,
/// large_size = small_size. N = 0 yields the all-zero profile.
struct ZykovProfile {
    long long small_size = 0;
    long long large_size = 0;
    long long num_small = 0;
    long long num_large = 0;
};

/// Profile of Z(N, alpha). Requires 0 <= alpha <= N and alpha >= 1 when
/// N > 0; throws std::invalid_argument otherwise. Supports N up to 1e18.
ZykovProfile zykov_profile(long long n, long long alpha);

/// Materializes Z(N, alpha) as a graph: cliques laid out in ascending
/// vertex blocks, the num_small small ones first.
Graph build_zykov(int n, int alpha);

/// Exact i(Z(N, alpha)) = (1+small)^num_small * (1+large)^num_large.
BigCount count_zykov(long long n, long long alpha);

/// Independence polynomial of Z(N, alpha):
/// (1 + small*x)^num_small * (1 + large*x)^num_large.
Polynomial zykov_polynomial(long long n, long long alpha);

/// log2 i(Z(N, alpha)) computed directly from the profile in log space;
/// usable for N up to 1e9 and beyond without big-integer work.
double convergence_rate(long long n, long long alpha);

/// A growth-rate constant, carried in log2 space to avoid overflow.
struct RateConstant {
    double log2_value = 0.0;

    /// The constant itself, 2^log2_value.
    double base() const;
};

/// Relative tolerance used to decide whether a rate-formula parameter is an
/// integer; within it the integer-point branch of the formula applies.
inline constexpr double kIntegralityTol = 1e-9;

/// Limit growth constant for the low-degree regime with independence ratio
/// c = alpha/n, 0 < c <= 1/2. With y = 1/(2c):
///   integer y:  k = (1+y)^c
///   otherwise:  k = (1+fl)^(c*ce - 1/2) * (1+ce)^(1/2 - c*fl),
/// where fl = floor(y), ce = fl + 1.
RateConstant rate_constant_low(double c);

/// Limit growth constant for the high-degree regime with independence ratio
/// c_ind and degree ratio c_deg, 1/2 <= c_deg < 1, 0 < c_ind <= 1 - c_deg.
/// With x = (1 - c_deg)/c_ind:
///   integer x:  k = (1+x)^c_ind
///   otherwise:  k = (1+fl)^(c_ind*ce - (1-c_deg)) * (1+ce)^((1-c_deg) - c_ind*fl).
/// Specializes to rate_constant_low(c) at c_deg = 1/2.
RateConstant rate_constant_high(double c_ind, double c_deg);

/// Exact two-sided growth comparison between Z(N, alpha) and Z(N+k, alpha):
/// lower_ok:  i(Z(N, alpha)) <= i(Z(N+k, alpha))
/// upper_ok:  i(Z(N+k, alpha)) * 2^k <= 3^k * i(Z(N, alpha))
struct MonotonicityReport {
    BigCount base_count;
    BigCount shifted_count;
    bool lower_ok = false;
    bool upper_ok = false;

    bool holds() const { return lower_ok && upper_ok; }
};

/// Checks the report above with exact arithmetic. Requires 1 <= alpha <= N
/// and k >= 0.
MonotonicityReport check_monotonicity(long long n, long long alpha, long long k);

}  // namespace iset
