#include "iset/zykov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iset {

ZykovProfile zykov_profile(long long n, long long alpha) {
    if (n < 0) throw std::invalid_argument("clique-profile size must be nonnegative, got " + std::to_string(n));
    if (alpha < 0 || alpha > n)
        throw std::invalid_argument("independence target " + std::to_string(alpha) +
                                    " outside [0, " + std::to_string(n) + "]");
    if (n > 0 && alpha == 0)
        throw std::invalid_argument("independence target 0 requires an empty graph");
    ZykovProfile p;
    if (n == 0) return p;
    long long f = n / alpha;
    long long r = n % alpha;
    p.small_size = f;
    if (r == 0) {
        p.large_size = f;
        p.num_small = alpha;
        p.num_large = 0;
    } else {
        p.large_size = f + 1;
        p.num_small = alpha - r;
        p.num_large = r;
    }
    return p;
}

Graph build_zykov(int n, int alpha) {
    ZykovProfile p = zykov_profile(n, alpha);
    Graph g(n);
    int next = 0;
    auto add_clique = [&](long long size) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) g.add_edge(next + i, next + j);
        next += static_cast<int>(size);
    };
    for (long long c = 0; c < p.num_small; ++c) add_clique(p.small_size);
    for (long long c = 0; c < p.num_large; ++c) add_clique(p.large_size);
    return g;
}

BigCount count_zykov(long long n, long long alpha) {
    ZykovProfile p = zykov_profile(n, alpha);
    BigCount result = 1;
    BigCount factor;
    if (p.num_small > 0) {
        mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(p.small_size + 1),
                      static_cast<unsigned long>(p.num_small));
        result *= factor;
    }
    if (p.num_large > 0) {
        mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(p.large_size + 1),
                      static_cast<unsigned long>(p.num_large));
        result *= factor;
    }
    return result;
}

Polynomial zykov_polynomial(long long n, long long alpha) {
    ZykovProfile p = zykov_profile(n, alpha);
    Polynomial poly{BigCount(1)};
    auto multiply_factor = [&](long long size, long long times) {
        // poly *= (1 + size*x), repeated `times` times.
        BigCount s(static_cast<unsigned long>(size));
        for (long long t = 0; t < times; ++t) {
            Polynomial next(poly.size() + 1, BigCount(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] += poly[i] * s;
            }
            poly = std::move(next);
        }
    };
    multiply_factor(p.small_size, p.num_small);
    multiply_factor(p.large_size, p.num_large);
    return poly;
}

double convergence_rate(long long n, long long alpha) {
    ZykovProfile p = zykov_profile(n, alpha);
    double total = 0.0;
    if (p.num_small > 0) total += static_cast<double>(p.num_small) * std::log2(1.0 + static_cast<double>(p.small_size));
    if (p.num_large > 0) total += static_cast<double>(p.num_large) * std::log2(1.0 + static_cast<double>(p.large_size));
    return total;
}

double RateConstant::base() const { return std::exp2(log2_value); }

namespace {

// Integer detection with relative tolerance; returns the integer when close.
bool near_integer(double x, long long& out) {
    double r = std::round(x);
    if (std::abs(x - r) <= kIntegralityTol * std::max(1.0, std::abs(x))) {
        out = static_cast<long long>(r);
        return true;
    }
    return false;
}

// Shared interpolation: k = (1+x)^weight at integer x, otherwise
// (1+fl)^(weight_hi) * (1+ce)^(weight_lo) with the exponents summing to
// `scale` so the value geometrically interpolates the endpoints.
double interpolated_log2(double x, double scale, double offset) {
    // Exponents: scale*ce - offset on the floor factor, offset - scale*fl on
    // the ceiling factor.
    long long xi;
    if (near_integer(x, xi)) return scale * std::log2(1.0 + static_cast<double>(xi));
    double fl = std::floor(x);
    double ce = fl + 1.0;
    double e_floor = scale * ce - offset;
    double e_ceil = offset - scale * fl;
    return e_floor * std::log2(1.0 + fl) + e_ceil * std::log2(1.0 + ce);
}

}  // namespace

RateConstant rate_constant_low(double c) {
    if (!(c > 0.0) || c > 0.5)
        throw std::invalid_argument("independence ratio must lie in (0, 1/2], got " + std::to_string(c));
    double y = 1.0 / (2.0 * c);
    return RateConstant{interpolated_log2(y, c, 0.5)};
}

RateConstant rate_constant_high(double c_ind, double c_deg) {
    if (!(c_deg >= 0.5) || !(c_deg < 1.0))
        throw std::invalid_argument("degree ratio must lie in [1/2, 1), got " + std::to_string(c_deg));
    if (!(c_ind > 0.0) || c_ind > 1.0 - c_deg + 1e-15)
        throw std::invalid_argument("independence ratio must lie in (0, 1 - degree ratio], got " +
                                    std::to_string(c_ind));
    double x = (1.0 - c_deg) / c_ind;
    return RateConstant{interpolated_log2(x, c_ind, 1.0 - c_deg)};
}

MonotonicityReport check_monotonicity(long long n, long long alpha, long long k) {
    if (alpha < 1 || alpha > n)
        throw std::invalid_argument("need 1 <= alpha <= n for the growth comparison");
    if (k < 0) throw std::invalid_argument("shift must be nonnegative, got " + std::to_string(k));
    MonotonicityReport r;
    r.base_count = count_zykov(n, alpha);
    r.shifted_count = count_zykov(n + k, alpha);
    BigCount lhs = r.shifted_count;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    BigCount rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 3, static_cast<unsigned long>(k));
    rhs *= r.base_count;
    r.lower_ok = r.base_count <= r.shifted_count;
    r.upper_ok = lhs <= rhs;
    return r;
}

}  // namespace iset
