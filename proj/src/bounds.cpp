#include "iset/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "iset/zykov.hpp"

namespace iset {

namespace {

double log2_big(const BigCount& x) {
    if (x <= 0) throw std::invalid_argument("log2 of a nonpositive count");
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

double error_term(int n, int d, double c) { return c * n * std::sqrt(std::log2(static_cast<double>(d)) / d); }

void check_common(int n, int d, int alpha) {
    if (n < 1) throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    if (d < 1 || d > n - 1)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
    if (alpha < 1 || alpha > n)
        throw std::invalid_argument("independence target " + std::to_string(alpha) + " outside [1, " +
                                    std::to_string(n) + "]");
}

}  // namespace

double smooth_container_bound(int n, int d, int alpha, double c) {
    check_common(n, d, alpha);
    return alpha * std::log2(1.0 + n / (2.0 * alpha)) + error_term(n, d, c);
}

double zykov_container_bound(int n, int d, int alpha, double c) {
    check_common(n, d, alpha);
    if (alpha > n / 2)
        throw std::invalid_argument("independence target " + std::to_string(alpha) +
                                    " exceeds half the order");
    return convergence_rate(n / 2, alpha) + error_term(n, d, c);
}

BigCount easy_container_bound(int n, int d, int alpha) {
    check_common(n, d, alpha);
    if (2 * d < n)
        throw std::invalid_argument("degree must be at least half the order, got " + std::to_string(d));
    if (alpha > n - d)
        throw std::invalid_argument("independence target " + std::to_string(alpha) + " exceeds " +
                                    std::to_string(n - d));
    return BigCount(n) * count_zykov(n - d, alpha);
}

BigCount degree_container_bound(int n, int d) {
    if (n < 1) throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    if (2 * d <= n || d >= n)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside (" + std::to_string(n) +
                                    "/2, " + std::to_string(n) + ")");
    BigCount result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(n - d));
    return BigCount(n) * result;
}

ContainerSizeReport container_size_formula(int n, int d, std::optional<int> phi, bool natural_log) {
    if (n < 1) throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    if (d < 1) throw std::invalid_argument("degree must be positive, got " + std::to_string(d));
    ContainerSizeReport report;
    report.natural_log = natural_log;
    if (phi) {
        report.phi = *phi;
    } else {
        double logd = natural_log ? std::log(static_cast<double>(d)) : std::log2(static_cast<double>(d));
        report.phi = static_cast<int>(std::floor(std::sqrt(d * logd)));
    }
    if (report.phi <= 0 || report.phi >= d)
        throw std::invalid_argument("split parameter " + std::to_string(report.phi) + " outside (0, " +
                                    std::to_string(d) + ")");
    report.defect_cap = static_cast<long long>(n) * d / (2LL * d - report.phi);
    long long limit = n / report.phi;
    report.family_count = 0;
    BigCount binom;
    for (long long i = 0; i <= limit && i <= n; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        report.family_count += binom;
    }
    report.family_log2 = log2_big(report.family_count);
    return report;
}

bool BoundReport::verified() const {
    if (!alpha_ok) return false;
    for (const auto& e : entries)
        if (e.applicable && e.certified && !e.satisfied) return false;
    return true;
}

BoundReport verify_bounds(const Graph& g, int alpha_claim, double c, const CountOptions& options) {
    if (alpha_claim < 0) throw std::invalid_argument("claimed independence bound must be nonnegative");
    BoundReport report;
    report.n = g.num_vertices();
    report.d = g.regular_degree();
    report.alpha_claim = alpha_claim;
    report.alpha_actual = independence_number(g);
    report.alpha_ok = report.alpha_actual <= alpha_claim;
    report.exact_count = count_independent_sets(g, options);
    report.exact_log2 = log2_big(report.exact_count);
    int n = report.n;

    {
        BoundEntry e{"zykov_total", alpha_claim >= 1 && alpha_claim <= n, true, true, 0.0};
        if (e.applicable) {
            BigCount target = count_zykov(n, alpha_claim);
            e.log2_value = log2_big(target);
            e.satisfied = report.exact_count <= target;
        }
        report.entries.push_back(e);
    }
    {
        bool ap = report.d && 2 * *report.d >= n && alpha_claim >= 1 && alpha_claim <= n - *report.d;
        BoundEntry e{"easy_container", ap, true, true, 0.0};
        if (ap) {
            BigCount target = easy_container_bound(n, *report.d, alpha_claim);
            e.log2_value = log2_big(target);
            e.satisfied = report.exact_count <= target;
        }
        report.entries.push_back(e);
    }
    {
        bool ap = report.d && 2 * *report.d > n && *report.d < n;
        BoundEntry e{"degree_container", ap, true, true, 0.0};
        if (ap) {
            BigCount target = degree_container_bound(n, *report.d);
            e.log2_value = log2_big(target);
            e.satisfied = report.exact_count <= target;
        }
        report.entries.push_back(e);
    }
    {
        bool ap = report.d && *report.d >= 1 && 2 * *report.d <= n && alpha_claim >= 1;
        BoundEntry e{"smooth_container", ap, false, true, 0.0};
        if (ap) {
            e.log2_value = smooth_container_bound(n, *report.d, alpha_claim, c);
            e.satisfied = report.exact_log2 <= e.log2_value + kLogCompareSlack;
        }
        report.entries.push_back(e);
    }
    {
        bool ap = report.d && *report.d >= 1 && 2 * *report.d <= n && alpha_claim >= 1 &&
                  alpha_claim <= n / 2;
        BoundEntry e{"zykov_container", ap, false, true, 0.0};
        if (ap) {
            e.log2_value = zykov_container_bound(n, *report.d, alpha_claim, c);
            e.satisfied = report.exact_log2 <= e.log2_value + kLogCompareSlack;
        }
        report.entries.push_back(e);
    }
    return report;
}

std::string bound_report_to_json(const BoundReport& report) {
    nlohmann::json j;
    j["format"] = "bound-report-v1";
    j["n"] = report.n;
    if (report.d)
        j["d"] = *report.d;
    else
        j["d"] = nullptr;
    j["alpha_claim"] = report.alpha_claim;
    j["alpha_actual"] = report.alpha_actual;
    j["alpha_ok"] = report.alpha_ok;
    j["count"] = report.exact_count.get_str();
    j["log2_count"] = report.exact_log2;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json b;
        b["name"] = e.name;
        b["applicable"] = e.applicable;
        b["certified"] = e.certified;
        if (e.applicable) {
            b["satisfied"] = e.satisfied;
            b["log2_value"] = e.log2_value;
        } else {
            b["satisfied"] = nullptr;
            b["log2_value"] = nullptr;
        }
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    j["verified"] = report.verified();
    return j.dump(2);
}

std::string bound_report_to_csv(const BoundReport& report) {
    std::ostringstream out;
    out << "# bound-report-v1 n=" << report.n << " d=";
    if (report.d)
        out << *report.d;
    else
        out << "irregular";
    out << " alpha_claim=" << report.alpha_claim << " alpha_actual=" << report.alpha_actual
        << " alpha_ok=" << (report.alpha_ok ? 1 : 0) << " count=" << report.exact_count.get_str()
        << " log2_count=" << report.exact_log2 << " verified=" << (report.verified() ? 1 : 0) << "\n";
    out << "name,applicable,certified,satisfied,log2_value\n";
    out.precision(12);
    for (const auto& e : report.entries) {
        out << e.name << ',' << (e.applicable ? 1 : 0) << ',' << (e.certified ? 1 : 0) << ',';
        if (e.applicable)
            out << (e.satisfied ? 1 : 0) << ',' << e.log2_value;
        else
            out << ",";
        out << "\n";
    }
    return out.str();
}

}  // namespace iset
