#include "iset/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "iset/bounds.hpp"
#include "iset/certificate.hpp"
#include "iset/construct_high.hpp"
#include "iset/construct_low.hpp"
#include "iset/counting.hpp"
#include "iset/zykov.hpp"

namespace iset {

namespace {

int default_oracle_cap() {
    if (const char* env = std::getenv("ISET_ORACLE_CAP")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 0) return cap;
        } catch (const std::exception&) {
            // fall through to the default below
        }
    }
    return 24;
}

Graph read_graph(const std::string& path, std::istream& in) {
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(in, line))
            if (!line.empty()) break;
    } else {
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        while (std::getline(file, line))
            if (!line.empty()) break;
    }
    if (line.empty()) throw std::invalid_argument("no graph6 input found");
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return graph6_decode(line);
}

std::string regime_slug(CaseTag tag) {
    switch (tag) {
        case CaseTag::odd_apex: return "odd";
        case CaseTag::high_dense: return "high_dense";
        case CaseTag::high_general: return "high_general";
        case CaseTag::claim_join: return "claim";
        default: return "low";
    }
}

int cmd_construct(const std::string& regime, int n, int d, int alpha, const std::string& cert_out,
                  bool no_cert, const std::string& format, std::ostream& out, std::ostream& err) {
    ConstructionCertificate cert;
    if (regime == "low") {
        cert = construct_even(n, d, alpha);
    } else if (regime == "odd") {
        cert = construct_odd(n, d, alpha);
    } else if (regime == "high-dense") {
        cert = construct_high_dense(n, d, alpha);
    } else if (regime == "high-general") {
        cert = construct_high_general(n, d, alpha);
    } else {
        cert = construct_claim_lb(n, d);
    }
    // Structural self-check before emitting anything.
    VerifyOptions structural{0, 0};
    CertificateReport report = verify_certificate(cert, structural);
    if (!report.all_passed()) {
        for (const auto& c : report.checks)
            if (!c.skipped && !c.passed) err << "self-check failed: " << c.name << ": " << c.detail << "\n";
        return 2;
    }
    if (format == "json")
        out << certificate_to_json(cert) << "\n";
    else
        out << graph6_encode(cert.graph) << "\n";
    if (!no_cert) {
        std::string path = cert_out;
        if (path.empty()) {
            path = "cert_" + regime_slug(cert.tag) + "_n" + std::to_string(cert.n) + "_d" +
                   std::to_string(cert.d) + "_a" + std::to_string(cert.alpha) + ".json";
        }
        std::ofstream file(path);
        if (!file) throw std::invalid_argument("cannot write " + path);
        file << certificate_to_json(cert) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& input, int alpha, double c, const std::string& format,
               std::istream& in, std::ostream& out) {
    Graph g = read_graph(input, in);
    BoundReport report = verify_bounds(g, alpha, c);
    if (format == "csv")
        out << bound_report_to_csv(report);
    else
        out << bound_report_to_json(report) << "\n";
    return report.verified() ? 0 : 1;
}

int cmd_count(const std::string& input, bool with_polynomial, const std::string& format,
              std::istream& in, std::ostream& out) {
    Graph g = read_graph(input, in);
    BigCount count = count_independent_sets(g);
    Polynomial poly;
    int alpha;
    if (with_polynomial) {
        poly = independence_polynomial(g);
        alpha = static_cast<int>(poly.size()) - 1;
    } else {
        alpha = independence_number(g);
    }
    if (format == "csv") {
        out << "# count-v1 n=" << g.num_vertices() << " edges=" << g.num_edges() << "\n";
        out << "quantity,value\n";
        out << "count," << count.get_str() << "\n";
        out << "alpha," << alpha << "\n";
        if (with_polynomial)
            for (size_t i = 0; i < poly.size(); ++i) out << "coeff_" << i << "," << poly[i].get_str() << "\n";
    } else {
        nlohmann::json j;
        j["format"] = "count-v1";
        j["n"] = g.num_vertices();
        j["edges"] = g.num_edges();
        j["count"] = count.get_str();
        j["alpha"] = alpha;
        if (with_polynomial) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& coef : poly) coeffs.push_back(coef.get_str());
            j["polynomial"] = std::move(coeffs);
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct SweepTask {
    int n = 0;
    int d = 0;
    int alpha = 0;
};

struct SweepRow {
    SweepTask task;
    std::string case_name;
    std::string structure;
    std::string alpha_exact;
    std::string count_dominates;
    bool failed = false;
};

std::vector<SweepTask> enumerate_tasks(const std::string& regime, int n_min, int n_max) {
    std::vector<SweepTask> tasks;
    if (regime == "low") {
        for (int n = std::max(4, n_min + (n_min % 2)); n <= n_max; n += 2)
            for (int alpha = 2; alpha <= n / 2; ++alpha) {
                DegreeRange r = degree_range_low_case(n, alpha);
                for (int d = r.min_degree; d <= r.max_degree; ++d) tasks.push_back({n, d, alpha});
            }
    } else if (regime == "odd") {
        int start = std::max(5, n_min);
        if (start % 2 == 0) ++start;
        for (int n = start; n <= n_max; n += 2)
            for (int alpha = 2; alpha <= (n - 1) / 2; ++alpha) {
                DegreeRange r = degree_range_odd(n, alpha);
                int d0 = r.min_degree + (r.min_degree % 2);
                for (int d = d0; d <= r.max_degree; d += 2) tasks.push_back({n, d, alpha});
            }
    } else if (regime == "high-dense") {
        for (int n = std::max(4, n_min); n <= n_max; ++n)
            for (int d = (n + 1) / 2; d < n; ++d)
                for (int alpha = 2; alpha <= n - d; ++alpha)
                    if (!construct_high_dense_rejection(n, d, alpha)) tasks.push_back({n, d, alpha});
    } else if (regime == "high-general") {
        for (int n = std::max(4, n_min); n <= n_max; ++n)
            for (int d = (n + 1) / 2; d < n; ++d)
                for (int alpha = 2; alpha <= n - d; ++alpha)
                    if (!construct_high_general_rejection(n, d, alpha)) tasks.push_back({n, d, alpha});
    } else if (regime == "claim") {
        for (int n = std::max(2, n_min); n <= n_max; ++n)
            for (int d = (n + 1) / 2; d < n; ++d)
                if (!construct_claim_lb_rejection(n, d)) tasks.push_back({n, d, n - d});
    } else {
        throw std::invalid_argument("unknown sweep regime '" + regime + "'");
    }
    return tasks;
}

SweepRow run_sweep_task(const std::string& regime, const SweepTask& t, int oracle_cap) {
    SweepRow row;
    row.task = t;
    ConstructionCertificate cert;
    if (regime == "low")
        cert = construct_even(t.n, t.d, t.alpha);
    else if (regime == "odd")
        cert = construct_odd(t.n, t.d, t.alpha);
    else if (regime == "high-dense")
        cert = construct_high_dense(t.n, t.d, t.alpha);
    else if (regime == "high-general")
        cert = construct_high_general(t.n, t.d, t.alpha);
    else
        cert = construct_claim_lb(t.n, t.d);
    row.case_name = to_string(cert.tag);
    VerifyOptions opts{oracle_cap, oracle_cap};
    CertificateReport report = verify_certificate(cert, opts);
    bool structure_ok = true;
    for (const auto& c : report.checks) {
        if (c.name == "alpha_exact") {
            row.alpha_exact = c.skipped ? "s" : (c.passed ? "1" : "0");
        } else if (c.name == "count_dominates") {
            row.count_dominates = c.skipped ? "s" : (c.passed ? "1" : "0");
        } else if (!c.skipped && !c.passed) {
            structure_ok = false;
        }
    }
    row.structure = structure_ok ? "1" : "0";
    row.failed = !report.all_passed();
    return row;
}

int cmd_sweep(const std::string& regime, int n_min, int n_max, int threads, int oracle_cap,
              const std::string& output, std::ostream& out, std::ostream& err) {
    std::vector<SweepTask> tasks = enumerate_tasks(regime, n_min, n_max);
    std::vector<SweepRow> rows(tasks.size());
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::atomic<bool> had_error{false};
    std::string first_error;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                rows[i] = run_sweep_task(regime, tasks[i], oracle_cap);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!had_error.exchange(true))
                    first_error = "task n=" + std::to_string(tasks[i].n) + " d=" + std::to_string(tasks[i].d) +
                                  " a=" + std::to_string(tasks[i].alpha) + ": " + e.what();
            }
        }
    };
    int thread_count = std::max(1, threads);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (had_error) throw std::invalid_argument(first_error);

    std::ostringstream body;
    body << "# sweep-v1 regime=" << regime << " n_min=" << n_min << " n_max=" << n_max
         << " oracle_cap=" << oracle_cap << "\n";
    body << "n,d,alpha,case,structure,alpha_exact,count_dominates,status\n";
    bool any_failed = false;
    for (const auto& row : rows) {
        body << row.task.n << ',' << row.task.d << ',' << row.task.alpha << ',' << row.case_name << ','
             << row.structure << ',' << row.alpha_exact << ',' << row.count_dominates << ','
             << (row.failed ? "fail" : "pass") << "\n";
        if (row.failed) any_failed = true;
    }
    if (output.empty() || output == "-") {
        out << body.str();
    } else {
        std::ofstream file(output);
        if (!file) throw std::invalid_argument("cannot write " + output);
        file << body.str();
        err << "wrote " << rows.size() << " rows to " << output << "\n";
    }
    return any_failed ? 1 : 0;
}

int cmd_converge(double c_ind, std::optional<double> c_deg, long long n_max, long long n_start,
                 std::ostream& out) {
    RateConstant limit = c_deg ? rate_constant_high(c_ind, *c_deg) : rate_constant_low(c_ind);
    out << "# converge-v1 c_ind=" << c_ind;
    if (c_deg) out << " c_deg=" << *c_deg;
    out << " limit_log2=" << limit.log2_value << "\n";
    out << "n,alpha,d,rate_per_vertex,limit_log2,gap\n";
    std::vector<long long> schedule;
    for (long long n = n_start; n < n_max; n *= 2) schedule.push_back(n);
    schedule.push_back(n_max);
    out.precision(12);
    for (long long n : schedule) {
        long long alpha = static_cast<long long>(c_ind * static_cast<double>(n));
        long long profile_n;
        long long d = 0;
        if (c_deg) {
            d = static_cast<long long>(*c_deg * static_cast<double>(n));
            profile_n = n - d;
        } else {
            profile_n = n / 2;
        }
        if (alpha < 1 || alpha > profile_n)
            throw std::invalid_argument("ratio yields no valid profile at n=" + std::to_string(n));
        double per_vertex = convergence_rate(profile_n, alpha) / static_cast<double>(n);
        out << n << ',' << alpha << ',' << d << ',' << per_vertex << ',' << limit.log2_value << ','
            << std::abs(per_vertex - limit.log2_value) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for independent-set extremal constructions in regular graphs"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a certified extremal construction");
    bool f_low = false, f_odd = false, f_dense = false, f_general = false, f_claim = false;
    auto* g_low = construct->add_flag("--low", f_low, "even order, low degree");
    auto* g_odd = construct->add_flag("--odd", f_odd, "odd order, low degree");
    auto* g_dense = construct->add_flag("--high-dense", f_dense, "high degree, dense center");
    auto* g_general = construct->add_flag("--high-general", f_general, "high degree, circulant overlay");
    auto* g_claim = construct->add_flag("--claim", f_claim, "independent side joined to a circulant");
    g_low->excludes(g_odd)->excludes(g_dense)->excludes(g_general)->excludes(g_claim);
    g_odd->excludes(g_dense)->excludes(g_general)->excludes(g_claim);
    g_dense->excludes(g_general)->excludes(g_claim);
    g_general->excludes(g_claim);
    int c_n = 0, c_d = 0, c_alpha = -1;
    construct->add_option("-n,--order", c_n, "number of vertices")->required();
    construct->add_option("-d,--degree", c_d, "regular degree")->required();
    construct->add_option("-a,--alpha", c_alpha, "independence number target");
    std::string cert_out, c_format = "graph6";
    bool no_cert = false;
    construct->add_option("--cert-out", cert_out, "certificate path (default cert_<regime>_n<n>_d<d>_a<a>.json)");
    construct->add_flag("--no-cert", no_cert, "skip writing the certificate file");
    construct->add_option("--format", c_format, "stdout format")->check(CLI::IsMember({"graph6", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "evaluate all applicable bounds against exact counts");
    std::string v_input = "-", v_format = "json";
    int v_alpha = -1;
    double v_c = 1.0;
    verify->add_option("input", v_input, "graph6 file, or - for stdin");
    verify->add_option("--alpha", v_alpha, "claimed independence bound")->required();
    verify->add_option("--c", v_c, "free constant for the parametric bounds (default 1)");
    verify->add_option("--format", v_format, "output format")->check(CLI::IsMember({"json", "csv"}));

    // count
    auto* count = app.add_subcommand("count", "exact independent-set count of a graph6 input");
    std::string k_input = "-", k_format = "json";
    bool k_poly = false;
    count->add_option("input", k_input, "graph6 file, or - for stdin");
    count->add_flag("--polynomial", k_poly, "also report the full size distribution");
    count->add_option("--format", k_format, "output format")->check(CLI::IsMember({"json", "csv"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "construct and verify whole parameter ranges");
    std::string s_regime, s_output;
    int s_nmin = 0, s_nmax = 0, s_threads = 1, s_cap = default_oracle_cap();
    sweep->add_option("--regime", s_regime, "low, odd, high-dense, high-general, or claim")
        ->required()
        ->check(CLI::IsMember({"low", "odd", "high-dense", "high-general", "claim"}));
    sweep->add_option("--n-min", s_nmin, "smallest order (default regime minimum)");
    sweep->add_option("--n-max", s_nmax, "largest order")->required();
    sweep->add_option("--threads", s_threads, "worker threads (default 1)");
    sweep->add_option("--oracle-cap", s_cap, "largest order checked exactly (env ISET_ORACLE_CAP)");
    sweep->add_option("-o,--output", s_output, "CSV file, or - for stdout");

    // converge
    auto* converge = app.add_subcommand("converge", "growth-rate convergence toward the limit constant");
    double cv_cind = 0.0, cv_cdeg_raw = -1.0;
    long long cv_nmax = 1000000, cv_nstart = 1000;
    converge->add_option("--c-ind", cv_cind, "independence ratio")->required();
    converge->add_option("--c-deg", cv_cdeg_raw, "degree ratio (high regime)");
    converge->add_option("--n-max", cv_nmax, "largest order in the schedule (default 1e6)");
    converge->add_option("--n-start", cv_nstart, "first order in the doubling schedule (default 1000)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) {
            int regimes = (f_low ? 1 : 0) + (f_odd ? 1 : 0) + (f_dense ? 1 : 0) + (f_general ? 1 : 0) +
                          (f_claim ? 1 : 0);
            if (regimes != 1) {
                err << "choose exactly one of --low, --odd, --high-dense, --high-general, --claim\n";
                return 2;
            }
            std::string regime = f_low ? "low" : f_odd ? "odd" : f_dense ? "high-dense"
                                  : f_general ? "high-general" : "claim";
            if (!f_claim && c_alpha < 0) {
                err << "this regime needs --alpha\n";
                return 2;
            }
            return cmd_construct(regime, c_n, c_d, c_alpha, cert_out, no_cert, c_format, out, err);
        }
        if (verify->parsed()) return cmd_verify(v_input, v_alpha, v_c, v_format, in, out);
        if (count->parsed()) return cmd_count(k_input, k_poly, k_format, in, out);
        if (sweep->parsed()) return cmd_sweep(s_regime, s_nmin, s_nmax, s_threads, s_cap, s_output, out, err);
        if (converge->parsed()) {
            std::optional<double> cv_cdeg;
            if (cv_cdeg_raw >= 0.0) cv_cdeg = cv_cdeg_raw;
            return cmd_converge(cv_cind, cv_cdeg, cv_nmax, cv_nstart, out);
        }
        err << "no subcommand given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace iset
