#include "iset/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "iset/construct_high.hpp"
#include "iset/counting.hpp"
#include "iset/zykov.hpp"

namespace iset {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::divisible: return "DIVISIBLE";
        case CaseTag::equal_counts: return "EQUAL_COUNTS";
        case CaseTag::big_majority: return "BIG_MAJORITY";
        case CaseTag::small_majority_gap2: return "SMALL_MAJORITY_GAP2";
        case CaseTag::small_majority_gap1: return "SMALL_MAJORITY_GAP1";
        case CaseTag::odd_apex: return "ODD_APEX";
        case CaseTag::high_dense: return "HIGH_DENSE";
        case CaseTag::high_general: return "HIGH_GENERAL";
        case CaseTag::claim_join: return "CLAIM_JOIN";
    }
    throw std::logic_error("unknown case tag");
}

CaseTag case_tag_from_string(const std::string& s) {
    static const std::pair<const char*, CaseTag> table[] = {
        {"DIVISIBLE", CaseTag::divisible},
        {"EQUAL_COUNTS", CaseTag::equal_counts},
        {"BIG_MAJORITY", CaseTag::big_majority},
        {"SMALL_MAJORITY_GAP2", CaseTag::small_majority_gap2},
        {"SMALL_MAJORITY_GAP1", CaseTag::small_majority_gap1},
        {"ODD_APEX", CaseTag::odd_apex},
        {"HIGH_DENSE", CaseTag::high_dense},
        {"HIGH_GENERAL", CaseTag::high_general},
        {"CLAIM_JOIN", CaseTag::claim_join},
    };
    for (auto [name, tag] : table)
        if (s == name) return tag;
    throw std::invalid_argument("unknown case tag '" + s + "'");
}

bool CertificateReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.skipped && !c.passed) return false;
    return true;
}

const CheckResult* CertificateReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

bool is_low_or_odd(CaseTag tag) {
    switch (tag) {
        case CaseTag::divisible:
        case CaseTag::equal_counts:
        case CaseTag::big_majority:
        case CaseTag::small_majority_gap2:
        case CaseTag::small_majority_gap1:
        case CaseTag::odd_apex:
            return true;
        default:
            return false;
    }
}

void add_check(CertificateReport& report, std::string name, bool passed, std::string detail = "") {
    report.checks.push_back({std::move(name), passed, false, std::move(detail)});
}

void add_skip(CertificateReport& report, std::string name, std::string detail) {
    report.checks.push_back({std::move(name), true, true, std::move(detail)});
}

bool is_clique(const Graph& g, const std::vector<int>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) return false;
    return true;
}

// Checks that `cover` partitions exactly the vertex set `region` into
// cliques of g.
std::string cover_failure(const Graph& g, const std::vector<VertexSet>& cover,
                          const std::vector<int>& region, int expected_sets) {
    if (static_cast<int>(cover.size()) != expected_sets)
        return "expected " + std::to_string(expected_sets) + " cliques, found " + std::to_string(cover.size());
    std::vector<int> seen(static_cast<size_t>(g.num_vertices()), 0);
    for (const auto& vs : cover) {
        if (vs.universe != g.num_vertices()) return "cover set universe mismatch";
        if (vs.members.empty()) return "empty cover set";
        if (!is_clique(g, vs.members)) return "cover set is not a clique";
        for (int v : vs.members)
            if (++seen[static_cast<size_t>(v)] > 1) return "vertex " + std::to_string(v) + " covered twice";
    }
    for (int v : region)
        if (seen[static_cast<size_t>(v)] != 1) return "vertex " + std::to_string(v) + " not covered";
    long long covered = 0;
    for (int c : seen) covered += c;
    if (covered != static_cast<long long>(region.size())) return "cover leaks outside the region";
    return "";
}

// Decomposes the induced witness subgraph into connected components and
// checks each is a complete clique, returning the sorted size list.
bool clique_components(const Graph& h, std::vector<long long>& sizes) {
    int n = h.num_vertices();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (visited[static_cast<size_t>(s)]) continue;
        std::vector<int> comp{s};
        visited[static_cast<size_t>(s)] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int u : h.neighbors(comp[head]))
                if (!visited[static_cast<size_t>(u)]) {
                    visited[static_cast<size_t>(u)] = 1;
                    comp.push_back(u);
                }
        if (!is_clique(h, comp)) return false;
        sizes.push_back(static_cast<long long>(comp.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return true;
}

}  // namespace

CertificateReport verify_certificate(const ConstructionCertificate& cert, const VerifyOptions& options) {
    CertificateReport report;
    const Graph& g = cert.graph;

    add_check(report, "graph_order", g.num_vertices() == cert.n,
              g.num_vertices() == cert.n ? "" : "graph has " + std::to_string(g.num_vertices()) +
                                                    " vertices, certificate says " + std::to_string(cert.n));

    auto degree = g.regular_degree();
    add_check(report, "regular_degree", degree.has_value() && *degree == cert.d,
              degree ? (*degree == cert.d ? "" : "degree " + std::to_string(*degree) + " != " + std::to_string(cert.d))
                     : "graph is not regular");

    // Witness: its induced subgraph must be exactly the target clique profile.
    {
        bool ok = cert.zykov_witness.universe == g.num_vertices() &&
                  cert.zykov_witness.size() == cert.zykov_n;
        std::string detail;
        if (!ok) {
            detail = "witness has " + std::to_string(cert.zykov_witness.size()) + " vertices, expected " +
                     std::to_string(cert.zykov_n);
        } else {
            Graph h = induced_subgraph(g, cert.zykov_witness);
            std::vector<long long> sizes;
            if (!clique_components(h, sizes)) {
                ok = false;
                detail = "witness component is not a clique";
            } else {
                ZykovProfile p = zykov_profile(cert.zykov_n, cert.zykov_alpha);
                std::vector<long long> expected;
                for (long long i = 0; i < p.num_small; ++i) expected.push_back(p.small_size);
                for (long long i = 0; i < p.num_large; ++i) expected.push_back(p.large_size);
                std::sort(expected.begin(), expected.end());
                if (sizes != expected) {
                    ok = false;
                    detail = "witness clique sizes do not match the target profile";
                }
            }
        }
        add_check(report, "witness_profile", ok, detail);
    }

    if (is_low_or_odd(cert.tag)) {
        std::vector<int> region(static_cast<size_t>(g.num_vertices()));
        for (int v = 0; v < g.num_vertices(); ++v) region[static_cast<size_t>(v)] = v;
        std::string err = cover_failure(g, cert.clique_cover, region, cert.alpha);
        add_check(report, "clique_cover", err.empty(), err);
    } else if (cert.tag == CaseTag::high_dense || cert.tag == CaseTag::high_general) {
        std::vector<int> region = cert.side_x;
        region.insert(region.end(), cert.side_y.begin(), cert.side_y.end());
        std::string err = cover_failure(g, cert.clique_cover, region, cert.alpha);
        add_check(report, "clique_cover", err.empty(), err);

        const std::vector<int>& join_targets =
            cert.tag == CaseTag::high_dense ? region : cert.side_y;
        bool join_ok = true;
        for (int w : cert.side_w) {
            for (int u : join_targets)
                if (!g.has_edge(w, u)) {
                    join_ok = false;
                    break;
                }
            if (!join_ok) break;
        }
        add_check(report, "join_complete", join_ok, join_ok ? "" : "a center vertex misses a join edge");

        bool overlay_ok = cert.filler.has_value();
        std::string overlay_detail = overlay_ok ? "" : "certificate lacks the overlay spec";
        if (overlay_ok) {
            const CirculantSpec& spec = *cert.filler;
            bool order_ok = static_cast<int>(cert.filler_order.size()) == spec.m;
            for (int v : cert.filler_order)
                if (v < 0 || v >= g.num_vertices()) order_ok = false;
            if (!order_ok) {
                overlay_ok = false;
                overlay_detail = "overlay order is not a list of graph vertices of length m";
            } else {
                try {
                    Graph r = build_circulant(spec);
                    for (auto [p, q] : r.edges()) {
                        if (!g.has_edge(cert.filler_order[static_cast<size_t>(p)],
                                        cert.filler_order[static_cast<size_t>(q)])) {
                            overlay_ok = false;
                            overlay_detail = "overlay edge missing from the graph";
                            break;
                        }
                    }
                } catch (const std::invalid_argument& e) {
                    overlay_ok = false;
                    overlay_detail = std::string("overlay spec invalid: ") + e.what();
                }
            }
        }
        add_check(report, "overlay_edges", overlay_ok, overlay_detail);

        bool bound_ok = false;
        if (cert.filler.has_value()) {
            try {
                bound_ok = circulant_alpha_bound(*cert.filler) <= cert.alpha;
            } catch (const std::invalid_argument&) {
                bound_ok = false;
            }
        }
        add_check(report, "overlay_alpha", bound_ok,
                  bound_ok ? "" : "overlay independence bound exceeds the target");
    } else {  // claim_join
        bool indep = true;
        const auto& w = cert.zykov_witness.members;
        for (size_t i = 0; i < w.size() && indep; ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (g.has_edge(w[i], w[j])) {
                    indep = false;
                    break;
                }
        bool size_ok = cert.alpha == cert.n - cert.d && cert.zykov_witness.size() == cert.alpha;
        add_check(report, "witness_independent", indep && size_ok,
                  indep ? (size_ok ? "" : "witness size disagrees with n - d") : "witness contains an edge");
    }

    if (g.num_vertices() <= options.alpha_cap) {
        int actual = independence_number(g);
        add_check(report, "alpha_exact", actual == cert.alpha,
                  actual == cert.alpha ? "" : "independence number " + std::to_string(actual) +
                                                  " != " + std::to_string(cert.alpha));
    } else {
        add_skip(report, "alpha_exact", "beyond exact cap of " + std::to_string(options.alpha_cap));
    }

    if (g.num_vertices() <= options.count_cap) {
        BigCount actual = count_independent_sets(g);
        BigCount target = count_zykov(cert.zykov_n, cert.zykov_alpha);
        add_check(report, "count_dominates", actual >= target,
                  actual >= target ? "" : "count " + actual.get_str() + " below target " + target.get_str());
    } else {
        add_skip(report, "count_dominates", "beyond exact cap of " + std::to_string(options.count_cap));
    }

    return report;
}

std::string certificate_to_json(const ConstructionCertificate& cert) {
    nlohmann::json j;
    j["format"] = "construction-certificate-v1";
    j["case"] = to_string(cert.tag);
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["alpha"] = cert.alpha;
    j["zykov_n"] = cert.zykov_n;
    j["zykov_alpha"] = cert.zykov_alpha;
    j["graph6"] = graph6_encode(cert.graph);
    nlohmann::json cover = nlohmann::json::array();
    for (const auto& vs : cert.clique_cover) cover.push_back(vs.members);
    j["clique_cover"] = std::move(cover);
    j["zykov_witness"] = cert.zykov_witness.members;
    j["side_x"] = cert.side_x;
    j["side_y"] = cert.side_y;
    j["side_w"] = cert.side_w;
    if (cert.filler) {
        j["filler"] = {{"m", cert.filler->m}, {"r", cert.filler->r}, {"g", cert.filler->g},
                       {"order", cert.filler_order}};
    } else {
        j["filler"] = nullptr;
    }
    return j.dump(2);
}

ConstructionCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (j.value("format", "") != "construction-certificate-v1")
        throw std::invalid_argument("unknown certificate format");
    ConstructionCertificate cert;
    cert.tag = case_tag_from_string(j.at("case").get<std::string>());
    cert.n = j.at("n").get<int>();
    cert.d = j.at("d").get<int>();
    cert.alpha = j.at("alpha").get<int>();
    cert.zykov_n = j.at("zykov_n").get<int>();
    cert.zykov_alpha = j.at("zykov_alpha").get<int>();
    cert.graph = graph6_decode(j.at("graph6").get<std::string>());
    for (const auto& arr : j.at("clique_cover"))
        cert.clique_cover.emplace_back(arr.get<std::vector<int>>(), cert.n);
    cert.zykov_witness = VertexSet(j.at("zykov_witness").get<std::vector<int>>(), cert.n);
    cert.side_x = j.at("side_x").get<std::vector<int>>();
    cert.side_y = j.at("side_y").get<std::vector<int>>();
    cert.side_w = j.at("side_w").get<std::vector<int>>();
    if (!j.at("filler").is_null()) {
        const auto& f = j.at("filler");
        cert.filler = CirculantSpec{f.at("m").get<int>(), f.at("r").get<int>(), f.at("g").get<int>()};
        cert.filler_order = f.at("order").get<std::vector<int>>();
    }
    return cert;
}

}  // namespace iset
