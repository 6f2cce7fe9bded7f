#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "iset/construct_low.hpp"
#include "iset/counting.hpp"
#include "iset/zykov.hpp"

using namespace iset;
using namespace iset::testing;

namespace {

Graph drop_one_edge(const Graph& g) {
    Graph h(g.num_vertices());
    auto all = g.edges();
    for (std::size_t i = 1; i < all.size(); ++i) h.add_edge(all[i].first, all[i].second);
    return h;
}

void check_valid(const ConstructionCertificate& cert) {
    CertificateReport report = verify_certificate(cert);
    for (const CheckResult& c : report.checks) {
        INFO("check ", c.name, " n=", cert.n, " d=", cert.d, " alpha=", cert.alpha, ": ",
             c.detail);
        CHECK_FALSE(c.skipped);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("case classification from the clique profile") {
    CHECK(classify_case(8, 2) == CaseTag::divisible);
    CHECK(classify_case(10, 2) == CaseTag::equal_counts);
    CHECK(classify_case(12, 4) == CaseTag::equal_counts);
    CHECK(classify_case(14, 4) == CaseTag::big_majority);
    CHECK(classify_case(16, 3) == CaseTag::big_majority);
    CHECK(classify_case(12, 5) == CaseTag::small_majority_gap2);
    CHECK(classify_case(18, 4) == CaseTag::small_majority_gap2);
    CHECK(classify_case(8, 3) == CaseTag::small_majority_gap1);
    CHECK(classify_case(14, 3) == CaseTag::small_majority_gap1);
    CHECK_THROWS_AS(classify_case(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_case(8, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_case(8, 5), std::invalid_argument);
}

TEST_CASE("frozen degree ranges") {
    CHECK(degree_range_low(8, 2).min_degree == 4);
    CHECK(degree_range_low(8, 2).max_degree == 5);
    CHECK(degree_range_low_case(8, 2).min_degree == 3);
    CHECK(degree_range_low_case(8, 2).max_degree == 5);

    CHECK(degree_range_low(14, 3).min_degree == 5);
    CHECK(degree_range_low(14, 3).max_degree == 8);
    CHECK(degree_range_low_case(14, 3).min_degree == 5);
    CHECK(degree_range_low_case(14, 3).max_degree == 8);

    CHECK(degree_range_low(10, 5).min_degree == 2);
    CHECK(degree_range_low(10, 5).max_degree == 5);
    CHECK(degree_range_low_case(10, 5).min_degree == 1);

    CHECK(degree_range_low(16, 3).min_degree == 5);
    CHECK(degree_range_low_case(16, 3).max_degree == 9);

    CHECK(degree_range_low_case(10, 2).min_degree == 4);
    CHECK(degree_range_low_case(10, 2).max_degree == 6);
}

TEST_CASE("per-case range contains the shared range and tops out with it") {
    for (int n = 4; n <= 40; n += 2) {
        for (int alpha = 2; alpha <= n / 2; ++alpha) {
            DegreeRange shared = degree_range_low(n, alpha);
            DegreeRange per_case = degree_range_low_case(n, alpha);
            CHECK(per_case.min_degree <= shared.min_degree);
            CHECK(per_case.max_degree == shared.max_degree);
            CHECK(shared.min_degree <= shared.max_degree);
        }
    }
}

TEST_CASE("two-sided scaffold layout") {
    Graph base = base_graph_low(8, 2);
    // blocks {0,1} {2,3} | {4,5} {6,7}, pairwise joins across
    CHECK(base.num_vertices() == 8);
    CHECK(base.regular_degree() == 3);
    CHECK(base.has_edge(0, 1));
    CHECK(base.has_edge(0, 4));
    CHECK(base.has_edge(0, 5));
    CHECK_FALSE(base.has_edge(0, 2));
    CHECK_FALSE(base.has_edge(0, 6));

    // complementary clique sizes keep the scaffold regular here
    CHECK(base_graph_low(10, 2).regular_degree() == 4);
}

TEST_CASE("even construction on frozen parameter points") {
    for (auto [n, d, alpha] : std::vector<std::array<int, 3>>{
             {8, 4, 2}, {8, 5, 2}, {8, 3, 4}, {10, 4, 2}, {10, 6, 2}, {12, 5, 5},
             {14, 5, 3}, {14, 8, 3}, {14, 7, 4}, {16, 6, 3}, {18, 6, 4}}) {
        REQUIRE_FALSE(construct_even_rejection(n, d, alpha).has_value());
        ConstructionCertificate cert = construct_even(n, d, alpha);
        CHECK(cert.n == n);
        CHECK(cert.d == d);
        CHECK(cert.alpha == alpha);
        CHECK(cert.zykov_n == n / 2);
        CHECK(cert.zykov_alpha == alpha);
        CHECK(cert.tag == classify_case(n, alpha));
        CHECK(static_cast<int>(cert.clique_cover.size()) == alpha);
        check_valid(cert);
    }
}

TEST_CASE("even construction rejections") {
    CHECK(construct_even_rejection(7, 4, 2).has_value());    // odd order
    CHECK(construct_even_rejection(8, 4, 1).has_value());    // alpha too small
    CHECK(construct_even_rejection(8, 4, 5).has_value());    // alpha above n/2
    CHECK(construct_even_rejection(8, 2, 2).has_value());    // below case range
    CHECK(construct_even_rejection(8, 6, 2).has_value());    // above case range
    CHECK(construct_even_rejection(14, 4, 3).has_value());   // below gap-one range
    CHECK(construct_even_rejection(2, 1, 1).has_value());
    CHECK_THROWS_AS(construct_even(8, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_even(7, 4, 2), std::invalid_argument);
}

TEST_CASE("even sweep covers all five cases and verifies") {
    std::set<CaseTag> seen;
    for (int n = 4; n <= 14; n += 2) {
        for (int alpha = 2; alpha <= n / 2; ++alpha) {
            DegreeRange range = degree_range_low_case(n, alpha);
            for (int d = range.min_degree; d <= range.max_degree; ++d) {
                REQUIRE_FALSE(construct_even_rejection(n, d, alpha).has_value());
                ConstructionCertificate cert = construct_even(n, d, alpha);
                seen.insert(cert.tag);
                check_valid(cert);
            }
        }
    }
    CHECK(seen == std::set<CaseTag>{CaseTag::divisible, CaseTag::equal_counts,
                                    CaseTag::big_majority, CaseTag::small_majority_gap2,
                                    CaseTag::small_majority_gap1});
}

TEST_CASE("even construction is deterministic") {
    std::string a = graph6_encode(construct_even(14, 6, 3).graph);
    std::string b = graph6_encode(construct_even(14, 6, 3).graph);
    CHECK(a == b);
}

TEST_CASE("tampered certificates fail verification") {
    ConstructionCertificate cert = construct_even(12, 5, 3);
    check_valid(cert);

    ConstructionCertificate missing_edge = cert;
    missing_edge.graph = drop_one_edge(cert.graph);
    CertificateReport r1 = verify_certificate(missing_edge);
    CHECK_FALSE(r1.all_passed());
    CHECK_FALSE(r1.find("regular_degree")->passed);

    ConstructionCertificate wrong_alpha = cert;
    wrong_alpha.alpha = cert.alpha + 1;
    CertificateReport r2 = verify_certificate(wrong_alpha);
    CHECK_FALSE(r2.all_passed());

    ConstructionCertificate short_witness = cert;
    short_witness.zykov_witness =
        VertexSet(std::vector<int>(cert.zykov_witness.members.begin(),
                                   cert.zykov_witness.members.end() - 1),
                  cert.n);
    CertificateReport r3 = verify_certificate(short_witness);
    CHECK_FALSE(r3.find("witness_profile")->passed);

    ConstructionCertificate bad_cover = cert;
    bad_cover.clique_cover.pop_back();
    CertificateReport r4 = verify_certificate(bad_cover);
    CHECK_FALSE(r4.find("clique_cover")->passed);
}

TEST_CASE("frozen odd degree ranges") {
    DegreeRange r1 = degree_range_odd(13, 6);
    CHECK(r1.min_degree == 4);
    CHECK(r1.max_degree == 6);
    DegreeRange r2 = degree_range_odd(17, 4);
    CHECK(r2.min_degree == 8);
    CHECK(r2.max_degree == 9);
    DegreeRange r3 = degree_range_odd(21, 5);
    CHECK(r3.min_degree == 8);
    CHECK(r3.max_degree == 11);
}

TEST_CASE("odd construction on frozen parameter points") {
    for (auto [n, d, alpha] : std::vector<std::array<int, 3>>{
             {9, 4, 4}, {11, 4, 5}, {13, 4, 6}, {13, 6, 4}, {15, 6, 5}, {15, 6, 4},
             {21, 8, 5}}) {
        REQUIRE_FALSE(construct_odd_rejection(n, d, alpha).has_value());
        ConstructionCertificate cert = construct_odd(n, d, alpha);
        CHECK(cert.tag == CaseTag::odd_apex);
        CHECK(cert.n == n);
        CHECK(cert.zykov_n == (n - 1) / 2);
        CHECK(cert.graph.regular_degree() == d);
        // apex vertex sits in the first cover block
        CHECK(cert.clique_cover[0].contains(n - 1));
        CHECK(cert.side_w == std::vector<int>{n - 1});
        check_valid(cert);
    }
}

TEST_CASE("odd construction rejections") {
    CHECK(construct_odd_rejection(12, 4, 3).has_value());  // even order
    CHECK(construct_odd_rejection(13, 5, 4).has_value());  // odd degree
    CHECK(construct_odd_rejection(17, 6, 4).has_value());  // below range
    CHECK(construct_odd_rejection(13, 8, 6).has_value());  // above range
    CHECK(construct_odd_rejection(13, 4, 1).has_value());
    CHECK(construct_odd_rejection(13, 4, 7).has_value());  // alpha above (n-1)/2
    CHECK_THROWS_AS(construct_odd(17, 6, 4), std::invalid_argument);
}

TEST_CASE("odd sweep verifies everywhere") {
    for (int n = 5; n <= 15; n += 2) {
        for (int alpha = 2; alpha <= (n - 1) / 2; ++alpha) {
            DegreeRange range = degree_range_odd(n, alpha);
            for (int d = range.min_degree; d <= range.max_degree; ++d) {
                if (d % 2 != 0) continue;
                REQUIRE_FALSE(construct_odd_rejection(n, d, alpha).has_value());
                check_valid(construct_odd(n, d, alpha));
            }
        }
    }
}

TEST_CASE("certificates survive a json round trip") {
    ConstructionCertificate cert = construct_even(14, 6, 3);
    ConstructionCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.tag == cert.tag);
    CHECK(back.n == cert.n);
    CHECK(back.d == cert.d);
    CHECK(back.alpha == cert.alpha);
    CHECK(graph6_encode(back.graph) == graph6_encode(cert.graph));
    CHECK(back.zykov_witness.members == cert.zykov_witness.members);
    CHECK(back.clique_cover.size() == cert.clique_cover.size());
    check_valid(back);

    CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("{}"), std::invalid_argument);
}
