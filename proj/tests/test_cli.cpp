#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iset/certificate.hpp"
#include "iset/cli.hpp"
#include "iset/graph.hpp"

using namespace iset;

namespace {

struct CliRun {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliRun result;
    result.exit_code = run_cli(args, in, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("help exits cleanly") {
    CliRun r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("construct") != std::string::npos);
    CHECK(run({"construct", "--help"}).exit_code == 0);
}

TEST_CASE("bad invocations exit with 2") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"construct", "-n", "8", "-d", "4", "-a", "2"}).exit_code == 2);  // no regime
    CHECK(run({"construct", "--low", "--odd", "-n", "8", "-d", "4", "-a", "2"}).exit_code == 2);
    CHECK(run({"construct", "--low", "-d", "4", "-a", "2"}).exit_code == 2);    // missing -n
    CHECK(run({"construct", "--low", "-n", "8", "-d", "4"}).exit_code == 2);    // missing --alpha
    CHECK(run({"sweep", "--regime", "bogus", "--n-max", "8"}).exit_code == 2);
}

TEST_CASE("construct emits deterministic graph6") {
    CliRun r = run({"construct", "--low", "-n", "8", "-d", "4", "-a", "2", "--no-cert"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "G`z\\bc\n");
    Graph g = graph6_decode("G`z\\bc");
    CHECK(g.regular_degree() == 4);

    CliRun again = run({"construct", "--low", "-n", "8", "-d", "4", "-a", "2", "--no-cert"});
    CHECK(again.out == r.out);
}

TEST_CASE("construct json output carries the certificate") {
    CliRun r = run({"construct", "--odd", "-n", "13", "-d", "4", "-a", "6", "--no-cert",
                    "--format", "json"});
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("format") == "construction-certificate-v1");
    CHECK(j.at("case") == "ODD_APEX");
    CHECK(j.at("n") == 13);
    ConstructionCertificate cert = certificate_from_json(r.out);
    CHECK(verify_certificate(cert).all_passed());
}

TEST_CASE("construct writes a loadable certificate file") {
    std::string path = "/tmp/iset_cli_cert_test.json";
    std::remove(path.c_str());
    CliRun r = run({"construct", "--high-dense", "-n", "10", "-d", "8", "-a", "2",
                    "--cert-out", path});
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ConstructionCertificate cert = certificate_from_json(text);
    CHECK(cert.tag == CaseTag::high_dense);
    CHECK(verify_certificate(cert).all_passed());
    std::remove(path.c_str());
}

TEST_CASE("construct rejects invalid parameters with exit 2") {
    CliRun r = run({"construct", "--low", "-n", "7", "-d", "4", "-a", "2", "--no-cert"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"construct", "--odd", "-n", "17", "-d", "6", "-a", "4", "--no-cert"}).exit_code == 2);
    CHECK(run({"construct", "--claim", "-n", "7", "-d", "5", "--no-cert"}).exit_code == 2);
}

TEST_CASE("verify accepts a correct claim and rejects an understated one") {
    // C5 as graph6, fed through stdin
    CliRun good = run({"verify", "-", "--alpha", "2"}, "Dhc\n");
    CHECK(good.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(good.out);
    CHECK(j.at("verified") == true);
    CHECK(j.at("count") == "11");

    CliRun bad = run({"verify", "-", "--alpha", "1"}, "Dhc\n");
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.out).at("verified") == false);

    CliRun csv = run({"verify", "-", "--alpha", "2", "--format", "csv"}, "Dhc\n");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("# bound-report-v1", 0) == 0);
}

TEST_CASE("verify reads graph6 from a file argument") {
    std::string path = "/tmp/iset_cli_verify_input.g6";
    {
        std::ofstream file(path);
        file << "Dhc\n";
    }
    CliRun r = run({"verify", path, "--alpha", "2"});
    CHECK(r.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("count reports exact values and polynomials") {
    CliRun empty_pair = run({"count", "-"}, "A?\n");
    CHECK(empty_pair.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(empty_pair.out);
    CHECK(j.at("count") == "4");
    CHECK(j.at("n") == 2);

    CliRun poly = run({"count", "-", "--polynomial"}, "A?\n");
    nlohmann::json p = nlohmann::json::parse(poly.out);
    CHECK(p.at("polynomial") == nlohmann::json::array({"1", "2", "1"}));
    CHECK(p.at("alpha") == 2);

    CliRun edge = run({"count", "-"}, "A_\n");
    CHECK(nlohmann::json::parse(edge.out).at("count") == "3");

    CliRun csv = run({"count", "-", "--format", "csv"}, "A?\n");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("# count-v1", 0) == 0);

    CHECK(run({"count", "-"}, "!!\n").exit_code == 2);
    CHECK(run({"count", "/nonexistent/path.g6"}).exit_code == 2);
}

TEST_CASE("low sweep enumerates the full case ranges") {
    std::string path = "/tmp/iset_cli_sweep_low.csv";
    std::remove(path.c_str());
    CliRun r = run({"sweep", "--regime", "low", "--n-min", "4", "--n-max", "8", "--threads", "2",
                    "-o", path});
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("# sweep-v1 regime=low n_min=4 n_max=8", 0) == 0);
    CHECK(text.find("n,d,alpha,case,structure,alpha_exact,count_dominates,status") !=
          std::string::npos);
    CHECK(count_lines(text) == 2 + 16);  // header lines plus one row per (n, d, alpha)
    CHECK(text.find(",fail") == std::string::npos);
    CHECK(text.find("DIVISIBLE") != std::string::npos);

    // byte-identical on a second threaded run
    CliRun again = run({"sweep", "--regime", "low", "--n-min", "4", "--n-max", "8", "--threads",
                        "4", "-o", "-"});
    CHECK(again.out == text);
    std::remove(path.c_str());
}

TEST_CASE("remaining sweep regimes pass end to end") {
    for (auto [regime, nmax] : std::vector<std::pair<std::string, std::string>>{
             {"odd", "13"}, {"high-dense", "12"}, {"high-general", "12"}, {"claim", "10"}}) {
        CliRun r = run({"sweep", "--regime", regime, "--n-max", nmax, "-o", "-"});
        INFO("regime ", regime, " stderr: ", r.err);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find(",fail") == std::string::npos);
        CHECK(count_lines(r.out) > 2);
    }
}

TEST_CASE("oracle cap downgrades exact checks to skips") {
    CliRun r = run({"sweep", "--regime", "low", "--n-min", "4", "--n-max", "8", "--oracle-cap",
                    "4", "-o", "-"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(",s,s,pass") != std::string::npos);   // skipped beyond the cap
    CHECK(r.out.find(",1,1,pass") != std::string::npos);   // exact below it
}

TEST_CASE("oracle cap env variable sets the default") {
    setenv("ISET_ORACLE_CAP", "4", 1);
    CliRun r = run({"sweep", "--regime", "low", "--n-min", "6", "--n-max", "6", "-o", "-"});
    unsetenv("ISET_ORACLE_CAP");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("oracle_cap=4") != std::string::npos);
    CHECK(r.out.find(",s,s,pass") != std::string::npos);
}

TEST_CASE("convergence schedule approaches the limit") {
    CliRun r = run({"converge", "--c-ind", "0.333333333333", "--n-start", "64", "--n-max",
                    "4096"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("# converge-v1", 0) == 0);
    CHECK(r.out.find("n,alpha,d,rate_per_vertex,limit_log2,gap") != std::string::npos);

    // parse the last data row and check the gap is tiny
    std::istringstream lines(r.out);
    std::string line, last;
    while (std::getline(lines, line))
        if (!line.empty()) last = line;
    CHECK(last.rfind("4096,", 0) == 0);
    double gap = std::stod(last.substr(last.rfind(',') + 1));
    CHECK(gap < 1e-3);

    CliRun high = run({"converge", "--c-ind", "0.2", "--c-deg", "0.6", "--n-start", "64",
                       "--n-max", "1024"});
    CHECK(high.exit_code == 0);
    CHECK(high.out.find("c_deg=0.6") != std::string::npos);

    CHECK(run({"converge", "--c-ind", "0.9"}).exit_code == 2);  // outside (0, 1/2]
}
