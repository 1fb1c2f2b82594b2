#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hdisc/report.hpp"

using namespace hdisc;
namespace fx = hdisc::fixtures;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_test_stdout.tmp";
    std::string cmd = std::string(HDISC_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    RunResult res;
    res.status = WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    std::remove(out_path.c_str());
    return res;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("analyze produces the clique threshold") {
    write_file("k3.el", format_edge_list(complete_graph(3)));
    RunResult res = run("analyze --input k3.el");
    REQUIRE(res.status == 0);
    Json j = Json::parse(res.out);
    CHECK(j["delta_star"]["num"] == "3");
    CHECK(j["delta_star"]["den"] == "4");

    SUBCASE("summary mode") {
        RunResult s = run("analyze --input k3.el --summary");
        CHECK(s.status == 0);
        CHECK(s.out.find("delta_star = 3/4") != std::string::npos);
    }
    SUBCASE("deterministic bytes") {
        RunResult again = run("analyze --input k3.el");
        CHECK(again.out == res.out);
    }
    std::remove("k3.el");
}

TEST_CASE("template subcommand with a butterfly frame") {
    write_file("h.el", format_edge_list(fx::k4_minus_edge()));
    RunResult res = run("template --input h.el --frame butterfly:2 --cross 20");
    REQUIRE(res.status == 0);
    Json j = Json::parse(res.out);
    CHECK(j["is_template"] == true);
    CHECK(j["cross_check"]["witness_found"] == true);
    CHECK(j["cross_check"]["conclusive"] == true);
    std::remove("h.el");
}

TEST_CASE("witness subcommand") {
    write_file("p3.el", format_edge_list(fx::path(3)));
    RunResult res = run("witness --input p3.el --recipe shared-rm1 --frame cliquepair:2:1:+-");
    REQUIRE(res.status == 0);
    Json j = Json::parse(res.out);
    CHECK(j["ok"] == true);
    CHECK(std::abs(j["expected_difference"].get<long>()) == 2);
    std::remove("p3.el");
}

TEST_CASE("oracle verify round trip") {
    Graph k3 = complete_graph(3);
    write_file("k3.el", format_edge_list(k3));
    Blowup b = expand({star_clique(3, +1), {1, 1, 1}});
    write_file("host.cel", format_colored_edge_list(b.colored));
    write_file("factor.json", to_json(ExplicitFactor{{{0, 1, 2}}}).dump());
    RunResult res = run("oracle verify --h k3.el --host host.cel --factor factor.json");
    REQUIRE(res.status == 0);
    Json j = Json::parse(res.out);
    CHECK(j["valid"] == true);
    CHECK(j["discrepancy"] == 1);
    std::remove("k3.el");
    std::remove("host.cel");
    std::remove("factor.json");
}

TEST_CASE("exit codes") {
    SUBCASE("missing file is a parse error") {
        CHECK(run("analyze --input does_not_exist.el").status == 2);
    }
    SUBCASE("malformed edge list is a parse error") {
        write_file("bad.el", "2\n0 0\n");
        CHECK(run("analyze --input bad.el").status == 2);
        std::remove("bad.el");
    }
    SUBCASE("contract violations exit 3") {
        write_file("empty.el", "3\n");
        CHECK(run("analyze --input empty.el").status == 3);
        std::remove("empty.el");
    }
    SUBCASE("unknown flags exit 2") {
        CHECK(run("analyze --nope").status == 2);
    }
}

TEST_CASE("delta0 subcommand on the second worked example") {
    write_file("ex2.el", format_edge_list(fx::example2()));
    RunResult res = run("delta0 --input ex2.el");
    REQUIRE(res.status == 0);
    Json j = Json::parse(res.out);
    CHECK(j["value"]["num"] == "5");
    CHECK(j["value"]["den"] == "8");
    std::remove("ex2.el");
}

TEST_CASE("lowerbound and hstar subcommands") {
    write_file("k3.el", format_edge_list(complete_graph(3)));
    RunResult lb = run("lowerbound --input k3.el --case regular-3/4 -m 12");
    REQUIRE(lb.status == 0);
    CHECK(Json::parse(lb.out)["min_degree_ratio"]["num"] == "3");
    RunResult hs = run("hstar --input k3.el --eta 1/10");
    REQUIRE(hs.status == 0);
    CHECK(Json::parse(hs.out)["trivial"] == false);
    std::remove("k3.el");
}
