#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stickel/cli.hpp"
#include "stickel/report.hpp"

using namespace stickel;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(Json::parse(line));
    return out;
}

std::string without_durations(const std::string& text) {
    std::string out;
    for (auto j : lines(text)) {
        j.erase("duration_ms");
        out += j.dump() + "\n";
    }
    return out;
}

std::size_t count_lines(const std::string& path) {
    std::ifstream in(path);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

}  // namespace

TEST_CASE("quad-class -p 131") {
    const Run r = run_cli({"quad-class", "-p", "131"});
    CHECK(r.code == 0);
    const auto js = lines(r.out);
    REQUIRE(!js.empty());
    CHECK(js[0]["check"] == "quad_class");
    CHECK(js[0]["witnesses"]["alternating_sum"] == "-655");
    CHECK(js[0]["witnesses"]["h"] == 5);
    CHECK(js[0]["witnesses"]["oracle"] == 5);
    CHECK(js[0]["status"] == "pass");
    for (const auto& j : js) {
        for (const char* field : {"check", "params", "status", "witnesses", "convention", "duration_ms"}) CHECK(j.contains(field));
    }
}

TEST_CASE("annihilator -p 137 --h 17") {
    const Run r = run_cli({"annihilator", "-p", "137", "--h", "17"});
    CHECK(r.code == 0);
    const auto js = lines(r.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["witnesses"]["D_minus"] == "X + 8");
    CHECK(js[0]["witnesses"]["d"] == 8);
    CHECK(js[0]["status"] == "pass");
}

TEST_CASE("regular-check -p 7") {
    const Run r = run_cli({"regular-check", "-p", "7"});
    CHECK(r.code == 0);
    CHECK(lines(r.out)[0]["witnesses"]["verdict"] == "regular");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"quad-class"}).code == 2);
    CHECK(run_cli({"quad-class", "-p", "abc"}).code == 2);
    CHECK(run_cli({"quad-class", "-p", "9"}).code == 2);
    CHECK(run_cli({"gauss", "-p", "5", "-q", "11", "--u", "3"}).code == 2);
    CHECK(run_cli({"scan", "--task", "nope"}).code == 2);
    CHECK(run_cli({"scan", "--p-range", "9-3"}).code == 2);
    CHECK(run_cli({"quad-class", "-p", "131", "--csv", "--json"}).code == 2);
    const Run r = run_cli({"gauss", "-p", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("-q") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("help exits 0") {
    const Run r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify-tables") != std::string::npos);
}

TEST_CASE("a failing check exits 1") {
    const Run r = run_cli({"singular-profile", "-p", "5", "-q", "19", "--alpha", "0,0,0,2,1"});
    CHECK(r.code == 1);
    CHECK(lines(r.out)[0]["status"] == "fail");
}

TEST_CASE("csv output") {
    const Run r = run_cli({"regular-check", "-p", "11", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(CheckReport::csv_header() + "\n", 0) == 0);
}

TEST_CASE("reports are deterministic") {
    const std::vector<std::string> args{"scan", "--task", "delta-g", "--p-range", "5..7", "--q-max", "80"};
    const Run a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(without_durations(a.out) == without_durations(b.out));
}

TEST_CASE("scan emits tasks in order") {
    const Run r = run_cli({"scan", "--task", "quad-class", "--p-range", "7..60"});
    int last = 0;
    for (const auto& j : lines(r.out)) {
        if (j["check"] != "quad_class") continue;
        const int p = j["params"]["p"];
        CHECK(p > last);
        last = p;
    }
    CHECK(last == 59);
}

TEST_CASE("results cache is reused unless disabled") {
    const std::string path = std::string(STICKEL_TEST_TMP) + "/cache_test.jsonl";
    std::remove(path.c_str());
    const std::vector<std::string> args{"scan", "--task", "psi", "--p-range", "5..7", "--q-max", "100", "--out", path};
    const Run first = run_cli(args);
    CHECK(first.code == 0);
    const std::size_t n = count_lines(path);
    CHECK(n == lines(first.out).size());

    const Run second = run_cli(args);
    CHECK(second.out == first.out);  // replayed verbatim, durations included
    CHECK(count_lines(path) == n);

    auto fresh_args = args;
    fresh_args.push_back("--no-cache");
    const Run fresh = run_cli(fresh_args);
    CHECK(without_durations(fresh.out) == without_durations(first.out));
    CHECK(count_lines(path) == 2 * n);

    for (const auto& j : lines(first.out)) CHECK_FALSE(j.contains("cache_key"));
    std::remove(path.c_str());
}
