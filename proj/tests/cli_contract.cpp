#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Path injected by the build so the suite always tests the binary it was
// built with.
#ifndef CREMONA_CLI_PATH
#error "CREMONA_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
        pos = nl + 1;
    }
    return out;
}

} // namespace

TEST_CASE("verify identities emits sorted reports and succeeds") {
    RunResult res = run("verify identities");
    CHECK(res.code == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 6);
    std::vector<std::string> names;
    for (const auto& doc : lines) names.push_back(doc["name"]);
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    CHECK(names == sorted);
    for (const auto& doc : lines) CHECK(doc["holds"] == true);
}

TEST_CASE("verify identities content") {
    RunResult res = run("verify identities --trials 8 --primes 3 --seed 11");
    CHECK(res.code == 0);
    for (const auto& doc : json_lines(res.out)) {
        std::string name = doc["name"];
        if (name == "J_identity") {
            CHECK(doc["exponent"] == 13);
            CHECK(doc["mode"] == "exact");
        } else if (name == "I_identity") {
            CHECK(doc["exponent"] == 8);
            CHECK(doc["reference_exponent"] == 12);
            CHECK(doc["reference_mismatch"] == true);
        } else if (name == "group_law") {
            CHECK(doc["exponent"] == 52);
            CHECK(doc["mode"] == "modular");
            CHECK(doc["trials"] == 8);
            CHECK(doc["primes"].size() == 3);
        } else if (name == "inverse") {
            CHECK(doc["exponent"] == 56);
            CHECK(doc["reference_exponent"] == 42);
            CHECK(doc["reference_mismatch"] == true);
        } else if (name == "degenerate_member") {
            CHECK(doc["exponent"] == 4);
        }
    }
}

TEST_CASE("verify output is byte-deterministic") {
    RunResult a = run("verify identities --seed 3");
    RunResult b = run("verify identities --seed 3");
    CHECK(a.out == b.out);
    RunResult c = run("verify identities --seed 4");
    CHECK(a.out != c.out); // different primes drawn
}

TEST_CASE("verify a generalized member by index") {
    RunResult res = run("verify identities --m 2 --phi 1,0,2");
    CHECK(res.code == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 3);
    for (const auto& doc : lines) {
        if (doc["name"] == "J_identity") CHECK(doc["exponent"] == 25);
        if (doc["name"] == "I_identity") CHECK(doc["exponent"] == 16);
    }
}

TEST_CASE("malformed phi is a usage error") {
    CHECK(run("verify identities --m 2 --phi 1,2", true).code == 64);
    CHECK(run("verify identities --m 2 --phi 1,zz,3", true).code == 64);
}

TEST_CASE("multiplicity queries match the golden table") {
    RunResult res = run("mult point --form f4 --point 0,0,0,0,1");
    CHECK(res.code == 0);
    CHECK(res.out == "8\n");
    CHECK(run("mult curve --form f1 --curve B").out == "4\n");
    CHECK(run("mult curve --form f3 --curve C").out == "4\n");
    CHECK(run("mult point --form f4 --point 1,0,0,0,1").out == "0\n");
    CHECK(run("mult point --form J --point 0,0,0,0,1").out == "2\n");
    CHECK(run("mult curve --form J --curve T").out == "2\n");
    CHECK(run("mult curve --form I --curve B").out == "1\n"); // B is on the smooth quadric
    {
        std::ofstream f("zero_form.poly");
        f << "vars: x0 x1 x2 x3 x4\n";
    }
    CHECK(run("mult curve --form zero_form.poly --curve B").out == "inf\n");
    CHECK(run("mult point --form f4 --t 5 --point 0,0,0,0,1").out == "8\n");
}

TEST_CASE("mult input errors use the parse exit code") {
    CHECK(run("mult point --form f4 --point 0,0,0,0", true).code == 65);
    CHECK(run("mult point --form f4 --point 0,0,0,0,0", true).code == 65);
    CHECK(run("mult point --form f4 --point a,b,c,d,e", true).code == 65);
    CHECK(run("mult curve --form f1 --curve Z", true).code == 65);
    CHECK(run("mult point --form f9 --point 0,0,0,0,1", true).code == 64);
    CHECK(run("mult point --form f4", true).code == 64); // missing --point
}

TEST_CASE("forms and curves load from files") {
    const char* form_path = "/tmp/cremona_cli_form.poly";
    {
        std::ofstream f(form_path);
        f << "vars: x0 x1 x2 x3 x4\n";
        f << "1/1 0 2 0 0 0\n"; // x1^2
    }
    RunResult res = run(std::string("mult point --form ") + form_path + " --point 0,0,0,0,1");
    CHECK(res.code == 0);
    CHECK(res.out == "2\n");

    const char* curve_path = "/tmp/cremona_cli_curve.txt";
    {
        std::ofstream f(curve_path);
        // The B curve written out: (0, 1, 2u, 3u^2, 4u^3).
        f << "0\n1\n0,2\n0,0,3\n0,0,0,4\n";
    }
    RunResult res2 = run(std::string("mult curve --form f1 --curve ") + curve_path);
    CHECK(res2.code == 0);
    CHECK(res2.out == "4\n");

    const char* bad_curve = "/tmp/cremona_cli_badcurve.txt";
    {
        std::ofstream f(bad_curve);
        f << "0\n2\n0,2\n0,0,3\n0,0,0,4\n"; // no component is the constant 1
    }
    CHECK(run(std::string("mult curve --form f1 --curve ") + bad_curve, true).code == 65);
}

TEST_CASE("report succeeds and is byte-deterministic") {
    RunResult a = run("report --t 1 --samples 25");
    CHECK(a.code == 0);
    RunResult b = run("report --t 1 --samples 25");
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["verdict"]["counterexample"] == true);
    CHECK(doc["verdict"]["point_threshold"] == "26/3");
    CHECK(doc["orders"]["point"]["order"] == 8);
    CHECK(doc["map"]["degree"] == 13);
}

TEST_CASE("report respects format, output file and environment seed") {
    RunResult text = run("report --t 1 --samples 10 --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("counterexample: CONFIRMED") != std::string::npos);

    const char* out_path = "/tmp/cremona_cli_report.json";
    std::remove(out_path);
    RunResult filed = run(std::string("report --t 1 --samples 10 --out ") + out_path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(out_path);
    REQUIRE(in.good());
    nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc["verdict"]["counterexample"] == true);

    RunResult seeded = run("report --t 1 --samples 10 --seed 21");
    auto sdoc = nlohmann::json::parse(seeded.out);
    CHECK(sdoc["sampling"]["seed"] == 21);
    // popen goes through the shell, so an assignment prefix sets the
    // environment for the child.
    RunResult env = [&] {
        std::string cmd = std::string("CREMONA_SEED=21 ") + CREMONA_CLI_PATH +
                          " report --t 1 --samples 10 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        RunResult r;
        std::array<char, 4096> buf;
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
        int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return r;
    }();
    CHECK(env.code == 0);
    CHECK(env.out == seeded.out);
}

TEST_CASE("degenerate parameter is rejected") {
    CHECK(run("report --t 0", true).code == 64);
}

TEST_CASE("generalized subcommand prints the map then its identities") {
    RunResult res = run("generalized --m 1 --phi 1,0");
    CHECK(res.code == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["name"] == "map");
    CHECK(lines[0]["m"] == 1);
    CHECK(lines[0]["degree"] == 13);
    CHECK(lines[0]["phi"][0] == "1/1");
    for (std::size_t k = 1; k < lines.size(); ++k) CHECK(lines[k]["holds"] == true);
    CHECK(run("generalized --m 1 --seed 5").out == run("generalized --m 1 --seed 5").out);
}

TEST_CASE("usage errors") {
    CHECK(run("", true).code == 64);
    CHECK(run("bogus", true).code == 64);
    CHECK(run("verify", true).code == 64);
    CHECK(run("verify identities --t 1 --symbolic", true).code == 64);
    CHECK(run("verify identities --prime-bits 99", true).code == 64);
    CHECK(run("generalized", true).code == 64); // --m required
}

TEST_CASE("help documents the conventions") {
    RunResult top = run("--help");
    CHECK(top.code == 0);
    CHECK(top.out.find("C(4,k)") != std::string::npos);
    CHECK(top.out.find("applies g first") != std::string::npos);
    CHECK(top.out.find("num/den") != std::string::npos);
    RunResult sub = run("verify identities --help");
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--mode") != std::string::npos);
}
