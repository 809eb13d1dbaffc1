#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "test_util.hpp"

using namespace bftest;

struct RunResult {
    int exit_code;
    std::string out;
};

static RunResult run(const std::string& args) {
    std::string cmd = std::string(BASEFREE_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

TEST_CASE("base-locus golden outputs") {
    auto r = run("base-locus " + fixture("example51.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("total multiplicity: 27") != std::string::npos);
    CHECK(r.out.find("multiplicity 9") != std::string::npos);
    auto r2 = run("base-locus " + fixture("example52.txt"));
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("total multiplicity: 32") != std::string::npos);
    auto r3 = run("base-locus " + fixture("identity.txt"));
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("base locus: empty") != std::string::npos);
}

TEST_CASE("transversal exit codes") {
    CHECK(run("transversal " + fixture("example51.txt")).exit_code == 0);
    auto r = run("transversal " + fixture("example53.txt"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not a perfect square") != std::string::npos);
    CHECK(run("transversal " + fixture("malformed.txt")).exit_code == 1);
    CHECK(run("transversal /nonexistent/file.txt").exit_code == 1);
}

TEST_CASE("reparam exit codes and output forms") {
    auto r = run("reparam " + fixture("example51.txt") + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("outcome: Polynomial") != std::string::npos);
    CHECK(r.out.find("affine parametrization") != std::string::npos);
    CHECK(r.out.find("check: passed") != std::string::npos);
    CHECK(run("reparam " + fixture("example53.txt")).exit_code == 2);
}

TEST_CASE("json output is byte identical across reruns") {
    for (const char* sub : {"base-locus", "transversal", "degree"}) {
        auto a = run(std::string(sub) + " " + fixture("example51.txt") + " --json");
        auto b = run(std::string(sub) + " " + fixture("example51.txt") + " --json");
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("emitted polynomials re-parse to equal values") {
    auto r = run("reparam " + fixture("example51.txt") + " --json");
    CHECK(r.exit_code == 0);
    // pull every "qN": "..." entry back through the parser
    size_t pos = 0;
    int seen = 0;
    while ((pos = r.out.find("\"q", pos)) != std::string::npos) {
        size_t colon = r.out.find(':', pos);
        size_t q1 = r.out.find('"', colon);
        size_t q2 = r.out.find('"', q1 + 1);
        std::string text = r.out.substr(q1 + 1, q2 - q1 - 1);
        PolyQ f = parse_poly(text, vars_t3());
        CHECK(f.str() == text);
        pos = q2;
        ++seen;
    }
    CHECK(seen == 4);
}

TEST_CASE("degree subcommand") {
    auto r = run("degree " + fixture("example51.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("surface_degree: 9") != std::string::npos);
    auto r2 = run("degree " + fixture("s51bar.txt"));
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("degree: 2") != std::string::npos);
}

TEST_CASE("seed flag changes nothing semantically") {
    auto a = run("base-locus " + fixture("example52.txt") + " --json --seed 1");
    auto b = run("base-locus " + fixture("example52.txt") + " --json --seed 999");
    CHECK(a.out == b.out);  // multiplicities are seed independent
}
