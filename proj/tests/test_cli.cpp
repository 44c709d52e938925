#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "dtv/serialize.hpp"
#include "dtv/vertex.hpp"

using namespace dtv;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(DTV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("vertex with triple agreement") {
    auto r = run("vertex --group z2z2 --leg 2,1 --method closed,enumerate,transfer --degree 6 --verify");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["method"] == "closed");
    CHECK(j[1]["leg"] == json({2, 1}));
}

TEST_CASE("empty leg") {
    auto r = run("vertex --leg \"\" --degree 4");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["method"] == "closed");
    CHECK(series_from_json(j["series"]) == closed_z2z2_nolegs(4));
}

TEST_CASE("Zn vertex") {
    auto r = run("vertex --group zn --n 3 --leg 1 --method closed,transfer --degree 5 --verify");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j[0]["series"]["vars"] == json({"q0", "q1", "q2"}));
}

TEST_CASE("uniqueness report") {
    auto r = run("uniqueness --max-leg-size 6 --window 10");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["symmetric"] == json::parse("[[],[1],[2,1],[3,2,1]]"));
    CHECK(j["exactly_staircases"] == true);
}

TEST_CASE("pyramid and rpc") {
    CHECK(run("pyramid --method enumerate,closed --degree 5 --verify").status == 0);
    CHECK(run("rpc --leg 1 --method enumerate,transfer,closed --degree 5 --verify").status == 0);
    CHECK(run("rpc --leg 2,1 --frame diagonal --l 1 --degree 4").status == 0);
    auto csv = run("pyramid --degree 2 --format csv");
    CHECK(csv.out.rfind("q0,qa,qb,qc,coef\n", 0) == 0);
}

TEST_CASE("verify mismatch exits 1") {
    auto a = std::string("cli_a.json"), b = std::string("cli_b.json");
    REQUIRE(run("rpc --leg 2 --frame antidiagonal --degree 5 -o " + a).status == 0);
    REQUIRE(run("rpc --leg 2 --frame diagonal --degree 5 -o " + b).status == 0);
    CHECK(run("verify " + a + " " + b).status == 1);
    CHECK(run("verify " + a + " " + a).status == 0);
    CHECK(run("verify --leg 1 --degree 4").status == 0);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("vertex --leg 1,2").status == 2);
    CHECK(run("vertex --leg x").status == 2);
    CHECK(run("vertex --degree -1").status == 2);
    CHECK(run("vertex --bogus").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("vertex --leg 2 --method closed").status == 2);
    CHECK(run("rpc --frame sideways").status == 2);
    CHECK(run("vertex --verify --method closed").status == 2);
}

TEST_CASE("output does not depend on the worker count") {
    auto one = run("vertex --leg 2,1 --method enumerate,transfer --degree 5 --workers 1");
    auto four = run("vertex --leg 2,1 --method enumerate,transfer --degree 5 --workers 4");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    auto env = run("vertex --leg 2,1 --method enumerate,transfer --degree 5");
    CHECK(env.out == one.out);
}
