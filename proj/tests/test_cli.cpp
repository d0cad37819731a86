#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HURWITZ_CLI_BIN
#error "HURWITZ_CLI_BIN must point at the built binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        (env.empty() ? std::string() : env + " ") + std::string(HURWITZ_CLI_BIN) + " " + args;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("compute single values") {
    RunResult r = run("compute monotone --alpha 2,1 --genus 0 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "12\n");

    r = run("compute classical --alpha 3 --r 2 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run("compute monotone --alpha 3 --r 2 --method oracle 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    r = run("compute jm-total --alpha 2 --r 3 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run("compute oracle --alpha 1,1,1 --r 4 --mode monotone 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
}

TEST_CASE("all methods agree and say so") {
    RunResult r = run("compute monotone --alpha 3 --genus 0 --all-methods 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "recurrence: 4\n"
          "closed-form: 4\n"
          "oracle: 4\n"
          "agreement: true\n");
}

TEST_CASE("bms comparison never asserts") {
    RunResult r = run("compute bms --alpha 2 --r 2 --all-methods 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out.find("formula: 6") != std::string::npos);
    CHECK(r.out.find("enumeration: 2") != std::string::npos);
    CHECK(r.out.find("unreconciled") != std::string::npos);
}

TEST_CASE("monotone table in csv form") {
    RunResult r = run("table --kind monotone --d-max 3 --genus-max 0 --format csv 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "\"1\",0,1\n"
          "\"2\",0,1\n"
          "\"1,1\",0,1\n"
          "\"3\",0,4\n"
          "\"2,1\",0,12\n"
          "\"1,1,1\",0,8\n");
    // Byte-deterministic across runs.
    CHECK(run("table --kind monotone --d-max 3 --genus-max 0 --format csv 2>/dev/null").out == r.out);
}

TEST_CASE("one-row-per-line json table") {
    RunResult r = run("table --kind monotone --d-max 2 --genus-max 0 --format json 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"alpha\":[1],\"genus\":0,\"r\":0,\"value\":\"1\"}\n"
          "{\"alpha\":[2],\"genus\":0,\"r\":1,\"value\":\"1\"}\n"
          "{\"alpha\":[1,1],\"genus\":0,\"r\":2,\"value\":\"1\"}\n");
}

TEST_CASE("degenerate table rows") {
    RunResult r = run("table --kind monotone --d-max 1 --genus-max 1 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0 1\n1 1 2 0\n");
}

TEST_CASE("toprec table is the catalan row") {
    RunResult r = run("table --kind toprec --genus 0 --points 1 --degree 4 --format csv 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out == "e1,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");
}

TEST_CASE("classical table matches known values") {
    RunResult r = run("table --kind classical --d-max 3 --genus-max 0 --format csv 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "\"1\",0,1\n"
          "\"2\",0,1\n"
          "\"1,1\",0,1\n"
          "\"3\",0,6\n"
          "\"2,1\",0,24\n"
          "\"1,1,1\",0,24\n");
}

TEST_CASE("cache round trip with zero recomputation") {
    const std::string cache = "cli_cache_test.jsonl";
    std::remove(cache.c_str());
    const std::string stats1 = "cli_stats1.txt";
    const std::string stats2 = "cli_stats2.txt";

    RunResult first = run("table --kind monotone --d-max 4 --genus-max 1 --format csv --cache " +
                          cache + " --stats 2>" + stats1);
    CHECK(first.code == 0);
    RunResult second = run("table --kind monotone --d-max 4 --genus-max 1 --format csv --cache " +
                           cache + " --stats 2>" + stats2);
    CHECK(second.code == 0);
    CHECK(first.out == second.out);
    CHECK(slurp(stats2).find("misses=0") != std::string::npos);
    CHECK(slurp(stats1).find("misses=0") == std::string::npos);

    std::remove(cache.c_str());
    std::remove(stats1.c_str());
    std::remove(stats2.c_str());
}

TEST_CASE("a corrupted cache fails verification") {
    const std::string cache = "cli_poison_test.jsonl";
    {
        std::ofstream out(cache);
        out << "{\"format\":\"monotone-memo\",\"version\":1}\n";
        out << "{\"alpha\":[2,1],\"r\":3,\"M\":\"5\"}\n";
    }
    RunResult r = run("verify --suite oracle-vs-recurrence --d-max 3 --cache " + cache +
                      " 2>/dev/null");
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
    std::remove(cache.c_str());

    r = run("verify --suite oracle-vs-recurrence --d-max 3 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("cache path can come from the environment") {
    const std::string cache = "cli_env_cache_test.jsonl";
    std::remove(cache.c_str());
    RunResult r = run("table --kind monotone --d-max 3 --genus-max 0 --format csv 2>/dev/null",
                      "HURWITZ_CACHE=" + cache);
    CHECK(r.code == 0);
    CHECK(slurp(cache).find("monotone-memo") != std::string::npos);
    std::remove(cache.c_str());
}

TEST_CASE("fast verification suites run clean") {
    RunResult r = run("verify --suite f3d --weight 4 2>/dev/null");
    CHECK(r.code == 0);
    r = run("verify --suite jm-total --d-max 3 --r-max 4 2>/dev/null");
    CHECK(r.code == 0);
}

TEST_CASE("help exits zero") {
    RunResult r = run("--help 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out.find("compute") != std::string::npos);
}

TEST_CASE("usage and bounds errors exit 2") {
    CHECK(run("verify --suite no-such-suite 2>/dev/null").code == 2);
    CHECK(run("compute monotone --genus 0 2>/dev/null").code == 2);
    CHECK(run("compute monotone --alpha 2,1 2>/dev/null").code == 2);
    CHECK(run("compute monotone --alpha 2,1 --genus 0 --r 3 2>/dev/null").code == 2);
    CHECK(run("compute oracle --alpha 1,1,1,1,1,1,1,1 --r 2 --mode monotone 2>/dev/null").code == 2);
    CHECK(run("table --kind nonsense 2>/dev/null").code == 2);
    CHECK(run("compute monotone --alpha 2,1 --genus 1 --method closed-form 2>/dev/null").code == 2);
}
