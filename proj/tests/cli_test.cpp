#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCDECOMP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(SCDECOMP_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("cli decompose prints the three demo classes with labels") {
    RunResult r = run_cli("decompose " + data("demo9.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "s v1 v5 v6 v7 v8\n"
          "s v1 v2 v3 v4 v7 v8\n"
          "v1 v2 v3 v4 v5 v6 v7 v8\n");
}

TEST_CASE("cli decompose falls back to components on a non-strongly-connected input") {
    RunResult r = run_cli("decompose " + data("path3.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n1\n2\n");
}

TEST_CASE("cli minrs prints the removable sets in path order") {
    RunResult r = run_cli("minrs " + data("demo9.txt") + " --root 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "v2 v3 v4\nv5 v6\n");

    RunResult ids = run_cli("minrs " + data("demo9_ids.txt") + " --root 0");
    CHECK(ids.out == "2 3 4\n5 6\n");

    RunResult rooted = run_cli("minrs " + data("cycle5.txt") + " --root 2");
    CHECK(rooted.out == "3 4 0 1\n");
}

TEST_CASE("cli classify") {
    RunResult demo = run_cli("classify " + data("demo9.txt"));
    CHECK(demo.exit_code == 0);
    CHECK(demo.out.find("\"kind\":\"MinRsDisjoint\"") != std::string::npos);

    RunResult both = run_cli("classify " + data("two_cycle.txt"));
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("\"kind\":\"Both\"") != std::string::npos);

    RunResult refused = run_cli("classify " + data("path3.txt"));
    CHECK(refused.exit_code == 2);
}

TEST_CASE("cli enumerate") {
    RunResult count = run_cli("enumerate " + data("cycle5.txt") + " --count-only");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "6\n");

    RunResult limited = run_cli("enumerate " + data("cycle5.txt") + " --limit 3");
    CHECK(limited.exit_code == 0);
    CHECK(limited.out == "0 1 2 3 4\n0\n1\n");

    RunResult nothing = run_cli("enumerate " + data("cycle5.txt") + " --limit 0");
    CHECK(nothing.exit_code == 0);
    CHECK(nothing.out.empty());

    // byte-stable across runs
    CHECK(run_cli("enumerate " + data("demo9_ids.txt")).out ==
          run_cli("enumerate " + data("demo9_ids.txt")).out);
}

TEST_CASE("cli hamiltonian and search") {
    RunResult cyc = run_cli("hamiltonian " + data("cycle5.txt"));
    CHECK(cyc.exit_code == 0);
    CHECK(cyc.out == "0 1 2 3 4\n");

    RunResult refused = run_cli("hamiltonian " + data("demo9.txt"));
    CHECK(refused.exit_code == 2);

    RunResult none = run_cli("hamiltonian-search " + data("demo9.txt"));
    CHECK(none.exit_code == 0);
    CHECK(none.out == "none\n");

    RunResult unknown = run_cli("hamiltonian-search " + data("demo9.txt") + " --budget 2");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out == "unknown\n");
}

TEST_CASE("cli augment") {
    RunResult r = run_cli("augment " + data("cycle5.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 2\n");
}

TEST_CASE("cli dominator-tree") {
    RunResult fwd = run_cli("dominator-tree " + data("demo9.txt") + " --root 0");
    CHECK(fwd.exit_code == 0);
    CHECK(fwd.out == "v1 s\nv2 v1\nv3 v2\nv4 v3\nv5 v1\nv6 v5\nv7 v1\nv8 v7\n");
    RunResult bwd = run_cli("dominator-tree " + data("demo9.txt") + " --root 0 --transpose");
    CHECK(bwd.out == "v1 s\nv2 v3\nv3 v4\nv4 v7\nv5 v6\nv6 v7\nv7 v8\nv8 v1\n");
}

TEST_CASE("cli bench") {
    RunResult empty = run_cli("bench " + data("cycle5.txt") + " --repetitions 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("\"repetitions\":0") != std::string::npos);
    CHECK(empty.out.find("decompose") == std::string::npos);

    RunResult real = run_cli("bench " + data("cycle5.txt") + " --repetitions 3");
    CHECK(real.exit_code == 0);
    CHECK(real.out.find("\"max_gap\"") != std::string::npos);
    CHECK(real.out.find("\"classification\":\"MaxPssDisjoint\"") != std::string::npos);
}

TEST_CASE("cli selftest") {
    RunResult r = run_cli("selftest --graphs 60");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("cli error handling") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("decompose /no/such/file.txt").exit_code == 1);
    CHECK(run_cli("classify " + data("bad.txt")).exit_code == 1); // parse error
}
