#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = ENTROBOUND_CLI_PATH;
const std::string data = ENTROBOUND_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& tag) {
    const std::string out_path = "/tmp/entrobound_cli_test_" + tag + ".out";
    const std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("bound subcommand reports the hyperbolic toral bound") {
    const RunResult r = run("bound --input " + data + "/cat_map.json", "cat");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.9624236501") != std::string::npos);
    CHECK(r.out.find("hyperbolic") != std::string::npos);
}

TEST_CASE("bound subcommand handles algebra documents end to end") {
    const RunResult r = run("bound --input " + data + "/heisenberg_236.json", "heis");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3.583518938") != std::string::npos);
    CHECK(r.out.find("consistent") != std::string::npos);
    CHECK(r.out.find("block sizes:      2 1") != std::string::npos);
}

TEST_CASE("bound --json emits a parseable machine report") {
    const RunResult r = run("bound --input " + data + "/cat_map.json --json", "catjson");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"entropy_bound\"") != std::string::npos);
    CHECK(r.out.find("\"charpoly\"") != std::string::npos);
}

TEST_CASE("field errors are diagnosed with a nonzero exit code") {
    const RunResult r = run("bound --input " + data + "/malformed.json", "bad");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("brackets[0]") != std::string::npos);
}

TEST_CASE("missing input file is reported, not crashed on") {
    const RunResult r = run("bound --input " + data + "/nonexistent.json", "missing");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("cannot open") != std::string::npos);
}

TEST_CASE("simulate rejects non-torus documents") {
    const RunResult r = run("simulate --input " + data + "/cat_map.json", "wrongkind");
    CHECK(r.exit_code == 2);
}

TEST_CASE("simulate --json output is byte-identical across reruns") {
    const std::string a = "/tmp/entrobound_det_a.json";
    const std::string b = "/tmp/entrobound_det_b.json";
    const std::string base =
        "simulate --input " + data + "/cat_torus.json --n-max 4 --epsilon 0.2 --json --output ";
    CHECK(run(base + a, "det1").exit_code == 0);
    CHECK(run(base + b, "det2").exit_code == 0);
    const std::string ja = slurp(a), jb = slurp(b);
    CHECK(!ja.empty());
    CHECK(ja == jb);
}

TEST_CASE("simulate --cover lifts through the sublattice") {
    const RunResult r = run("simulate --input " + data +
                                "/cat_torus.json --n-max 4 --epsilon 0.2 --cover",
                            "cover");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cover lift estimate") != std::string::npos);
}

TEST_CASE("verify subcommand runs the cross-check suites") {
    const RunResult r = run("verify", "verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}
