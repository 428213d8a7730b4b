// End-to-end checks of the circadian binary: exit codes, output files and
// the reproducibility contract of the effective-config echo.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string out = (fs::temp_directory_path() / "cli_out.txt").string();
    const std::string cmd =
        std::string(CIRCADIAN_BIN) + " " + args + " > " + out + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(run("check --vs 0.4").exit_code == 0);
    // table vs = 0.76 violates the state-space bound
    CHECK(run("check").exit_code == 2);
    const auto r = run("check --vs 0.4");
    CHECK(r.stdout_text.find("0.931") != std::string::npos);
    CHECK(r.stdout_text.find("PASS") != std::string::npos);
}

TEST_CASE("bad flags and configs exit 1") {
    CHECK(run("check --no-such-flag").exit_code == 1);
    CHECK(run("simulate --mode warp").exit_code == 1);
    CHECK(run("simulate --mode dde --delay 100 --dt 200").exit_code == 1);
    const auto cfg = tmp("bad.json");
    std::ofstream(cfg) << R"({"Vs": 0.4})";
    const auto r = run("check --config " + cfg.string());
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("Vs") != std::string::npos);
}

TEST_CASE("spiderweb exit codes and CSV shape") {
    const auto csv = tmp("web.csv");
    const auto svg = tmp("web.svg");
    const auto ok = run("spiderweb --vs 0.4 --out " + csv.string() + " --svg " +
                        svg.string());
    CHECK(ok.exit_code == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("step,u,F_u\n", 0) == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    CHECK(fs::exists(csv.string() + ".config.json"));

    CHECK(run("spiderweb --vs 0.5").exit_code == 2);
    CHECK(run("spiderweb --vs 0.5 --max-iter 3").exit_code == 3);
}

TEST_CASE("equilibrium and char emit CSV") {
    const auto eq = run("equilibrium --vs 0.4");
    CHECK(eq.exit_code == 0);
    CHECK(eq.stdout_text.find("M,P0,P1,P2,PN") != std::string::npos);
    CHECK(eq.stdout_text.find("0.1373695") != std::string::npos);

    const auto ch = run("char --system mrna --vs 0.4");
    CHECK(ch.exit_code == 0);
    CHECK(ch.stdout_text.find("u,value") != std::string::npos);
    CHECK(run("char --system plasma").exit_code == 1);
}

TEST_CASE("simulate writes a trajectory and reruns bit-identically") {
    const auto csv = tmp("traj.csv");
    const std::string args = "simulate --mode dde --vs 0.5 --delay 100 "
                             "--init 0.2 --t-end 200 --dt 0.05 --out " +
                             csv.string();
    CHECK(run(args).exit_code == 0);
    const std::string first = slurp(csv);
    CHECK(first.rfind("t,M,P0,P1,P2,PN\n", 0) == 0);

    // Re-run from the echoed config alone.
    const auto echo = csv.string() + ".config.json";
    REQUIRE(fs::exists(echo));
    const auto csv2 = tmp("traj2.csv");
    CHECK(run("simulate --mode dde --config " + echo + " --out " +
              csv2.string())
              .exit_code == 0);
    CHECK(slurp(csv2) == first);
}

TEST_CASE("stride decimates but keeps the last row") {
    const auto a = tmp("full.csv"), b = tmp("dec.csv");
    run("simulate --mode ode --vs 0.4 --t-end 10 --dt 0.01 --out " + a.string());
    run("simulate --mode ode --vs 0.4 --t-end 10 --dt 0.01 --stride 7 --out " +
        b.string());
    std::istringstream fa(slurp(a)), fb(slurp(b));
    std::string last_a, last_b, line;
    while (std::getline(fa, line)) if (!line.empty()) last_a = line;
    while (std::getline(fb, line)) if (!line.empty()) last_b = line;
    CHECK(last_a == last_b);
}

TEST_CASE("sweep classifies the regimes") {
    const auto csv = tmp("sweep.csv");
    const auto r = run("sweep --vs-list 0.4,0.5 --delay-list 0,100 "
                       "--t-end 600 --dt 0.05 --threads 2 --out " +
                       csv.string());
    CHECK(r.exit_code == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("vs,delay,verdict,PN_eq_or_amp,period\n", 0) == 0);
    CHECK(body.find("0.4,0,stable") != std::string::npos);
    CHECK(body.find("0.5,0,unstable") != std::string::npos);
    CHECK(body.find("0.5,100,unstable") != std::string::npos);
}
