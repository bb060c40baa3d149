// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RATIOCUT_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("ratiocut-cli-" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("eval prints the breakdown and exits 0") {
  const RunResult r = run("eval --q 0.5 --p 0.5 --theta 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"value\": 8.0") != std::string::npos);
  CHECK(r.out.find("\"straight\"") != std::string::npos);
}

TEST_CASE("error paths map to documented exit codes") {
  // malformed flag: parse error
  CHECK(run("eval --definitely-not-a-flag").exit_code == 1);
  CHECK(run("").exit_code == 1);  // missing subcommand
  // out-of-gate sigma: domain/geometry error
  CHECK(run("eval --a1 0.9").exit_code == 2);
  // arc leaving the domain: geometry error with a message
  const RunResult arc = run("eval --q 0.02 --p 0.02 --theta -0.8");
  CHECK(arc.exit_code == 2);
  CHECK(arc.out.find("exits the domain") != std::string::npos);
  // triangle start: gate violation
  CHECK(run("iterate --domain triangle --steps 2 --out " +
            fresh_dir("tri").string())
            .exit_code == 2);
}

TEST_CASE("predict and optimize agree to quadratic order over the CLI") {
  const RunResult p = run("predict --a2 0.1 --order first");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("0.5083333") != std::string::npos);
  const RunResult o = run("optimize --a2 0.1");
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("\"hessian_psd\": true") != std::string::npos);
}

TEST_CASE("verify --quick passes on a clean build") {
  const RunResult r = run("verify --quick");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify names tampered table indices and exits nonzero") {
  const fs::path dir = fresh_dir("tamper");
  const fs::path good = dir / "coefficients.json";
  REQUIRE(run("verify --quick --dump " + good.string()).exit_code == 0);
  std::string text = slurp(good);
  const auto pos = text.find("244");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "245");
  const fs::path bad = dir / "tampered.json";
  std::ofstream(bad) << text;
  const RunResult r = run("verify --quick --table " + bad.string());
  CHECK(r.exit_code == 3);
  // the first textual 244 sits in the eps_b*eps_b entry (alphabetical dump)
  CHECK(r.out.find("TABLE DRIFT at index eps_b*eps_b") != std::string::npos);
}

TEST_CASE("sweep emits deterministic files") {
  const fs::path d1 = fresh_dir("sw1"), d2 = fresh_dir("sw2");
  CHECK(run("sweep --family a1-up --count 7 --out " + d1.string()).exit_code == 0);
  CHECK(run("sweep --family a1-up --count 7 --out " + d2.string()).exit_code == 0);
  for (const char* name :
       {"sweep-a1-up.csv", "sweep-a1-up-values.svg", "sweep-a1-up-error.svg",
        "sweep-a1-up-extremal.svg"}) {
    CAPTURE(name);
    CHECK(slurp(d1 / name) == slurp(d2 / name));
    CHECK(!slurp(d1 / name).empty());
  }
  CHECK(run("sweep --family no-such-family --count 5").exit_code == 1);
}

TEST_CASE("sweep gate flagging and extension") {
  const fs::path d = fresh_dir("swgate");
  CHECK(run("sweep --family eps-t --count 5 --out " + d.string()).exit_code == 0);
  const std::string flagged = slurp(d / "sweep-eps-t.csv");
  CHECK(flagged.find("failed:") != std::string::npos);
  CHECK(run("sweep --family eps-t --count 5 --extend-gate --out " + d.string())
            .exit_code == 0);
  const std::string extended = slurp(d / "sweep-eps-t.csv");
  CHECK(extended.find("failed:") == std::string::npos);
}

TEST_CASE("iterate writes trajectory JSONL and filmstrip") {
  const fs::path d = fresh_dir("iter");
  const RunResult r =
      run("iterate --domain rect:1:0.5 --steps 4 --out " + d.string());
  CHECK(r.exit_code == 0);
  const std::string jsonl = slurp(d / "trajectory.jsonl");
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 4);
  CHECK(jsonl.find("\"theta\":0.0") != std::string::npos);
  CHECK(slurp(d / "trajectory.svg").find("<svg") == 0);
}

TEST_CASE("graphcut is deterministic per seed and writes the artifacts") {
  const fs::path d1 = fresh_dir("g1"), d2 = fresh_dir("g2");
  const std::string args = "graphcut --domain rect:2:1 --n 400 --knn 8 --seed 5 --out ";
  CHECK(run(args + d1.string()).exit_code == 0);
  CHECK(run(args + d2.string()).exit_code == 0);
  for (const char* name : {"points.csv", "edges.csv", "partition.svg"}) {
    CAPTURE(name);
    CHECK(slurp(d1 / name) == slurp(d2 / name));
  }
  // header schema
  CHECK(slurp(d1 / "points.csv").rfind("x,y,side\n", 0) == 0);
  CHECK(slurp(d1 / "edges.csv").rfind("i,j,w\n", 0) == 0);
}
