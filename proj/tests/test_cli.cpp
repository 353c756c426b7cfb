#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("fi_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(FI_CLI_PATH) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = ::pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.err = slurp(err);
  return r;
}

double value_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + " ");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 1));
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("basis-table writes the full grid and reports the node deviation") {
  const fs::path out = scratch() / "table.csv";
  const Run r = run("basis-table --max-n 4 --x-grid 0:2.5:0.1 --out " + out.string());
  CHECK(r.status == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("n,x,a,a_hat,err_a,err_ahat\n", 0) == 0);
  CHECK(count_lines(csv) == 1 + 5 * 26);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(value_after(r.out, "node_deviation") < 1e-4);
  CHECK(r.out.find("threshold") != std::string::npos);
}

TEST_CASE("basis-table a0 row only") {
  const Run r = run("basis-table --max-n 0 --x-grid 0:1:0.5");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 1 + 3);
  CHECK(std::fabs(value_after(r.err, "a0(0)") - 0.5) < 1e-8);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("basis-table --x-grid 0:1:0").status == 2);
  CHECK(run("basis-table --x-grid 0:1").status == 2);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("basis-table --format xml").status == 2);
  CHECK(run("reconstruct --fixture no-such-fixture").status == 2);
  CHECK(run("poisson --lattice-file /nonexistent/basis.txt").status == 2);
}

TEST_CASE("verify suites") {
  const Run theta = run("verify theta");
  CHECK(theta.status == 0);
  CHECK(theta.out.find("\"passed\": true") != std::string::npos);

  const Run k = run("kernels check");
  CHECK(k.status == 0);
  CHECK(k.out.find("-0.159154943") != std::string::npos);

  const Run lp = run("verify lp --fixture e8");
  CHECK(lp.status == 0);
  CHECK(lp.out.find("0.842429435") != std::string::npos);
  CHECK(lp.out.find("0.25366950") != std::string::npos);

  CHECK(run("verify classical").status == 0);
  CHECK(run("verify poisson").status == 0);
}

TEST_CASE("reconstruct") {
  const Run g = run("reconstruct --fixture gaussian --x 0 --truncation-N 40");
  CHECK(g.status == 0);
  CHECK(g.out.rfind("x,value,error,reference,truncation_N,term_tail_bound,threshold\n", 0) == 0);
  CHECK(count_lines(g.out) == 2);

  const Run t2 = run("reconstruct --fixture gaussian-t2 --x 0.8 --format json");
  CHECK(t2.status == 0);
  CHECK(t2.out.find("\"threshold\"") != std::string::npos);

  const Run far = run("reconstruct --fixture gaussian --x 3.2");
  CHECK(far.err.find("warning") != std::string::npos);
  CHECK(far.status == 0);
}

TEST_CASE("lattice commands") {
  const Run d = run("lattice-density --fixture hex");
  CHECK(d.status == 0);
  CHECK(d.out.find("0.906899682") != std::string::npos);

  const fs::path basis = scratch() / "z2.txt";
  std::ofstream(basis) << "2\n1 0\n0 1\n";
  CHECK(run("poisson --lattice-file " + basis.string()).status == 0);

  const Run one = run("lp-check --fixture z1");
  CHECK(one.status == 0);

  CHECK(run("classical --x 0.5").status == 0);
}

TEST_CASE("outputs are deterministic") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  const std::string args = " --max-n 2 --x-grid 0:1:0.25 --format json --out ";
  REQUIRE(run("basis-table" + args + a.string()).status == 0);
  REQUIRE(run("basis-table" + args + b.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("config file precedence: flags over file over defaults") {
  const fs::path cfg = scratch() / "run.cfg";
  std::ofstream(cfg) << "# basis table settings\nmax-n = 0\nx-grid = 0:1:0.5\n";
  const Run from_file = run("basis-table --config " + cfg.string());
  CHECK(from_file.status == 0);
  CHECK(count_lines(from_file.out) == 1 + 3);

  const Run flag_wins = run("basis-table --config " + cfg.string() + " --x-grid 0:1:0.25");
  CHECK(flag_wins.status == 0);
  CHECK(count_lines(flag_wins.out) == 1 + 5);

  std::ofstream(scratch() / "bad.cfg") << "max-n 3\n";
  CHECK(run("basis-table --config " + (scratch() / "bad.cfg").string()).status == 2);
  CHECK(run("basis-table --config /nonexistent.cfg").status == 2);
}
