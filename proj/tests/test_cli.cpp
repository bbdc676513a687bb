#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GAUSSDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dimension command exit codes and values") {
  RunResult covered = run_cli("dimension --potential power:1 --growth superexp:2 --d 2");
  CHECK(covered.exit_code == 0);
  CHECK(contains(covered.output, "T1-II"));
  CHECK(contains(covered.output, "0.333333333333"));

  RunResult critical = run_cli("dimension --potential power:1 --growth polyexp:0.5 --d 2");
  CHECK(critical.exit_code == 2);
  CHECK(contains(critical.output, "CRITICAL"));

  RunResult uncovered = run_cli("dimension --potential stretched:2 --growth superexp:2 --d 2");
  CHECK(uncovered.exit_code == 2);
  CHECK(contains(uncovered.output, "UNCOVERED"));

  RunResult bad = run_cli("dimension --potential bogus:1 --growth superexp:2 --d 2");
  CHECK(bad.exit_code == 1);
  RunResult missing = run_cli("dimension");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("repeated runs are byte identical") {
  const char* cmds[] = {
      "dimension --potential power:1 --growth superexp:2 --d 2",
      "sweep --potential power:1 --growth superexp:2 --d 2 --var beta --from 1.2 --to 3 "
      "--step 0.2",
      "sample --schedule t1-ii --a 1 --beta 2 --eps 0.1 --depth 20 --seed 7",
      "counting --m 10 --n 2 --a 1 --eps 0.3 --d 2 --s 1",
  };
  for (const char* c : cmds) {
    RunResult first = run_cli(c);
    RunResult second = run_cli(c);
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
  }
}

TEST_CASE("sweep output shows the plateau and the decreasing branch") {
  RunResult alpha = run_cli(
      "sweep --potential power:2 --growth polyexp:0.1 --d 2 --var alpha --from 0.1 "
      "--to 0.9 --step 0.2");
  CHECK(alpha.exit_code == 0);
  CHECK(contains(alpha.output, "T1-I1"));
  CHECK(contains(alpha.output, "T1-I2"));
  CHECK(contains(alpha.output, ",1,"));    // full dimension before the threshold
  CHECK(contains(alpha.output, ",0.5,"));  // 1/d beyond it

  RunResult beta = run_cli(
      "sweep --potential power:1 --growth superexp:2 --d 2 --var beta --from 4 --to 4 "
      "--step 1");
  CHECK(contains(beta.output, "0.2"));  // 1/(8-4+1)

  RunResult critical = run_cli(
      "sweep --potential power:1 --growth polyexp:0.3 --d 2 --var alpha --from 0.3 "
      "--to 0.7 --step 0.1");
  CHECK(contains(critical.output, "CRITICAL,,"));  // empty value row kept
}

TEST_CASE("verify subcommand exit codes") {
  RunResult ax = run_cli("verify axioms");
  CHECK(ax.exit_code == 0);
  CHECK(contains(ax.output, "K1="));

  RunResult single = run_cli("verify lemA --schedule t1-ii --a 1 --beta 2 --d 2 --nmax 200");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.output, "rel="));

  RunResult unknown = run_cli("verify nonsense");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("sample emits the tabular schedule format") {
  RunResult s = run_cli("sample --schedule t3-iii --c 0.5 --gamma 2 --eps 0.1 --depth 12 --seed 3");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, "n,log_s,log_t,log_digit,exact_digit,delta"));
  CHECK(contains(s.output, "# deviation_scale = loglog"));
  // digits beyond the materialization range leave the exact column empty
  std::istringstream lines(s.output);
  std::string line, last;
  while (std::getline(lines, line)) last = line;
  CHECK(contains(last, "12,"));
}

TEST_CASE("counting query reports the worked example") {
  RunResult c = run_cli("counting --m 10 --n 2 --a 1 --eps 0.3 --d 2 --s 1");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.output, ",30,"));            // count
  CHECK(contains(c.output, "0.105159324842"));  // sum at 12 digits
  CHECK(contains(c.output, ",1,"));             // valid window
}

TEST_CASE("root command compares against the liminf partials") {
  RunResult r = run_cli(
      "root --schedule benchmark --d 2 --depth 20 --tol 1e-6 --every 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "depth,root,lemA_partial,gap,above_one"));
  CHECK(contains(r.output, "\n10,"));
  CHECK(contains(r.output, "\n20,"));
}

TEST_CASE("config file supplies defaults and flags override") {
  std::string cfg = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/gaussdim_cli_test.cfg";
  {
    std::ofstream f(cfg);
    f << "potential=power:1\n"
      << "growth=superexp:2\n"
      << "d=2\n";
  }
  RunResult from_cfg = run_cli("dimension --config " + cfg);
  CHECK(from_cfg.exit_code == 0);
  CHECK(contains(from_cfg.output, "0.333333333333"));

  RunResult overridden = run_cli("dimension --config " + cfg + " --growth superexp:4");
  CHECK(overridden.exit_code == 0);
  CHECK(contains(overridden.output, "0.2"));  // 1/(8-4+1)
  std::remove(cfg.c_str());
}

TEST_CASE("output file honors the directory environment variable") {
  std::string dir = "/tmp/gaussdim_out_test";
  std::string cleanup = "rm -rf " + dir + " && mkdir -p " + dir;
  REQUIRE(std::system(cleanup.c_str()) == 0);
  std::string cmd = std::string("GAUSSDIM_OUT_DIR=") + dir + " " + GAUSSDIM_CLI_PATH +
                    " dimension --potential power:1 --growth superexp:2 --d 2 --out row.csv"
                    " >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream f(dir + "/row.csv");
  CHECK(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(contains(ss.str(), "0.333333333333"));
  int rc = std::system(("rm -rf " + dir).c_str());
  (void)rc;
}
