/// @file cli_tests.cpp
/// @brief End-to-end checks of the tca-verify binary: exit codes, report
///        formats, flag/config precedence, and byte-level determinism.
///        TCA_CLI_PATH and TCA_FIXTURE_DIR are injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr, merged
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TCA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) {
  return std::string(TCA_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

bool is_csv(const std::string& s) { return s.rfind("suite,system,", 0) == 0; }

}  // namespace

// ============================================================================
// Exit codes
// ============================================================================

TEST_CASE("--help exits 0 and lists the options") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.output.find("--suite") != std::string::npos);
  CHECK(r.output.find("--extension") != std::string::npos);
  CHECK(r.output.find("--config") != std::string::npos);
}

TEST_CASE("clean run exits 0 with the table report") {
  RunResult r = run_cli("--config " + fixture("quick.ini"));
  CHECK(r.code == 0);
  CHECK_FALSE(is_csv(r.output));
  CHECK(r.output.find("detail") != std::string::npos);   // table-only column
  CHECK(r.output.find("decomp") != std::string::npos);
  CHECK(r.output.find("tau(") != std::string::npos);     // cocycle witness
}

TEST_CASE("corrupt fixtures drive the exit code to 1") {
  RunResult r = run_cli("--config " + fixture("corrupt.ini") + " --format csv");
  CHECK(r.code == 1);
  CHECK(r.output.find("corrupt-fixture") != std::string::npos);
  CHECK(r.output.find(",fail,") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("--suite bogus").code == 2);
  CHECK(run_cli("--threads 0").code == 2);
  CHECK(run_cli("--config no_such_file.ini").code == 2);
  CHECK(run_cli("--no-such-flag").code == 2);

  RunResult ext = run_cli("--extension 'E9'");
  CHECK(ext.code == 2);
  CHECK(ext.output.find("error: extension") != std::string::npos);

  RunResult key = run_cli("--config " + fixture("bad_key.ini"));
  CHECK(key.code == 2);
  CHECK(key.output.find("bad_key.ini:1:") != std::string::npos);
}

TEST_CASE("unwritable output path flushes the report to stdout and exits 3") {
  RunResult r =
      run_cli("--config " + fixture("quick.ini") + " --format csv --out no/such/dir/x.csv");
  CHECK(r.code == 3);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("suite,system,") != std::string::npos);
  CHECK(r.output.find(",incomplete,") != std::string::npos);
}

// ============================================================================
// Determinism and precedence
// ============================================================================

TEST_CASE("csv output is byte-identical across runs and thread counts") {
  std::string args = "--config " + fixture("quick.ini") + " --format csv";
  RunResult first = run_cli(args);
  REQUIRE(first.code == 0);
  REQUIRE(is_csv(first.output));
  CHECK(run_cli(args).output == first.output);
  CHECK(run_cli(args + " --threads 3").output == first.output);
}

TEST_CASE("seed flag changes the draws, not the verdicts") {
  std::string args = "--config " + fixture("quick.ini") + " --format csv";
  RunResult a = run_cli(args + " --seed 1");
  RunResult b = run_cli(args + " --seed 2");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.output != b.output);
  CHECK(run_cli(args + " --seed 1").output == a.output);
}

TEST_CASE("flags override config values") {
  // quick.ini pins format = table; the flag must win
  RunResult r = run_cli("--config " + fixture("quick.ini") + " --format csv");
  CHECK(r.code == 0);
  CHECK(is_csv(r.output));
}

TEST_CASE("--out writes the same bytes the stdout path would print") {
  std::string args = "--config " + fixture("quick.ini") + " --format csv";
  RunResult to_stdout = run_cli(args);
  REQUIRE(to_stdout.code == 0);

  std::string path = "cli_tests_out.csv";
  RunResult to_file = run_cli(args + " --out " + path);
  CHECK(to_file.code == 0);
  CHECK(to_file.output.empty());
  CHECK(slurp(path) == to_stdout.output);
  std::remove(path.c_str());
}
