#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// Golden-file regression tests for the CLI: stdout compared byte-exactly
// after stripping the version line.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SUBHARDY_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string strip_version(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"version\"") != std::string::npos) continue;
    out << line << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
  const RunResult r = run_cli(args);
  CHECK(r.exit_code == 0);
  const std::string expected = read_file(std::string(SUBHARDY_GOLDEN_DIR) + "/" + golden_name);
  CHECK(strip_version(r.out) == strip_version(expected));
}

}  // namespace

TEST_CASE("golden: scan json") {
  check_golden("scan --family rz --grid 0.5:0.9:0.1 --space hardy --variant sb --N 16",
               "scan_rz.json");
}

TEST_CASE("golden: scan csv") {
  check_golden("scan --family rz --grid 0.5:0.9:0.1 --space hardy --variant sb --N 16 --format csv",
               "scan_rz.csv");
}

TEST_CASE("golden: classify") {
  check_golden("classify --symbol poly:1,1 --grid 2,8,0.5 --N 8", "classify_poly11.json");
}

TEST_CASE("golden: gram with failed range flag") {
  check_golden("gram --kernel l_space --symbol const:2 --grid 2,8,0.8", "gram_lspace_const2.json");
}

TEST_CASE("golden: opcheck with truncation caveat") {
  check_golden("opcheck --symbol 'poly:4*recip(poly:2,1)' --space bergman --variant sb --N 12",
               "opcheck_rational.json");
}

TEST_CASE("golden: subhardy all checks") {
  check_golden("subhardy --symbol poly:1.2,0.1 --check all", "subhardy_all.json");
}

TEST_CASE("selftest exits zero") {
  const RunResult r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("precondition errors exit 2") {
  CHECK(run_cli("classify --symbol blaschke:1.5").exit_code == 2);
  CHECK(run_cli("classify --symbol poly:").exit_code == 2);
  CHECK(run_cli("gram --kernel no_such --symbol const:2").exit_code == 2);
  CHECK(run_cli("subhardy --symbol poly:0,1 --check isometry").exit_code == 2);  // flag failure
}

TEST_CASE("unknown flags are rejected") {
  CHECK(run_cli("scan --bogus 1").exit_code == 2);
  CHECK(run_cli("scan --format yaml").exit_code == 2);
}

TEST_CASE("strict mode exits 3 on margin-fail labels") {
  // max|f| = 0.055 + 0.9 * 1.05 = 1 up to rounding, inside the margin band.
  const RunResult strict =
      run_cli("--strict classify --symbol poly:0.055,1.05 --grid 1,1,0.9 --N 4");
  CHECK(strict.exit_code == 3);
  const RunResult relaxed = run_cli("classify --symbol poly:0.055,1.05 --grid 1,1,0.9 --N 4");
  CHECK(relaxed.exit_code == 0);
}

TEST_CASE("config file sets defaults") {
  const std::string path = "/tmp/subhardy_test_config.ini";
  {
    std::ofstream out(path);
    out << "# defaults\nrho_max = 0.5\nN = 8\nseed = 7\ntol_rel = 1e-9\nmargin = 1e-8\n";
  }
  const RunResult r = run_cli("--config " + path + " subhardy --symbol const:2 --check isometry");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"rho_max\": 0.5") != std::string::npos);
  CHECK(r.out.find("\"seed\": 7") != std::string::npos);
  const RunResult bad = run_cli("--config /tmp/subhardy_missing.ini selftest");
  CHECK(bad.exit_code == 2);
}
