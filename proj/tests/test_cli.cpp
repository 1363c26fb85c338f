// End-to-end tests of the command-line binary.  The harness exports the
// binary path in BLOCHSPACE_BIN; every invocation runs through a shell so
// stdin piping and exit-code plumbing behave exactly as they do for users.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

std::string bin_path() {
  const char* bin = std::getenv("BLOCHSPACE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "BLOCHSPACE_BIN must point at the binary");
  return bin;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_shell(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

RunResult run(const std::string& args) {
  return run_shell(bin_path() + " " + args + " 2>/dev/null");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kMixedQutrit = R"({"two_j":2,"params":[0,0,0,0,0,0,0,0]})";

}  // namespace

TEST_CASE("usage errors exit with code 2, help with 0") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("basis").code == 2);             // missing --two-j
  CHECK(run("basis --two-j 0").code == 2);   // out of range
  CHECK(run("basis --two-j 2 --L 1").code == 2);  // L without M
  CHECK(run("--help").code == 0);
  CHECK(run("check --help").code == 0);
}

TEST_CASE("basis: full listing and single operators") {
  RunResult all = run("basis --two-j 1");
  REQUIRE(all.code == 0);
  json doc = json::parse(all.out);
  CHECK(doc["two_j"] == 1);
  REQUIRE(doc["operators"].size() == 4);
  // Canonical order: (0,0), (1,1), (1,0), (1,-1).
  CHECK(doc["operators"][0]["L"] == 0);
  CHECK(doc["operators"][1]["L"] == 1);
  CHECK(doc["operators"][1]["M"] == 1);
  CHECK(doc["operators"][3]["M"] == -1);
  // T_11 = [[0,-1],[0,0]].
  auto t11 = doc["operators"][1]["matrix"];
  CHECK(t11["dim"] == 2);
  CHECK(double(t11["entries"][0][1][0]) == -1.0);
  CHECK(double(t11["entries"][0][1][1]) == 0.0);

  RunResult one = run("basis --two-j 2 --L=2 --M=0");
  REQUIRE(one.code == 0);
  json m = json::parse(one.out);
  CHECK(m["dim"] == 3);
  double s6 = 1.0 / std::sqrt(6.0);
  CHECK(double(m["entries"][0][0][0]) == doctest::Approx(s6).epsilon(1e-15));
  CHECK(double(m["entries"][1][1][0]) == doctest::Approx(-2 * s6).epsilon(1e-15));
  CHECK(double(m["entries"][2][2][0]) == doctest::Approx(s6).epsilon(1e-15));

  CHECK(run("basis --two-j 1 --L=3 --M=0").code == 2);
}

TEST_CASE("basis output is byte-identical across runs") {
  RunResult a = run("basis --two-j 3");
  RunResult b = run("basis --two-j 3");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("compose and decompose round-trip through files and stdin") {
  write_file("cli_tmp_bloch.json",
             R"({"two_j":2,"params":[0.21,-0.13,0.05,0.17,0.02,-0.11,0.07,0.19]})");
  RunResult mat = run("compose --input cli_tmp_bloch.json");
  REQUIRE(mat.code == 0);
  json m = json::parse(mat.out);
  CHECK(m["dim"] == 3);

  write_file("cli_tmp_matrix.json", mat.out);
  RunResult back = run("decompose --input cli_tmp_matrix.json");
  REQUIRE(back.code == 0);
  json v = json::parse(back.out);
  CHECK(v["two_j"] == 2);
  REQUIRE(v["params"].size() == 8);
  const double expect[8] = {0.21, -0.13, 0.05, 0.17, 0.02, -0.11, 0.07, 0.19};
  for (int i = 0; i < 8; ++i)
    CHECK(double(v["params"][i]) == doctest::Approx(expect[i]).epsilon(1e-12));

  // Same result when the matrix arrives on stdin.
  RunResult piped = run_shell("cat cli_tmp_matrix.json | " + bin_path() +
                              " decompose --input - 2>/dev/null");
  CHECK(piped.code == 0);
  CHECK(piped.out == back.out);

  // compose rejects a matrix document.
  CHECK(run("compose --input cli_tmp_matrix.json").code == 2);
}

TEST_CASE("decompose --operator expands a general matrix") {
  write_file("cli_tmp_op.json",
             R"({"dim":2,"entries":[[[0,0],[1,0]],[[0,0],[0,0]]]})");
  RunResult res = run("decompose --input cli_tmp_op.json --operator");
  REQUIRE(res.code == 0);
  json doc = json::parse(res.out);
  CHECK(doc["two_j"] == 1);
  REQUIRE(doc["coeffs"].size() == 4);
  // |m=1/2><m=-1/2| = -T_11: single coefficient -1 on (L,M) = (1,1).
  CHECK(doc["coeffs"][1]["L"] == 1);
  CHECK(doc["coeffs"][1]["M"] == 1);
  CHECK(double(doc["coeffs"][1]["coeff"][0]) == doctest::Approx(-1.0).epsilon(1e-14));
  for (int i : {0, 2, 3})
    CHECK(std::abs(double(doc["coeffs"][i]["coeff"][0])) <= 1e-15);
}

TEST_CASE("check: verdicts map to exit codes") {
  write_file("cli_tmp_mixed.json", kMixedQutrit);
  RunResult mixed = run("check --input cli_tmp_mixed.json");
  CHECK(mixed.code == 0);
  json rep = json::parse(mixed.out);
  CHECK(rep["verdict"] == "Positive");
  CHECK(rep["N"] == 3);
  CHECK(rep["method"] == "NewtonFromBloch");
  CHECK(rep["tolerance"] == 1e-9);
  REQUIRE(rep["S"].size() == 3);
  CHECK(double(rep["S"][0]) == doctest::Approx(1.0));
  CHECK(double(rep["S"][1]) == doctest::Approx(1.0 / 3.0));
  CHECK(double(rep["S"][2]) == doctest::Approx(1.0 / 27.0));
  CHECK(rep.contains("T"));
  CHECK(rep.contains("traces"));

  // Pure state: boundary of the body, Marginal, exit 3.
  write_file("cli_tmp_pure.json",
             R"({"dim":3,"entries":[[[1,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]]})");
  RunResult pure = run("check --input cli_tmp_pure.json --oracle");
  CHECK(pure.code == 3);
  CHECK(json::parse(pure.out)["verdict"] == "Marginal");

  // Axial vector with |V|^2 = 2/3 but negative determinant: exit 1.
  write_file("cli_tmp_hot.json",
             R"({"two_j":2,"params":[0,0,0,0.81649658092772603,0,0,0,0]})");
  RunResult hot = run("check --input cli_tmp_hot.json");
  CHECK(hot.code == 1);
  CHECK(json::parse(hot.out)["verdict"] == "NonPositive");

  // Malformed documents: exit 2.
  write_file("cli_tmp_bad.json", "this is not json");
  CHECK(run("check --input cli_tmp_bad.json").code == 2);
  write_file("cli_tmp_short.json", R"({"two_j":2,"params":[1,2]})");
  CHECK(run("check --input cli_tmp_short.json").code == 2);
  CHECK(run("check --input cli_tmp_missing.json").code == 2);
}

TEST_CASE("traces: powers of the maximally mixed state") {
  write_file("cli_tmp_mixed.json", kMixedQutrit);
  RunResult res = run("traces --input cli_tmp_mixed.json --kmax 3");
  REQUIRE(res.code == 0);
  json doc = json::parse(res.out);
  CHECK(doc["two_j"] == 2);
  CHECK(doc["kmax"] == 3);
  REQUIRE(doc["T"].size() == 4);  // T_0 .. T_3
  CHECK(double(doc["T"][0]) == 3.0);
  CHECK(double(doc["T"][1]) == 0.0);
  CHECK(double(doc["T"][2]) == 0.0);
  REQUIRE(doc["traces"].size() == 3);
  CHECK(double(doc["traces"][0]) == doctest::Approx(1.0));
  CHECK(double(doc["traces"][1]) == doctest::Approx(1.0 / 3.0));
  CHECK(double(doc["traces"][2]) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("scan: writes deterministic CSV and boundary JSON") {
  RunResult first = run("scan --pair x,y --resolution 21 --out cli_tmp_scan");
  REQUIRE(first.code == 0);
  std::string csv1 = read_file("cli_tmp_scan.csv");
  std::string json1 = read_file("cli_tmp_scan.json");

  // Header plus 21 x 21 rows.
  CHECK(csv1.rfind("s,t,norm_sq,F,classification\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv1)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 21 * 21);

  json doc = json::parse(json1);
  CHECK(doc["section"] == "I");
  CHECK(doc["pair"][0] == "x");
  CHECK(doc["pair"][1] == "y");
  CHECK(doc["resolution"] == 21);
  CHECK(doc["pure_states"].size() == 3);
  CHECK(doc["boundary"].size() >= 1);

  RunResult second = run("scan --pair x,y --resolution 21 --out cli_tmp_scan");
  REQUIRE(second.code == 0);
  CHECK(read_file("cli_tmp_scan.csv") == csv1);
  CHECK(read_file("cli_tmp_scan.json") == json1);

  // Family name instead of a pair.
  CHECK(run("scan --type VI --resolution 15 --out cli_tmp_scan6").code == 0);
  json d6 = json::parse(read_file("cli_tmp_scan6.json"));
  CHECK(d6["section"] == "VI");

  CHECK(run("scan --pair q,z --resolution 15 --out cli_tmp_bad").code == 2);
  CHECK(run("scan --resolution 15 --out cli_tmp_bad").code == 2);
  CHECK(run("scan --pair x,y --type VI --out cli_tmp_bad").code == 2);
  CHECK(run("scan --pair x,x --out cli_tmp_bad").code == 2);
}

TEST_CASE("verify: identity suites pass and the guard rejects huge spins") {
  RunResult small = run("verify --two-j-max 2");
  CHECK(small.code == 0);
  CHECK(small.out.find("all suites passed") != std::string::npos);

  RunResult as_json = run("verify --two-j-max 1 --format json");
  REQUIRE(as_json.code == 0);
  json doc = json::parse(as_json.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["suites"].size() == 5);
  for (const auto& suite : doc["suites"]) CHECK(suite["pass"] == true);

  CHECK(run("verify --two-j-max 0").code == 2);
  CHECK(run("verify --two-j-max 99").code == 2);
  CHECK(run("verify").code == 2);
}
