#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout and stderr interleaved
};

// Single-quote each whitespace-separated token so the shell never interprets
// partition brackets as globs or regime names like p<1 as redirects.
RunResult run(const std::string& args) {
  std::string cmd = std::string("'") + PERMASTAT_CLI_PATH + "'";
  std::istringstream tokens(args);
  std::string tok;
  while (tokens >> tok) cmd += " '" + tok + "'";
  cmd += " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("moment subcommand emits the frozen reference value") {
  const auto r = run("moment --lambda [4,3,2] --alpha 1 --beta 2 --N 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"value\": \"13/8820\""));
  CHECK(contains(r.output, "\"value_float\": \"0.00147392290249\""));
  CHECK(contains(r.output, "\"route\": \"schur-kadell\""));
  CHECK_FALSE(contains(r.output, "timestamp"));

  const auto b1 = run("moment --lambda [4,3,2] --beta 1 --N 3");
  CHECK(b1.exit_code == 0);
  CHECK(contains(b1.output, "\"value\": \"13/3465\""));
  CHECK(contains(b1.output, "\"route\": \"jack-kadell\""));

  const auto b4 = run("moment --lambda [4,3,2] --beta 4 --N 3");
  CHECK(b4.exit_code == 0);
  CHECK(contains(b4.output, "\"value\": \"37/82368\""));
}

TEST_CASE("repeat runs are byte-identical; --timestamp opts out") {
  const std::string args = "moment --lambda [2,1] --alpha 7/2 --beta 2 --N 4";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto stamped = run("--timestamp " + args);
  CHECK(stamped.exit_code == 0);
  CHECK(contains(stamped.output, "timestamp"));
}

TEST_CASE("route can be forced") {
  const auto r = run("moment --lambda [2] --N 2 --route hyperdet");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"value\": \"11/30\""));
  CHECK(contains(r.output, "\"route\": \"hyperdet-cauchy\""));
}

TEST_CASE("usage errors exit with 2 and a machine-readable payload") {
  CHECK(run("moment --lambda [3,4] --N 2").exit_code == 2);
  CHECK(run("moment --lambda oops --N 2").exit_code == 2);
  CHECK(run("moment --lambda [1] --route bogus").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  const auto r = run("moment --lambda [3,4] --N 2");
  CHECK(contains(r.output, "\"error\""));
  CHECK(contains(r.output, "\"type\": \"usage\""));
}

TEST_CASE("computation errors exit with 3") {
  const auto r = run("moment --lambda [1,1] --N 1");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "\"error\""));
  CHECK(contains(r.output, "\"type\": \"computation\""));
}

TEST_CASE("help is a success") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("moment --help").exit_code == 0);
}

TEST_CASE("expand subcommand") {
  const auto r = run("expand --lambda [3,1] --basis schur");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"basis\": \"schur\""));
  CHECK(contains(r.output, "\"coeff\": \"2\""));

  const auto jack = run("expand --lambda [4,3,2] --basis jackJ --xi 1/2 --max-length 3");
  CHECK(jack.exit_code == 0);
  CHECK(contains(jack.output, "\"xi\": \"1/2\""));
  CHECK(contains(jack.output, "\"coeff\": \"-2/1575\""));
  CHECK(contains(jack.output, "\"coeff\": \"4/2025\""));
}

TEST_CASE("limit subcommand reports conjectural status") {
  const auto r = run("limit --lambda [4,3,2] --regime p<1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"value\": \"525/16384\""));
  CHECK(contains(r.output, "\"value_float\": \"0.0320434570312\""));
  CHECK(contains(r.output, "\"conjecture\": true"));

  const auto lin = run("limit --lambda [4,3,2] --regime p=1 --ell 4");
  CHECK(lin.exit_code == 0);
  CHECK(contains(lin.output, "\"value\": \"1253598528/6103515625\""));

  const auto single = run("limit --lambda [3] --regime p>1");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.output, "\"value\": \"1\""));
  CHECK(contains(single.output, "\"conjecture\": false"));
}

TEST_CASE("probe subcommand tabulates deviations") {
  const auto r = run("probe --lambda [2] --beta 2 --regime p<1 --N 2,4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"limit\": \"3/8\""));
  CHECK(contains(r.output, "\"N\": 2"));
  CHECK(contains(r.output, "\"N\": 4"));
  CHECK(contains(r.output, "rel_dev"));
}

TEST_CASE("sweep subcommand produces CSV with the documented header") {
  const auto r = run("sweep --lambda [4,3,2] --beta 2 --N 3 --alpha-grid 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("alpha_or_N,value_rational,value_float\n", 0) == 0);
  CHECK(contains(r.output, "1,13/8820,0.00147392290249"));

  const auto n_grid = run("sweep --lambda [2] --beta 2 --N-grid 2,4 --alpha-rule p<1");
  CHECK(n_grid.exit_code == 0);
  CHECK(contains(n_grid.output, "2,11/30,"));

  // exactly one grid must be chosen
  CHECK(run("sweep --lambda [2] --beta 2 --N 3").exit_code == 2);
  CHECK(run("sweep --lambda [2] --beta 2 --N 3 --alpha-grid 1 --N-grid 2 --alpha-rule p<1")
            .exit_code == 2);
}

TEST_CASE("sweep writes output files atomically") {
  namespace fs = std::filesystem;
  const fs::path out = fs::temp_directory_path() / "permastat_sweep_test.csv";
  std::error_code ec;
  fs::remove(out, ec);

  const auto ok = run("sweep --lambda [2,1] --beta 2 --N 3 --alpha-grid 1,3/2 --out " +
                      out.string());
  CHECK(ok.exit_code == 0);
  REQUIRE(fs::exists(out));
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "alpha_or_N,value_rational,value_float");
  in.close();
  fs::remove(out, ec);

  // a failing run must not leave a partial file behind
  const auto bad = run("sweep --lambda [2,1] --beta 2 --N 1 --alpha-grid 1 --out " + out.string());
  CHECK(bad.exit_code == 3);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("verify subcommand quick level") {
  const auto r = run("verify --level quick");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[PASS]"));
  CHECK_FALSE(contains(r.output, "[FAIL]"));
  CHECK(contains(r.output, "all passed"));
}

TEST_CASE("json sweep format") {
  const auto r = run("sweep --lambda [2] --beta 2 --N 2 --alpha-grid 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"value\": \"11/30\""));
  CHECK(contains(r.output, "\"value_float\": \"0.366666666667\""));
}
