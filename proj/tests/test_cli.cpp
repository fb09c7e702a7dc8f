#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mathieu/format.hpp"
#include "mathieu/mathieu.hpp"
#include "output.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/mathieu_cli_out_" + std::to_string(counter) + ".txt";
  std::string err_path = "/tmp/mathieu_cli_err_" + std::to_string(counter) + ".txt";
  ++counter;
  std::string command = std::string(MATHIEU_CLI_PATH) + " " + args + " > " +
                        out_path + " 2> " + err_path;
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("output table: emit edge cases") {
  // Empty record list: CSV is the header only, JSON an empty array.
  cli::OutputTable empty;
  empty.columns = {"a", "b"};
  CHECK(cli::emit(empty, cli::Format::csv) == "a,b\n");
  CHECK(cli::emit(empty, cli::Format::json) == "[]\n");

  // One record renders as a single-element array with ordered keys.
  cli::OutputTable one;
  one.columns = {"x", "label"};
  one.add_row({0.5, std::string("plain")});
  CHECK(cli::emit(one, cli::Format::json) == "[\n  {\"x\": 0.5, \"label\": \"plain\"}\n]\n");

  // RFC-4180 quoting: embedded commas and quotes.
  cli::OutputTable quoted;
  quoted.columns = {"note"};
  quoted.add_row({std::string("a,b \"c\"")});
  CHECK(cli::emit(quoted, cli::Format::csv) == "note\n\"a,b \"\"c\"\"\"\n");

  // Non-finite values are never serialized.
  cli::OutputTable bad;
  bad.columns = {"v"};
  CHECK_THROWS_AS(bad.add_row({std::nan("")}), mathieu::Error);
  CHECK_THROWS_AS(bad.add_row({1.0 / 0.0}), mathieu::Error);

  // 17-significant-digit doubles round-trip exactly.
  for (double v : {0.1, -5.0515940565733405e-05, 3.141592653589793, 1e300}) {
    CHECK(std::strtod(mathieu::format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("cli: eval emits a parseable record and is deterministic") {
  const std::string args = "eval --mu 1 --r 10 --z -1 --tol 1e-12";
  RunResult first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  RunResult second = run_cli(args);
  CHECK(first.out == second.out);  // byte-identical

  auto parsed = nlohmann::json::parse(first.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  auto& rec = parsed[0];
  CHECK(rec["method"] == "direct");
  // Round-trip: the parsed double equals the library value bit-for-bit.
  auto lib = mathieu::mathieu_direct({1.0, 10.0, {-1.0, 0.0}}, 1e-12);
  CHECK(rec["value_re"].get<double>() == lib.value.real());
  CHECK(rec["value_im"].get<double>() == lib.value.imag());
  CHECK(rec["err_bound"].get<double>() == lib.error_bound);
  CHECK(rec["terms"].get<long long>() == lib.terms_used);
  CHECK(rec["value_re"].get<double>() == doctest::Approx(-5.0e-5).epsilon(2e-2));
}

TEST_CASE("cli: csv schema for compare") {
  RunResult r = run_cli(
      "compare --mu 1 --z -1 --r-min 10 --r-max 40 --points 4 --format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "r,direct_re,direct_im,asym_re,asym_im,abs_err,rel_err");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("cli: expand pins the alternating coefficients") {
  RunResult r = run_cli("expand --mu 1 --z -1 --kmax 2");
  REQUIRE(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["c_re"].get<double>() == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(parsed[1]["c_re"].get<double>() == doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("cli: exit codes") {
  // Usage error: unknown option.
  RunResult usage = run_cli("eval --mu 1 --r 10 --z -1 --bogus 3");
  CHECK(usage.exit_code == 2);

  // Domain error: z on the forbidden boundary for asym.
  RunResult dom = run_cli("asym --mu 1 --r 10 --z 1");
  CHECK(dom.exit_code == 1);
  auto err = nlohmann::json::parse(dom.err);
  CHECK(err.contains("error"));
  CHECK(err.contains("message"));

  // Help exits 0.
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
  std::string path = "/tmp/mathieu_cli_file_out.json";
  RunResult direct = run_cli("expand --mu 1 --z -1 --kmax 1");
  RunResult to_file = run_cli("expand --mu 1 --z -1 --kmax 1 --out " + path);
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("cli: identity and probe subcommands run clean") {
  CHECK(run_cli("identity jonquiere --alpha 2.5 --z -0.5").exit_code == 0);
  CHECK(run_cli("identity multisection --alpha -3 --p 1 --q 2").exit_code == 0);
  CHECK(run_cli("identity eta --s 2").exit_code == 0);
  CHECK(run_cli("identity zastavnyi --a 1 --gamma 1 --alpha 2 --mu 2 --y 1e-4 "
                "--kmax 3")
            .exit_code == 0);
  CHECK(run_cli("smallx --family sine --alpha 0 --beta 1 --mu 0 --r 1 --x 0.01 "
                "--tol 1e-4")
            .exit_code == 0);
  CHECK(run_cli("probe-order --mu 1 --z -1 --r 20,30,40 --tol 1e-12").exit_code == 0);
  CHECK(run_cli("eval --mu 1 --r 5 --x 3.14159").exit_code == 0);
  CHECK(run_cli("smallx --family logfact --alpha 0 --beta 3 --mu 0 --r 1 --x 0.01 "
                "--tol 1e-8")
            .exit_code == 0);
  CHECK(run_cli("asym --mu 1 --r 25 --x 1.0 --kmax 2").exit_code == 0);
}
