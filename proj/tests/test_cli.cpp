// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "output.hpp"
#include "table_fixtures.hpp"

namespace {

std::string binary_path() {
  const char* path = std::getenv("CHA_BIN");
  REQUIRE_MESSAGE(path != nullptr, "CHA_BIN must point at the cha binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("emit: empty row list gives a header-only CSV") {
  cha::cli::OutputRecord record;
  record.command = "sum";
  record.columns = {"n", "value"};
  std::ostringstream out;
  cha::cli::emit(record, cha::cli::Format::csv, out);
  CHECK(out.str() == "n,value\n");

  std::ostringstream json;
  cha::cli::emit(record, cha::cli::Format::json, json);
  std::istringstream in(json.str());
  const auto back = cha::cli::parse_json(in);
  CHECK(back.rows.empty());
  CHECK(back.columns == record.columns);
}

TEST_CASE("emit/parse round-trip both formats") {
  cha::cli::OutputRecord record;
  record.command = "demo";
  record.p = 2;
  record.q = 1;
  record.oracle_digits = 42;
  record.columns = {"n", "value", "exact"};
  record.add_row({"0", "0.250000", "1/4"});
  record.add_row({"1", "0.666667", "2/3"});
  record.summary.emplace_back("note", "fixture");

  std::ostringstream csv;
  cha::cli::emit(record, cha::cli::Format::csv, csv);
  CHECK(csv.str().find("1/4") != std::string::npos);
  std::istringstream csv_in(csv.str());
  const auto csv_back = cha::cli::parse_csv(csv_in);
  CHECK(csv_back.columns == record.columns);
  CHECK(csv_back.rows == record.rows);

  std::ostringstream json;
  cha::cli::emit(record, cha::cli::Format::json, json);
  std::istringstream json_in(json.str());
  const auto json_back = cha::cli::parse_json(json_in);
  CHECK(json_back.rows == record.rows);
  CHECK(json_back.summary == record.summary);
  CHECK(json_back.oracle_digits == record.oracle_digits);
  CHECK(json_back.schema_version == "1");
}

TEST_CASE("table fixtures match the library") {
  for (const int id : {1, 2, 3}) {
    const auto result = cha::cli::check_table(id);
    CHECK(result.all_ok);
  }
  CHECK(cha::cli::table_cells(2).size() == 25);
  CHECK(cha::cli::table_cells(3).size() == 12);
  CHECK_THROWS_AS(cha::cli::check_table(9), std::invalid_argument);
}

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run("").exit_code == cha::cli::kExitUsage);
  CHECK(run("nonsense").exit_code == cha::cli::kExitUsage);
  CHECK(run("accel --kind bogus --n 3").exit_code == cha::cli::kExitUsage);
  CHECK(run("sum --p 0 --q 1 --n 3").exit_code == cha::cli::kExitUsage);
  CHECK(run("rates --theorem 5").exit_code == cha::cli::kExitUsage);
}

TEST_CASE("cli: resource guards exit 3") {
  CHECK(run("reduite --m 200000 --no-timing").exit_code == cha::cli::kExitResource);
  CHECK(run("sum --n 5 --max-m 3 --m 4").exit_code == cha::cli::kExitUsage);  // unknown flag
  CHECK(run("reduite --m 50 --max-m 10 --no-timing").exit_code == cha::cli::kExitResource);
  CHECK(run("oracle --digits 2000 --no-timing").exit_code == cha::cli::kExitResource);
  CHECK(run("chi --n 1200 --no-timing").exit_code == cha::cli::kExitResource);
}

TEST_CASE("cli: sum values") {
  const RunResult result = run("sum --p 2 --q 1 --n-first 0 --n-last 1 --exact --no-timing");
  CHECK(result.exit_code == 0);
  std::istringstream in(result.output);
  const auto record = cha::cli::parse_csv(in);
  REQUIRE(record.rows.size() == 2);
  CHECK(record.rows[0][2] == "1");
  CHECK(record.rows[1][2] == "2/3");
}

TEST_CASE("cli: accel w exposes the exact approximant") {
  const RunResult result = run("accel --kind w --p 2 --q 1 --n 10 --exact --no-timing");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("945428987002880/1203757572990973") != std::string::npos);
}

TEST_CASE("cli: table command verifies and exits 0") {
  for (const int id : {1, 2, 3}) {
    const RunResult result = run("table --id " + std::to_string(id) + " --no-timing");
    CHECK(result.exit_code == 0);
  }
}

TEST_CASE("cli: json output parses and carries the schema version") {
  const RunResult result = run("oracle --p 1 --q 1 --digits 30 --format json --no-timing");
  CHECK(result.exit_code == 0);
  std::istringstream in(result.output);
  const auto record = cha::cli::parse_json(in);
  CHECK(record.schema_version == "1");
  CHECK(record.command == "oracle");
  REQUIRE(record.rows.size() == 1);
  CHECK(record.rows[0][4].substr(0, 10) == "0.69314718");
}

TEST_CASE("cli: byte-identical reruns and thread counts") {
  const std::string chi = "chi --p 2 --q 1 --n 60 --no-timing";
  CHECK(run(chi).output == run(chi).output);

  const std::string base = "scan --N 16 --p 2 --q 1 --no-timing";
  const std::string once = run(base + " --threads 1").output;
  const std::string many = run(base + " --threads 4").output;
  CHECK_FALSE(once.empty());
  CHECK(once == many);

  const std::string json = "rates --theorem 1 --p 2 --q 1 --n-first 50 --n-last 150 "
                           "--n-step 50 --format json --no-timing";
  CHECK(run(json).output == run(json).output);
}

TEST_CASE("cli: rates theorem 1 columns") {
  const RunResult result =
      run("rates --theorem 1 --p 2 --q 1 --n-first 50 --n-last 150 --n-step 50 --no-timing");
  CHECK(result.exit_code == 0);
  std::istringstream in(result.output);
  const auto record = cha::cli::parse_csv(in);
  REQUIRE(record.columns.size() >= 3);
  CHECK(record.columns[0] == "n");
  CHECK(record.columns[1] == "error");
  CHECK(record.columns[2] == "normalized");
  CHECK(record.rows.size() == 3);
}

TEST_CASE("cli: oracle file cache round-trips") {
  const std::string dir = "/tmp/cha-test-cache";
  std::system(("rm -rf " + dir).c_str());
  const std::string args = "oracle --p 2 --q 1 --digits 40 --cache-dir " + dir + " --no-timing";
  const RunResult first = run(args);
  CHECK(first.exit_code == 0);
  const RunResult second = run(args);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  const RunResult fresh = run("oracle --p 2 --q 1 --digits 40 --no-timing");
  CHECK(fresh.output == first.output);
}
