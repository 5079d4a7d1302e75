#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "unruh/sweep.hpp"

using namespace unruh;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

SweepConfig config_for(int grid_n, std::vector<Quantity> qs,
                       OutputFormat fmt = OutputFormat::Csv) {
  SweepConfig c;
  c.grid_n = grid_n;
  c.format = fmt;
  c.output_path = "unused";
  c.quantities = std::move(qs);
  return c;
}

std::vector<std::vector<double>> parse_csv_values(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.find_first_of("0123456789") ==
                                              std::string::npos) {
      continue;
    }
    if (!(line[0] == '-' || (line[0] >= '0' && line[0] <= '9'))) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      const std::string cell = line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      row.push_back(std::strtod(cell.c_str(), nullptr));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("grid points span the closed interval") {
  const std::vector<double> two = grid_points(2);
  CHECK(two.front() == 0.0);
  CHECK(two.back() == kQuarterPi);
  const std::vector<double> three = grid_points(3);
  CHECK(three[1] == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
}

TEST_CASE("two-point delta sweep hits the documented corners") {
  const SweepTable t = run_sweep(config_for(2, {Quantity::Deltas}));
  REQUIRE(t.rows.size() == 4);
  REQUIRE(t.columns == std::vector<std::string>{"r_b", "r_c", "delta_n_a",
                                                "delta_n_bi", "delta_n_ci",
                                                "delta_pi"});
  // row-major in r_b then r_c
  CHECK(t.rows[0][0] == 0.0);
  CHECK(t.rows[0][1] == 0.0);
  CHECK(t.rows[1][0] == 0.0);
  CHECK(t.rows[1][1] == kQuarterPi);
  CHECK(t.rows[3][0] == kQuarterPi);

  CHECK(t.rows[0][5] == 0.0);  // delta_pi at the origin
  CHECK(t.rows[3][5] == doctest::Approx(0.011224175097420325).epsilon(1e-8));
}

TEST_CASE("three-point corrected sweep has the midpoint at its center row") {
  const SweepTable t = run_sweep(config_for(3, {Quantity::Corrected}));
  REQUIRE(t.rows.size() == 9);
  CHECK(t.rows[4][0] == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
  CHECK(t.rows[4][1] == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
  CHECK(t.rows[4][2] == doctest::Approx(0.84289744238344178).epsilon(1e-12));
}

TEST_CASE("quantity order in the output is canonical") {
  const SweepTable t =
      run_sweep(config_for(2, {Quantity::Series, Quantity::Corrected}));
  CHECK(t.columns == std::vector<std::string>{"r_b", "r_c", "n_a_corrected",
                                              "n_bi_corrected",
                                              "n_ci_corrected", "pi_corrected",
                                              "delta_pi_series"});
}

TEST_CASE("csv output is deterministic and carries the schema header") {
  const SweepTable t = run_sweep(config_for(4, {Quantity::Corrected,
                                                Quantity::Deltas}));
  std::ostringstream first, second;
  write_csv(t, first);
  write_csv(t, second);
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind("# unruh-tangle sweep v1\n", 0) == 0);
  CHECK(first.str().find("r_b,r_c,n_a_corrected") != std::string::npos);
  CHECK(first.str().find("\r") == std::string::npos);
}

TEST_CASE("parallel evaluation reproduces the sequential table bitwise") {
  SweepConfig seq = config_for(5, {Quantity::Corrected, Quantity::Numeric,
                                   Quantity::Deltas});
  seq.jobs = 1;
  SweepConfig par = seq;
  par.jobs = 4;
  const SweepTable a = run_sweep(seq);
  const SweepTable b = run_sweep(par);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].size() == b.rows[i].size());
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      CHECK(a.rows[i][j] == b.rows[i][j]);
    }
  }
}

TEST_CASE("json and csv sweeps contain identical numeric values") {
  const SweepTable t = run_sweep(config_for(3, {Quantity::Corrected,
                                                Quantity::Series}));
  std::ostringstream csv_out, json_out;
  write_csv(t, csv_out);
  write_json(t, json_out);

  const std::vector<std::vector<double>> csv_rows =
      parse_csv_values(csv_out.str());
  const nlohmann::json j = nlohmann::json::parse(json_out.str());

  CHECK(j["grid_n"] == 3);
  CHECK(j["quantities"] ==
        nlohmann::json::array({"corrected", "series"}));
  REQUIRE(j["rows"].size() == csv_rows.size());
  for (std::size_t r = 0; r < csv_rows.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const double from_json = j["rows"][r][t.columns[c]].get<double>();
      CHECK(from_json == csv_rows[r][c]);
    }
  }
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0, kQuarterPi, 0.84289744238344178, 1e-300,
                   -3.915e17, 0.1}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("invalid sweep configurations are rejected") {
  CHECK_THROWS_AS(validate(config_for(1, {Quantity::Corrected})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(config_for(5000, {Quantity::Corrected})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(config_for(16, {})), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_quantity("bogus"), std::invalid_argument);
  CHECK(parse_quantity("deltas") == Quantity::Deltas);
}

TEST_CASE("verification suites pass on a coarse grid") {
  const std::vector<SuiteResult> results = run_verification(7);
  REQUIRE(results.size() == 5);
  for (const SuiteResult& s : results) {
    INFO(s.name, " max_error=", s.max_error);
    CHECK(s.passed);
    CHECK(s.checks > 0);
  }
  CHECK(results[0].name == "oracle-equivalence");
  CHECK(results[4].name == "series-residual");
}
