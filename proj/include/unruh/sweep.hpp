#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruh/tangles.hpp"

namespace unruh {

enum class Quantity { Corrected, Legacy, Numeric, Deltas, Series };
enum class OutputFormat { Csv, Json };

/// Parse "corrected", "legacy", "numeric", "deltas" or "series".
Quantity parse_quantity(const std::string& name);
std::string quantity_name(Quantity q);

/// Grid sweep configuration: grid_n points per axis, endpoints inclusive,
/// over [0, pi/4]^2.
struct SweepConfig {
  int grid_n = 33;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;
  std::vector<Quantity> quantities;  // deduplicated, canonical order
  int jobs = 0;                      // 0 = hardware concurrency
};

/// Throws std::invalid_argument when grid_n is outside [2, 4096] or the
/// quantity set is empty.
void validate(const SweepConfig& config);

std::vector<double> grid_points(int grid_n);

/// Column-oriented sweep result. Rows are ordered row-major in r_b then r_c;
/// columns are r_b, r_c, then the columns of each requested quantity in
/// canonical order (corrected, legacy, numeric, deltas, series).
struct SweepTable {
  int grid_n = 0;
  std::vector<Quantity> quantities;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluate the sweep. Rows at distinct parameter points are independent, so
/// they are fanned out across `jobs` workers and written into their
/// preassigned slots; the result is bitwise identical to a sequential run.
SweepTable run_sweep(const SweepConfig& config);

void write_csv(const SweepTable& table, std::ostream& out);
void write_json(const SweepTable& table, std::ostream& out);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);
/// Scientific text with 16 significant digits, for point reports.
std::string format_scientific(double value);

/// One verification suite outcome. When a suite fails, the first failing
/// grid point and the offending quantity are recorded.
struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  double max_error = 0.0;
  double fail_r_b = 0.0;
  double fail_r_c = 0.0;
  std::string fail_quantity;
};

/// Run the five invariant suites on an inclusive grid_n x grid_n grid:
/// oracle-equivalence, symmetry, two-tangle-vanishing, matrix-template and
/// series-residual.
std::vector<SuiteResult> run_verification(int grid_n);

}  // namespace unruh
