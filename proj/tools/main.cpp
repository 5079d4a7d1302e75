#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruh/sweep.hpp"
#include "unruh/tangles.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_field(const char* name, double value) {
  std::cout << "  " << name << " = " << unruh::format_scientific(value) << '\n';
}

int cmd_eval(double r_b, double r_c) {
  const unruh::AccelPair p{r_b, r_c};
  if (!unruh::in_range(p)) {
    std::cerr << "error: r_b and r_c must lie in [0, pi/4]\n";
    return kExitUsage;
  }
  const unruh::TangleReport r = unruh::make_report(p);

  std::cout << "point r_b=" << unruh::format_double(p.r_b)
            << " r_c=" << unruh::format_double(p.r_c) << '\n';
  std::cout << "one-tangles (corrected closed form):\n";
  print_field("n_a", r.n_a);
  print_field("n_bi", r.n_bi);
  print_field("n_ci", r.n_ci);
  std::cout << "one-tangles (legacy closed form):\n";
  print_field("n_a_legacy", r.n_a_legacy);
  print_field("n_bi_legacy", r.n_bi_legacy);
  print_field("n_ci_legacy", r.n_ci_legacy);
  std::cout << "one-tangles (matrix pipeline):\n";
  print_field("n_a_numeric", r.n_a_numeric);
  print_field("n_bi_numeric", r.n_bi_numeric);
  print_field("n_ci_numeric", r.n_ci_numeric);
  std::cout << "two-tangles:\n";
  for (std::size_t k = 0; k < unruh::kVertexPairs.size(); ++k) {
    const std::string name =
        "n_" + std::string(unruh::to_string(unruh::kVertexPairs[k].first)) +
        "," + std::string(unruh::to_string(unruh::kVertexPairs[k].second));
    print_field(name.c_str(), r.two_tangles[k]);
  }
  std::cout << "pi-tangles:\n";
  print_field("pi_corrected", r.pi_corrected);
  print_field("pi_legacy", r.pi_legacy);
  print_field("pi_numeric", r.pi_numeric);
  std::cout << "differences:\n";
  print_field("delta_pi", r.delta_pi);
  print_field("delta_pi_series", r.delta_pi_series);

  if (!unruh::report_consistent(r)) {
    std::cerr << "error: closed forms and matrix pipeline disagree beyond "
                 "tolerance\n";
    return kExitVerifyFailed;
  }
  std::cout << "consistency: closed forms match matrix pipeline\n";
  return kExitOk;
}

int cmd_sweep(const unruh::SweepConfig& config) {
  const unruh::SweepTable table = unruh::run_sweep(config);

  std::ostringstream body;
  if (config.format == unruh::OutputFormat::Csv) {
    unruh::write_csv(table, body);
  } else {
    unruh::write_json(table, body);
  }

  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << config.output_path
              << "' for writing\n";
    return kExitIo;
  }
  out << body.str();
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << config.output_path << "'\n";
    return kExitIo;
  }
  std::cout << "wrote " << table.rows.size() << " rows to "
            << config.output_path << '\n';
  return kExitOk;
}

int cmd_verify(int grid_n) {
  const std::vector<unruh::SuiteResult> results =
      unruh::run_verification(grid_n);

  std::printf("%-22s %8s %14s   %s\n", "suite", "checks", "max_error",
              "result");
  bool all_passed = true;
  const unruh::SuiteResult* first_failure = nullptr;
  for (const unruh::SuiteResult& s : results) {
    std::printf("%-22s %8ld %14.3e   %s\n", s.name.c_str(), s.checks,
                s.max_error, s.passed ? "PASS" : "FAIL");
    if (!s.passed && first_failure == nullptr) first_failure = &s;
    all_passed = all_passed && s.passed;
  }
  if (!all_passed) {
    std::printf("first failure: r_b=%s r_c=%s quantity=%s\n",
                unruh::format_double(first_failure->fail_r_b).c_str(),
                unruh::format_double(first_failure->fail_r_c).c_str(),
                first_failure->fail_quantity.c_str());
    return kExitVerifyFailed;
  }
  std::printf("all suites passed on a %dx%d grid\n", grid_n, grid_n);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Negativities and pi-tangle of a tripartite fermionic GHZ state with "
      "two accelerated observers"};
  app.require_subcommand(1);

  double r_b = 0.0, r_c = 0.0;
  CLI::App* eval =
      app.add_subcommand("eval", "Report every tangle quantity at one point");
  eval->add_option("r_b", r_b, "Bob's acceleration parameter, radians")
      ->required();
  eval->add_option("r_c", r_c, "Charlie's acceleration parameter, radians")
      ->required();

  int grid_n = 33;
  std::string quantities_arg = "corrected,legacy,numeric,deltas,series";
  std::string format_arg = "csv";
  std::string out_path;
  int jobs = 0;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a grid over [0, pi/4]^2 and write a data file");
  sweep->add_option("--grid", grid_n, "Points per axis, endpoints inclusive")
      ->capture_default_str();
  sweep->add_option("--quantities", quantities_arg,
                    "Comma-separated subset of "
                    "corrected,legacy,numeric,deltas,series")
      ->capture_default_str();
  sweep->add_option("--format", format_arg, "csv or json")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Output file path")->required();
  sweep->add_option("--jobs", jobs, "Worker threads (0 = auto)")
      ->capture_default_str();

  int verify_grid = 33;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full invariant suite and print a pass/fail table");
  verify->add_option("--grid", verify_grid, "Points per axis")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(r_b, r_c);

    if (sweep->parsed()) {
      unruh::SweepConfig config;
      config.grid_n = grid_n;
      config.output_path = out_path;
      config.jobs = jobs;
      if (format_arg == "csv") {
        config.format = unruh::OutputFormat::Csv;
      } else if (format_arg == "json") {
        config.format = unruh::OutputFormat::Json;
      } else {
        std::cerr << "error: --format must be csv or json\n";
        return kExitUsage;
      }
      std::stringstream names(quantities_arg);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (!name.empty()) config.quantities.push_back(unruh::parse_quantity(name));
      }
      unruh::validate(config);
      return cmd_sweep(config);
    }

    if (verify->parsed()) {
      if (verify_grid < 2 || verify_grid > 4096) {
        std::cerr << "error: --grid must lie in [2, 4096]\n";
        return kExitUsage;
      }
      return cmd_verify(verify_grid);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
