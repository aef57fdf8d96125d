#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cgv/parser.hpp"
#include "cgv/suites.hpp"

namespace {

constexpr int kUsageError = 2;

std::string suite_list() {
  std::string out = "all";
  for (auto name : cgv::kSuiteNames) out += ", " + std::string(name);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks for the tricanonical cubics and the quotient-curve genus accounting"};
  app.require_subcommand(1);

  cgv::RunConfig config;
  std::string suite;
  std::string format = "text";
  std::string out_path;
  auto* check = app.add_subcommand("check", "Run a suite of checks (" + suite_list() + ")");
  check->add_option("suite", suite, "Suite name")->required();
  check->add_option("--m", config.m, "Value of the parameter m, an expression in r");
  check->add_option("--seed", config.seed, "Seed of the survey generator");
  check->add_option("--survey", config.survey, "Number of survey points");
  check->add_option("--bound", config.bound, "Coefficient bound of the pencil witness scan");
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_path, "Write the report to this file");
  check->add_flag("--timing", config.timing, "Record elapsed milliseconds per check");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Reduce an expression over Q(r)[X,Y,Z,T,m] and print it");
  eval->add_option("expr", expr, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  if (eval->parsed()) {
    try {
      std::cout << cgv::eval_expr(expr) << "\n";
      return 0;
    } catch (const cgv::ParseError& e) {
      std::cerr << "cgv: " << e.what() << "\n";
      return kUsageError;
    }
  }

  config.format = format == "json" ? cgv::OutputFormat::json : cgv::OutputFormat::text;
  try {
    const auto report = cgv::run_suite(suite, config);
    const std::string text = config.format == cgv::OutputFormat::json ? cgv::to_json(report) : cgv::to_text(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!(file << text)) {
        std::cerr << "cgv: cannot write " << out_path << "\n";
        return 1;
      }
    }
    return cgv::exit_code(report);
  } catch (const cgv::ConfigError& e) {
    std::cerr << "cgv: " << e.what() << "\n\n" << check->help();
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "cgv: internal error: " << e.what() << "\n";
    return 1;
  }
}
