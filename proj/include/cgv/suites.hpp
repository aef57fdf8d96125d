#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgv/number_field.hpp"
#include "cgv/report.hpp"

namespace cgv {

/// Bad suite name, malformed --m, out-of-range sizes. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, json };

struct RunConfig {
  /// Expression for m; empty keeps m symbolic where the checks allow it.
  std::optional<std::string> m;
  std::uint64_t seed = 1;
  std::size_t survey = 100;
  long bound = 5;
  OutputFormat format = OutputFormat::text;
  /// Record wall-clock time per check; off by default so output is reproducible.
  bool timing = false;

  /// Parsed m, if given. Throws ConfigError if it does not reduce to an element of Q(r).
  std::optional<NFElem> m_value() const;
  /// m for checks that need a number: the given value, else 1.
  NFElem m_or_default() const;
  /// Throws ConfigError on invalid sizes or m.
  void validate() const;
};

inline constexpr std::string_view kSuiteNames[] = {"sigma", "cubics",  "base-locus", "quadric-independence",
                                                   "tangent", "divisors", "genus",     "pencil"};

struct SuiteSummary {
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t indeterminate = 0;
  std::size_t errors = 0;
  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteReport {
  std::string suite;
  /// Echo of the configuration, all values as exact strings.
  std::optional<std::string> m;
  std::string seed;
  std::string survey;
  std::string bound;
  std::vector<CheckReport> checks;
  /// Internal errors, one line per failed check group.
  std::vector<std::string> errors;
  SuiteSummary summary;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Runs a named suite or "all". Internal failures are collected in `errors`;
/// throws ConfigError for an unknown suite or invalid config.
SuiteReport run_suite(std::string_view name, const RunConfig& config);

/// 0 when no internal error occurred, otherwise 1.
int exit_code(const SuiteReport& report);

std::string to_json(const SuiteReport& report);
/// Throws std::invalid_argument on malformed input.
SuiteReport suite_report_from_json(std::string_view text);
std::string to_text(const SuiteReport& report);

/// Parses and prints canonically. Throws ParseError.
std::string eval_expr(std::string_view text);

}  // namespace cgv
