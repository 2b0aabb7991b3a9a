#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ballgeo/ballspace.hpp"

namespace ballgeo::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kExpectationsMet = 0, kMismatch = 1, kMalformed = 2 };

/// Flat "key = value" scenario; '#' starts a comment.
///
///   model = taxicab_r2          catalog id, or quotient_line
///   model.<param> = value       catalog parameters (model.n = 2, model.k = 3, ...)
///   suite = isometry, lipschitz lipschitz | isometry | injectivity | extendibility |
///                               product | quotient | convergence | lift
///   n, seed, eps, window, r_max, tolerance
///   include_designated_witness = true | false
///   expect = <verdict>          overrides the ground-truth expectation
///   isometry = <id>             lift suite
///   action.generator = 1, 0     quotient suite and quotient_line
///   action.bound = 64
///   family = pullback_line | constant
///   family.indices = 2, 4, 8
///   limit.x, limit.y, limit.t, limit.s, limit.n_max
struct Scenario {
  std::string model;
  std::map<std::string, std::string> model_params;
  std::vector<std::string> suites;
  SampleConfig sampling;
  std::optional<std::string> expect;
  std::string isometry;
  std::vector<double> generator{1.0};
  long bound = 64;
  std::string family = "pullback_line";
  std::vector<int> family_indices;
  double limit_x = 0.0;
  double limit_y = 2.0;
  double limit_t = 1.0;
  double limit_s = 0.5;
  int limit_n_max = 64;
};

/// Throws ParseError on unknown keys, unknown suites, bad numbers and
/// non-positive tolerances.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
/// Effective settings as strings, for the report.
std::map<std::string, std::string> echo(const Scenario& s);

struct Witness {
  /// Coordinates with 6 significant digits.
  std::string description;
  std::map<std::string, double> values;
  std::map<std::string, std::string> exact;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SuiteResult {
  std::string suite;
  std::string model;
  std::string theorem;
  std::string verdict;
  /// Acceptable verdicts; empty when the ground truth is unknown.
  std::vector<std::string> expected;
  bool matches = true;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  std::map<std::string, std::string> details;
  std::vector<Witness> witnesses;
  std::optional<double> runtime_s;
  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct VerificationReport {
  int schema_version = kSchemaVersion;
  std::map<std::string, std::string> scenario;
  std::vector<SuiteResult> results;
  bool expectations_met = true;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs every selected suite. Library errors raised by bad parameters
/// propagate; the caller maps them to kMalformed.
VerificationReport run(const Scenario& scenario, bool timing = false);
int exit_code(const VerificationReport& report);

/// format: "json" or "text"; anything else throws ParseError.
std::string emit(const VerificationReport& report, const std::string& format);
VerificationReport parse_report(const std::string& json);

std::string emit_models(const std::string& format);

}  // namespace ballgeo::cli
