#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ballgeo/cli.hpp"
#include "ballgeo/errors.hpp"

namespace {

int write(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "ballgeo: cannot write " << path << "\n";
    return ballgeo::cli::kMalformed;
  }
  out << body;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = ballgeo::cli;
  CLI::App app{"Ball-space verification suites for length spaces"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string scenario_path;
  std::string report_path;
  std::uint64_t seed = 0;
  bool timing = false;

  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_flag("--timing", timing, "Record per-suite runtimes (reports stop being byte-stable)");

  auto* models = app.add_subcommand("list-models", "List catalogued models");
  models->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  models->add_option("--out", out_path, "Write the listing here instead of stdout");

  auto* emit = app.add_subcommand("emit", "Re-emit a saved json report");
  emit->add_option("report", report_path, "Report file")->required();
  emit->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  emit->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kMalformed;
  }

  try {
    if (*models) return write(cli::emit_models(format), out_path);
    if (*emit) {
      std::ifstream in(report_path);
      if (!in) throw ballgeo::ParseError("cannot read report '" + report_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return write(cli::emit(cli::parse_report(ss.str()), format), out_path);
    }
    cli::Scenario scenario = cli::load_scenario(scenario_path);
    if (*seed_opt) scenario.sampling.seed = seed;
    cli::VerificationReport report = cli::run(scenario, timing);
    if (int rc = write(cli::emit(report, format), out_path); rc != 0) return rc;
    return cli::exit_code(report);
  } catch (const ballgeo::Error& e) {
    std::cerr << "ballgeo: " << e.what() << "\n";
    return cli::kMalformed;
  }
}
