// lcho_cli: reproducible reports for the covariant oscillator library.
//
//   lcho_cli <command> [options]
//
// Commands: wavefunction, formfactor, algebra, contract, expansion, uncertainty.
// Defaults may come from a key=value file given with --config; flags on the
// command line override it.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "lcho/cli.hpp"

int main(int argc, char** argv) {
  using lcho::cli::Command;
  using lcho::cli::Format;
  lcho::cli::RunConfig config;

  CLI::App app{"Lorentz-covariant harmonic oscillator reports"};
  app.set_config("--config", "", "key=value file with default option values");

  std::string command;
  app.add_option("command", command, "wavefunction | formfactor | algebra | contract | expansion | uncertainty")
      ->required()
      ->check(CLI::IsMember({"wavefunction", "formfactor", "algebra", "contract", "expansion", "uncertainty"}));

  app.add_option("--eta", config.eta, "rapidity");
  app.add_option("--n", config.n, "longitudinal excitation");
  app.add_option("--q2-max", config.q2_max, "largest Q^2 sampled (units of M^2 when --mass 1)");
  app.add_option("--samples", config.samples, "number of Q^2 samples, including 0 and q2-max");
  app.add_option("--mass", config.mass, "proton mass M");
  app.add_option("--truncation", config.truncation, "photons per mode for the algebra check");
  app.add_option("--squeeze-truncation", config.squeeze_truncation, "photons per mode for the squeezed vacuum");
  app.add_option("--max-n", config.max_n, "last expansion coefficient");
  app.add_option("--epsilon", config.epsilons, "contraction parameters")->delimiter(',');
  app.add_option("--etas", config.etas, "rapidities for the uncertainty sweep")->delimiter(',');
  app.add_option("--grid", config.grid, "half-width of the square (z, t) grid");
  app.add_option("--step", config.step, "grid spacing");
  app.add_option("--nodes", config.nodes, "Gauss-Hermite nodes");
  double tolerance = -1.0;
  auto* tol_opt = app.add_option("--tolerance", tolerance, "override the command's main tolerance");
  const std::map<std::string, lcho::fock::SignConvention> conventions = {
      {"closed", lcho::fock::SignConvention::closed}, {"printed", lcho::fock::SignConvention::printed}};
  app.add_option("--convention", config.convention, "generator sign convention")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
  app.add_option("-o,--output", config.output, "report path (default: $LCHO_OUTPUT_DIR/<command>.<fmt> or stdout)");
  const std::map<std::string, Format> formats = {{"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", config.format, "csv | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcho::cli::kExitInvalidConfig;
  }
  config.command = *lcho::cli::parse_command(command);
  if (tol_opt->count() > 0) config.tolerance = tolerance;
  return lcho::cli::run(config);
}
