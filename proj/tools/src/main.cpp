#include <cstdio>
#include <exception>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nlqed/cli/config.hpp"
#include "nlqed/cli/run.hpp"

namespace {

std::set<nlqed::cli::Format> parse_formats(const std::string& csv_list) {
  std::set<nlqed::cli::Format> out;
  std::istringstream in(csv_list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "csv") {
      out.insert(nlqed::cli::Format::csv);
    } else if (item == "svg") {
      out.insert(nlqed::cli::Format::svg);
    } else {
      throw nlqed::cli::config_error("unknown format '" + item + "' (choose from csv,svg)");
    }
  }
  if (out.empty()) throw nlqed::cli::config_error("--format needs at least one of csv,svg");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlqed: correlated N-photon absorption toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string formats = "csv";

  const char* commands[] = {"fock", "field", "transition", "feasibility", "dynamics", "sweep"};
  const char* descriptions[] = {
      "ladder algebra of one correlated mode group",
      "quadratures, field energy and the oscillation check",
      "dipole transition matrix elements and selection rules",
      "photon-budget, cutoff-intensity and window checks",
      "driven few-level evolution, intensity scaling, spontaneous rates",
      "feasibility report over a parameter grid",
  };
  for (size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("--config", config_path, "run configuration file")->required();
    sub->add_option("--out", out_dir, "output directory (default .)");
    sub->add_option("--format", formats, "comma list of csv,svg (default csv)");
  }
  auto* validate_cmd =
      app.add_subcommand("validate", "report configuration diagnostics without running");
  validate_cmd->add_option("--config", config_path, "run configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const std::string invoked = app.get_subcommands().front()->get_name();
    if (invoked == "validate") {
      const auto rc = nlqed::cli::load_run_config(config_path, "", ".", {});
      const auto diagnostics = nlqed::cli::validate(rc);
      for (const auto& d : diagnostics) std::cout << d << "\n";
      std::cout << diagnostics.size() << " diagnostic(s)\n";
      return 0;
    }
    const auto rc =
        nlqed::cli::load_run_config(config_path, invoked, out_dir, parse_formats(formats));
    const auto result = nlqed::cli::run(rc);
    for (const auto& f : result.files) std::cout << f.string() << "\n";
    return 0;
  } catch (const nlqed::cli::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlqed::cli::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
