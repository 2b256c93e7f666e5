#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "nlqed/cli/config.hpp"

namespace nlqed::cli {

enum class Command { fock, field, transition, feasibility, dynamics, sweep };

Command command_from_name(const std::string& name);
std::string command_name(Command command);
const Schema& schema_for(Command command);

enum class Format { csv, svg };

struct RunConfig {
  Command command;
  ConfigFile params;
  std::filesystem::path output_dir = ".";
  std::set<Format> formats = {Format::csv};
};

// Parses the file, checks it against the command schema, and cross-checks
// the [run] command declaration. `expected_command` empty means "take the
// command from the file" (validate mode).
RunConfig load_run_config(const std::filesystem::path& config_path,
                          const std::string& expected_command,
                          const std::filesystem::path& out_dir, const std::set<Format>& formats);

struct RunResult {
  std::vector<std::filesystem::path> files;
};

// Executes the command and writes its reports. Throws config_error for bad
// inputs detected here, io_error for filesystem failures; computation errors
// from the core propagate as their own exception types.
RunResult run(const RunConfig& config);

// Every constraint violation found without executing anything: unit
// consistency, ranges, harmonic-order cap, absorption window, fit-grid rules.
std::vector<std::string> validate(const RunConfig& config);

}  // namespace nlqed::cli
