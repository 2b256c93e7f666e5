#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "nlqed/cli/config.hpp"
#include "nlqed/cli/report.hpp"
#include "nlqed/cli/run.hpp"
#include "nlqed/constants.hpp"

using namespace nlqed;
using namespace nlqed::cli;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("nlqed_cli_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunConfig make_rc(Command cmd, const std::string& text, const std::filesystem::path& out,
                  std::set<Format> formats = {Format::csv}) {
  RunConfig rc;
  rc.command = cmd;
  rc.params = ConfigFile::parse_string(text, "<test>");
  check_against_schema(rc.params, schema_for(cmd));
  rc.output_dir = out;
  rc.formats = std::move(formats);
  return rc;
}

const char* kClusterConfig = R"(
[run]
command = feasibility
[target]
radius_m = 1.0e-9
electron_count = 1000
[laser]
intensity_W_m2 = 1.0e20
wavelength_m = 8.0e-7
pulse_duration_s = 1.0e-17
[feasibility]
margin = 1.0
)";

}  // namespace

TEST_CASE("config parser names the line of every defect") {
  CHECK_THROWS_WITH_AS(ConfigFile::parse_string("[s]\nfoo\n", "<t>"),
                       doctest::Contains("<t>:2"), config_error);
  CHECK_THROWS_WITH_AS(ConfigFile::parse_string("key = 1\n", "<t>"),
                       doctest::Contains("before any [section]"), config_error);
  CHECK_THROWS_WITH_AS(ConfigFile::parse_string("[s]\na = 1\na = 2\n", "<t>"),
                       doctest::Contains("duplicate key 'a'"), config_error);
  CHECK_THROWS_WITH_AS(ConfigFile::parse_string("[s]\n[s]\n", "<t>"),
                       doctest::Contains("duplicate section"), config_error);
  const auto c = ConfigFile::parse_string("[s]\nx = nope\n", "<t>");
  CHECK_THROWS_WITH_AS(c.require_double("s", "x"), doctest::Contains("not a number"),
                       config_error);
  CHECK_THROWS_WITH_AS(c.require_string("s", "missing"), doctest::Contains("missing required"),
                       config_error);
}

TEST_CASE("unknown keys are rejected with the offending key named") {
  const auto c = ConfigFile::parse_string("[run]\ncommand = fock\n[fock]\nbogus = 1\n", "<t>");
  CHECK_THROWS_WITH_AS(check_against_schema(c, schema_for(Command::fock)),
                       doctest::Contains("unknown key 'bogus'"), config_error);
  const auto s = ConfigFile::parse_string("[run]\ncommand = fock\n[nope]\na = 1\n", "<t>");
  CHECK_THROWS_WITH_AS(check_against_schema(s, schema_for(Command::fock)),
                       doctest::Contains("unknown section [nope]"), config_error);
}

TEST_CASE("doubles round-trip through CSV formatting") {
  for (double v : {1.0 / 3.0, 2.3898496360485611e-12, 1e-301, 5627.0550157192056, -0.0}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("feasibility run emits the documented row, matching the hand formula") {
  const auto dir = fresh_dir("feas");
  const auto rc = make_rc(Command::feasibility, kClusterConfig, dir);
  const auto result = run(rc);
  REQUIRE(result.files.size() == 1);
  const std::string text = slurp(result.files[0]);
  CHECK(text.find("# nlqed") != std::string::npos);
  CHECK(text.find("# constants CODATA-2018") != std::string::npos);
  CHECK(text.find("r,V,n_e,I,omega,photon_count,eq1_literal,verdict,I_cut,n_max") !=
        std::string::npos);
  CHECK(text.find("pass") != std::string::npos);

  // last data line, photon_count column (index 5)
  std::istringstream lines(text);
  std::string line, data;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line.find("r,V") != 0) data = line;
  }
  std::istringstream cells(data);
  std::string cell;
  std::vector<std::string> row;
  while (std::getline(cells, cell, ',')) row.push_back(cell);
  REQUIRE(row.size() == 10);
  const double count = std::strtod(row[5].c_str(), nullptr);
  const double omega = wavelength_to_omega(8.0e-7);
  const double volume = 4.0 / 3.0 * 3.14159265358979324 * 1e-27;
  const double expect = volume * 1e20 / (PhysicalConstants::c * PhysicalConstants::hbar * omega);
  CHECK(count == doctest::Approx(expect).epsilon(1e-12));
  CHECK(row[7] == "pass");
}

TEST_CASE("empty sweep grid yields a header-only report") {
  const auto dir = fresh_dir("sweep0");
  const std::string cfg = R"(
[run]
command = sweep
[sweep]
parameter = target.radius_m
from = 1e-10
to = 1e-8
points = 0
scale = log
[target]
radius_m = 1e-9
electron_count = 1000
[laser]
intensity_W_m2 = 1e20
wavelength_m = 8e-7
pulse_duration_s = 1e-17
)";
  const auto result = run(make_rc(Command::sweep, cfg, dir));
  const std::string text = slurp(result.files[0]);
  CHECK(text.find("r,V,n_e,I") != std::string::npos);
  int data_lines = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line.find("r,V") != 0) ++data_lines;
  }
  CHECK(data_lines == 0);
}

TEST_CASE("identical configs produce byte-identical reports") {
  const auto a = fresh_dir("det_a");
  const auto b = fresh_dir("det_b");
  const auto ra = run(make_rc(Command::feasibility, kClusterConfig, a));
  const auto rb = run(make_rc(Command::feasibility, kClusterConfig, b));
  CHECK(slurp(ra.files[0]) == slurp(rb.files[0]));
}

TEST_CASE("run command declaration must match the invoked command") {
  const auto dir = fresh_dir("mismatch");
  const auto cfg_path = dir / "c.cfg";
  write_text_file(cfg_path, "[run]\ncommand = fock\n[fock]\ncorrelation_order = 2\n"
                            "truncation = 8\nphoton_energy_ev = 1.55\n");
  CHECK_THROWS_WITH_AS(load_run_config(cfg_path, "field", dir, {Format::csv}),
                       doctest::Contains("invoked as 'field'"), config_error);
  CHECK_NOTHROW(load_run_config(cfg_path, "fock", dir, {Format::csv}));
  CHECK_NOTHROW(load_run_config(cfg_path, "", dir, {Format::csv}));
}

TEST_CASE("validate reports the documented diagnostics") {
  SUBCASE("order beyond the harmonic cap") {
    const std::string cfg = R"(
[run]
command = dynamics
[dynamics]
mode = scaling
order_n = 1000000
photon_energy_ev = 1.55
[system]
level_energies_ev = 0, 3.1
dipole_0_1 = 1.0
[scaling]
mode = nonlocal
intensity_min_W_m2 = 1e16
intensity_max_W_m2 = 1e19
points = 8
)";
    const auto diags = validate(make_rc(Command::dynamics, cfg, "."));
    REQUIRE(diags.size() >= 1);
    bool found = false;
    for (const auto& d : diags) found = found || d.find("exceeds n_max") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("absorption window violation") {
    std::string cfg = kClusterConfig;
    const auto pos = cfg.find("pulse_duration_s = 1.0e-17");
    cfg.replace(pos, std::string("pulse_duration_s = 1.0e-17").size(),
                "pulse_duration_s = 8.5e-16");
    const auto diags = validate(make_rc(Command::feasibility, cfg, "."));
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("absorption window violated") != std::string::npos);
  }
  SUBCASE("valid sample config gives an empty list") {
    CHECK(validate(make_rc(Command::feasibility, kClusterConfig, ".")).empty());
  }
  SUBCASE("inconsistent wavelength and omega pair") {
    std::string cfg = kClusterConfig;
    const auto pos = cfg.find("[feasibility]");
    cfg.insert(pos, "omega_rad_s = 2.4e15\n");
    const auto diags = validate(make_rc(Command::feasibility, cfg, "."));
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("disagree") != std::string::npos);
  }
}

TEST_CASE("scaling run writes the fitted slope into the metadata footer") {
  const auto dir = fresh_dir("scaling");
  const std::string cfg = R"(
[run]
command = dynamics
[dynamics]
mode = scaling
order_n = 2
photon_energy_ev = 1.55
[system]
level_energies_ev = 0, 3.10
dipole_0_1 = 1.0
[scaling]
mode = nonlocal
intensity_min_W_m2 = 1.0e16
intensity_max_W_m2 = 1.0e19
points = 8
probe_rabi_fraction = 0.02
)";
  const auto result = run(make_rc(Command::dynamics, cfg, dir));
  const std::string text = slurp(result.files[0]);
  const auto pos = text.find("# fit_slope ");
  REQUIRE(pos != std::string::npos);
  const double slope = std::strtod(text.c_str() + pos + 12, nullptr);
  CHECK(slope == doctest::Approx(1.0).epsilon(0.01));
}
