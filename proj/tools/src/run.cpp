#include "nlqed/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "nlqed/cli/report.hpp"
#include "nlqed/constants.hpp"
#include "nlqed/dynamics.hpp"
#include "nlqed/feasibility.hpp"
#include "nlqed/field.hpp"
#include "nlqed/fock.hpp"
#include "nlqed/transition.hpp"

namespace nlqed::cli {

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kWindowStrictness = 0.1;

const char* const kCommandNames[] = {"fock", "field", "transition", "feasibility", "dynamics",
                                     "sweep"};

void stamp(Csv& csv, Command command) {
  csv.add_metadata("nlqed", kToolVersion);
  csv.add_metadata("constants", PhysicalConstants::version);
  csv.add_metadata("command", command_name(command));
}

std::string fmt(double v) { return format_double(v); }

// ---- builders from config sections -------------------------------------

LaserSpec laser_from(const ConfigFile& c, const std::string& override_key = {},
                     double override_value = 0.0) {
  const auto pick = [&](const char* key, double fallback_missing) {
    if (override_key == std::string("laser.") + key) return override_value;
    return c.get_double("laser", key, fallback_missing);
  };
  const double intensity = pick("intensity_W_m2", -1.0);
  if (intensity < 0.0) {
    throw config_error("[laser] intensity_W_m2 is required and must be >= 0");
  }
  const double pulse = c.get_double("laser", "pulse_duration_s", 0.0);
  const bool has_wl = c.has("laser", "wavelength_m");
  const bool has_ev = c.has("laser", "photon_energy_ev") || override_key == "laser.photon_energy_ev";
  const bool has_omega = c.has("laser", "omega_rad_s");
  if (has_ev && !has_wl && !has_omega) {
    return LaserSpec::from_omega(intensity, ev_to_omega(pick("photon_energy_ev", 0.0)), pulse);
  }
  if (has_wl && !has_ev && !has_omega) {
    return LaserSpec::from_wavelength(intensity, c.require_double("laser", "wavelength_m"), pulse);
  }
  if (has_omega && !has_ev && !has_wl) {
    return LaserSpec::from_omega(intensity, c.require_double("laser", "omega_rad_s"), pulse);
  }
  if (has_wl && has_omega && !has_ev) {
    return LaserSpec::checked(intensity, c.require_double("laser", "omega_rad_s"),
                              c.require_double("laser", "wavelength_m"), pulse);
  }
  throw config_error("[laser] needs exactly one of photon_energy_ev, omega_rad_s, wavelength_m "
                     "(or omega_rad_s plus wavelength_m for a consistency check)");
}

TargetSpec target_from(const ConfigFile& c, const std::string& override_key = {},
                       double override_value = 0.0) {
  const auto pick = [&](const char* key) -> std::optional<double> {
    if (override_key == std::string("target.") + key) return override_value;
    if (c.has("target", key)) return c.require_double("target", key);
    return std::nullopt;
  };
  const double n_e = pick("electron_count").value_or(-1.0);
  if (n_e < 0.0) throw config_error("[target] electron_count is required");
  const std::string label = c.get_string("target", "label", "");
  const auto radius = pick("radius_m");
  const auto volume = pick("volume_m3");
  if (radius.has_value() == volume.has_value()) {
    throw config_error("[target] needs exactly one of radius_m or volume_m3");
  }
  return radius ? TargetSpec::sphere(*radius, n_e, label)
                : TargetSpec::with_volume(*volume, n_e, label);
}

OrbitalState orbital_from(const ConfigFile& c, const std::string& section,
                          const std::string& key) {
  const std::string& raw = c.require_string(section, key);
  std::istringstream in(raw);
  int n = 0, l = 0, m = 0;
  double z = 1.0;
  if (!(in >> n >> l >> m)) {
    throw config_error(c.origin() + ":" + std::to_string(c.line_of(section, key)) + ": key '" +
                       key + "' in [" + section + "] must be 'n l m [z_eff]', got '" + raw + "'");
  }
  in >> z;
  return OrbitalState::hydrogenic(n, l, m, z);
}

PolarizationExpansion expansion_from(const ConfigFile& c) {
  if (c.has("transition", "expansion_coeffs")) {
    return PolarizationExpansion(c.require_double_list("transition", "expansion_coeffs"));
  }
  return PolarizationExpansion();
}

FewLevelSystem system_from(const ConfigFile& c, double intensity) {
  const auto order = static_cast<int>(c.require_int("dynamics", "order_n"));
  const double photon_ev = c.require_double("dynamics", "photon_energy_ev");
  const auto energies = c.require_double_list("system", "level_energies_ev");
  const auto n = static_cast<Eigen::Index>(energies.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (const auto& key : c.keys("system")) {
    if (key.rfind("dipole_", 0) != 0) continue;
    int k = -1, j = -1;
    if (std::sscanf(key.c_str(), "dipole_%d_%d", &k, &j) != 2 || k < 0 || j < 0 || k >= n ||
        j >= n || k == j) {
      throw config_error(c.origin() + ":" + std::to_string(c.line_of("system", key)) +
                         ": dipole key '" + key + "' must be dipole_<k>_<j> with distinct "
                         "level indices below " + std::to_string(n));
    }
    const double v = c.require_double("system", key);
    d(k, j) = v;
    d(j, k) = v;
  }
  return FewLevelSystem(energies, d, order, ModeGroup("drive", order, ev_to_omega(photon_ev)),
                        intensity);
}

std::vector<double> scaling_grid(const ConfigFile& c) {
  const double lo = c.require_double("scaling", "intensity_min_W_m2");
  const double hi = c.require_double("scaling", "intensity_max_W_m2");
  const auto points = c.require_int("scaling", "points");
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw config_error("[scaling] needs points >= 2 and 0 < intensity_min < intensity_max");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(points));
  const double step = (std::log10(hi) - std::log10(lo)) / static_cast<double>(points - 1);
  for (long long i = 0; i < points; ++i) {
    grid.push_back(std::pow(10.0, std::log10(lo) + static_cast<double>(i) * step));
  }
  return grid;
}

// ---- per-command runners -------------------------------------------------

RunResult run_fock(const RunConfig& rc) {
  const auto& c = rc.params;
  const auto order = static_cast<int>(c.require_int("fock", "correlation_order"));
  const auto trunc = static_cast<int>(c.require_int("fock", "truncation"));
  const double photon_ev = c.require_double("fock", "photon_energy_ev");
  const ModeGroup group("group", order, ev_to_omega(photon_ev));

  Csv csv({"occupation", "annihilate_norm2", "create_norm2", "energy_ev"});
  stamp(csv, rc.command);
  for (int occ = 0; occ <= trunc; occ += order) {
    const auto state = FockVector::basis(group, trunc, occ);
    const double ann = apply_annihilate_n(state).norm_squared();
    const double cre = (occ + order <= trunc)
                           ? apply_create_n(state).norm_squared()
                           : std::numeric_limits<double>::quiet_NaN();
    const auto ne = number_and_energy(state);
    csv.add_row({std::to_string(occ), fmt(ann), fmt(cre), fmt(joule_to_ev(ne.energy_j))});
  }
  if (trunc >= 2 * order) {
    const auto defect = commutator_defect(order, trunc);
    const auto interior = defect.rows() - 1;
    csv.add_footer("commutator_interior_max",
                   fmt(defect.topLeftCorner(interior, interior).cwiseAbs().maxCoeff()));
  }

  const auto path = rc.output_dir / "fock.csv";
  write_text_file(path, csv.serialize());
  return {{path}};
}

RunResult run_field(const RunConfig& rc) {
  const auto& c = rc.params;
  const auto order = static_cast<int>(c.require_int("field", "correlation_order"));
  const bool has_ev = c.has("field", "photon_energy_ev");
  const bool has_omega = c.has("field", "omega_rad_s");
  if (has_ev == has_omega) {
    throw config_error("[field] needs exactly one of photon_energy_ev or omega_rad_s");
  }
  const double omega = has_ev ? ev_to_omega(c.require_double("field", "photon_energy_ev"))
                              : c.require_double("field", "omega_rad_s");
  const std::complex<double> amp_c(c.require_double("field", "c_real"),
                                   c.require_double("field", "c_imag"));
  const double volume = c.require_double("field", "quantization_volume_m3");
  const auto periods = c.get_int("field", "periods", 10);
  const auto steps_per_period = c.get_int("field", "steps_per_period", 1000);

  const ModeAmplitude amplitude(ModeGroup("group", order, omega), amp_c, volume);
  const auto quads = quadratures_from_amplitude(amplitude, order);
  const double group_freq = quads.group_frequency;
  const double period = 2.0 * kPi / group_freq;
  const double dt = period / static_cast<double>(steps_per_period);
  const double t_final = static_cast<double>(periods) * period;

  const auto trajectory = integrate_quadratures(quads, order, omega, t_final, dt);
  const double fitted = verify_hamilton_oscillation(quads, order, omega, t_final, dt);

  Csv summary({"omega_rad_s", "correlation_order", "group_frequency_rad_s", "y", "z",
               "energy_quadratures_j", "energy_amplitude_j", "fitted_frequency_rad_s",
               "harmonic_order_cap"});
  stamp(summary, rc.command);
  summary.add_row({fmt(omega), std::to_string(order), fmt(group_freq), fmt(quads.y), fmt(quads.z),
                   fmt(field_energy_classical(quads)), fmt(field_energy_from_amplitude(amplitude, order)),
                   fmt(fitted), std::to_string(harmonic_order_cap(omega))});

  Csv traj({"t_s", "y", "z", "energy_j"});
  stamp(traj, rc.command);
  for (const auto& s : trajectory) {
    traj.add_row({fmt(s.t), fmt(s.y), fmt(s.z),
                  fmt(field_energy_classical({s.y, s.z, group_freq}))});
  }

  RunResult result;
  const auto sum_path = rc.output_dir / "field_summary.csv";
  write_text_file(sum_path, summary.serialize());
  result.files.push_back(sum_path);
  const auto traj_path = rc.output_dir / "field_trajectory.csv";
  write_text_file(traj_path, traj.serialize());
  result.files.push_back(traj_path);

  if (rc.formats.count(Format::svg)) {
    PlotSeries series;
    for (const auto& s : trajectory) {
      series.x.push_back(s.t);
      series.y.push_back(s.z);
    }
    const auto svg_path = rc.output_dir / "field_trajectory.svg";
    write_text_file(svg_path, svg_line_plot("quadrature oscillation", "t_s", "z", series,
                                            false, false));
    result.files.push_back(svg_path);
  }
  return result;
}

RunResult run_transition(const RunConfig& rc) {
  const auto& c = rc.params;
  const auto order = static_cast<int>(c.require_int("transition", "order_n"));
  const double intensity = c.require_double("transition", "intensity_W_m2");
  const auto expansion = expansion_from(c);

  std::vector<OrbitalState> initial{orbital_from(c, "initial", "electron1")};
  std::vector<OrbitalState> final_{orbital_from(c, "final", "electron1")};
  if (c.has("initial", "electron2") != c.has("final", "electron2")) {
    throw config_error("electron2 must be present in both [initial] and [final] or neither");
  }
  if (c.has("initial", "electron2")) {
    initial.push_back(orbital_from(c, "initial", "electron2"));
    final_.push_back(orbital_from(c, "final", "electron2"));
  }

  const auto amp = matrix_element(initial, final_, expansion, intensity, order);

  Csv csv({"order_n", "intensity_W_m2", "value_re", "value_im", "probability", "radial_1",
           "angular_1", "radial_2", "angular_2"});
  stamp(csv, rc.command);
  const auto nan = std::numeric_limits<double>::quiet_NaN();
  const auto radial = [&](size_t e) {
    return e < initial.size() ? radial_dipole_integral(final_[e], initial[e]) : nan;
  };
  const auto angular = [&](size_t e) {
    return e < initial.size()
               ? angular_integral(initial[e].l(), initial[e].m(), final_[e].l(), final_[e].m(),
                                  order, expansion)
               : nan;
  };
  csv.add_row({std::to_string(order), fmt(intensity), fmt(amp.value.real()), fmt(amp.value.imag()),
               fmt(absorption_probability(amp)), fmt(radial(0)), fmt(angular(0)), fmt(radial(1)),
               fmt(angular(1))});

  const auto path = rc.output_dir / "transition.csv";
  write_text_file(path, csv.serialize());
  return {{path}};
}

std::vector<std::string> feasibility_row(const TargetSpec& target, const LaserSpec& laser,
                                         double margin) {
  const auto budget = budget_condition(target, laser, margin);
  const double cut = cutoff_intensity(target, laser.omega, margin);
  const auto cap = harmonic_order_cap(laser.omega);
  return {fmt(target.radius), fmt(target.volume), fmt(target.electron_count),
          fmt(laser.intensity), fmt(laser.omega), fmt(budget.photon_count),
          fmt(budget.literal_quantity), budget.pass ? "pass" : "fail", fmt(cut),
          std::to_string(cap)};
}

const std::vector<std::string> kFeasibilityHeader = {
    "r", "V", "n_e", "I", "omega", "photon_count", "eq1_literal", "verdict", "I_cut", "n_max"};

RunResult run_feasibility(const RunConfig& rc) {
  const auto& c = rc.params;
  const double margin = c.get_double("feasibility", "margin", 10.0);
  const auto target = target_from(c);
  const auto laser = laser_from(c);

  Csv csv(kFeasibilityHeader);
  stamp(csv, rc.command);
  csv.add_metadata("margin", fmt(margin));
  csv.add_row(feasibility_row(target, laser, margin));

  const auto path = rc.output_dir / "feasibility.csv";
  write_text_file(path, csv.serialize());
  return {{path}};
}

RunResult run_dynamics(const RunConfig& rc) {
  const auto& c = rc.params;
  const std::string mode = c.require_string("dynamics", "mode");
  RunResult result;

  if (mode == "spontaneous") {
    const double energy = c.require_double("spontaneous", "photon_energy_ev");
    const double dipole = c.require_double("spontaneous", "dipole_au");
    Csv csv({"photon_energy_ev", "dipole_au", "rate_per_s", "lifetime_s"});
    stamp(csv, rc.command);
    csv.add_metadata("rate_calibration_per_s", fmt(spontaneous_rate_calibration()));
    csv.add_row({fmt(energy), fmt(dipole), fmt(spontaneous_rate(energy, dipole)),
                 fmt(spontaneous_lifetime(energy, dipole))});
    const auto path = rc.output_dir / "dynamics_spontaneous.csv";
    write_text_file(path, csv.serialize());
    result.files.push_back(path);
    return result;
  }

  if (mode == "evolve") {
    const double intensity = c.require_double("evolve", "intensity_W_m2");
    const auto sys = system_from(c, intensity);
    double t_final = c.get_double("evolve", "t_final_s", 0.0);
    double dt = c.get_double("evolve", "dt_s", 0.0);
    if (t_final <= 0.0 || dt <= 0.0) {
      const double g = sys.coupling_rate(0, 1);
      if (g <= 0.0) {
        throw config_error("[evolve] needs explicit t_final_s and dt_s when the ground-state "
                           "coupling is zero");
      }
      const double period = kPi / g;
      t_final = static_cast<double>(c.get_int("evolve", "periods", 2)) * period;
      dt = period / static_cast<double>(c.get_int("evolve", "steps_per_period", 200));
    }
    const auto traj = evolve(sys, t_final, dt);

    std::vector<std::string> header{"t_s"};
    for (int k = 0; k < sys.levels(); ++k) header.push_back("pop_" + std::to_string(k));
    Csv csv(header);
    stamp(csv, rc.command);
    csv.add_metadata("order_n", std::to_string(sys.coupling_order));
    csv.add_metadata("intensity_W_m2", fmt(intensity));
    for (size_t i = 0; i < traj.times.size(); ++i) {
      std::vector<std::string> row{fmt(traj.times[i])};
      for (int k = 0; k < sys.levels(); ++k) {
        row.push_back(fmt(traj.populations(static_cast<Eigen::Index>(i), k)));
      }
      csv.add_row(std::move(row));
    }
    const auto path = rc.output_dir / "dynamics_trajectory.csv";
    write_text_file(path, csv.serialize());
    result.files.push_back(path);

    if (rc.formats.count(Format::svg)) {
      PlotSeries series;
      for (size_t i = 0; i < traj.times.size(); ++i) {
        series.x.push_back(traj.times[i]);
        series.y.push_back(1.0 - traj.populations(static_cast<Eigen::Index>(i), 0));
      }
      const auto svg_path = rc.output_dir / "dynamics_trajectory.svg";
      write_text_file(svg_path, svg_line_plot("excited population", "t_s", "1 - pop_0", series,
                                              false, false));
      result.files.push_back(svg_path);
    }
    return result;
  }

  if (mode == "scaling") {
    const std::string fit_mode = c.get_string("scaling", "mode", "nonlocal");
    if (fit_mode != "nonlocal" && fit_mode != "conventional") {
      throw config_error("[scaling] mode must be nonlocal or conventional");
    }
    const auto grid = scaling_grid(c);
    const auto sys = system_from(c, 0.0);
    double t_probe = c.get_double("scaling", "t_probe_s", 0.0);
    if (t_probe <= 0.0) {
      const double fraction = c.get_double("scaling", "probe_rabi_fraction", 0.02);
      const double g_top = sys.with_intensity(grid.back()).coupling_rate(0, 1);
      if (g_top <= 0.0) {
        throw config_error("[scaling] needs t_probe_s when the ground-state coupling is zero");
      }
      t_probe = fraction * kPi / g_top;
    }
    const auto fit = scaling_experiment(
        sys, grid, t_probe,
        fit_mode == "nonlocal" ? ScalingMode::nonlocal : ScalingMode::conventional);

    Csv csv({"intensity_W_m2", "probability"});
    stamp(csv, rc.command);
    csv.add_metadata("mode", fit_mode);
    csv.add_metadata("order_n", std::to_string(fit.order));
    for (const auto& p : fit.points) csv.add_row({fmt(p.intensity), fmt(p.probability)});
    csv.add_footer("fit_slope", fmt(fit.slope));
    csv.add_footer("fit_intercept", fmt(fit.intercept));
    csv.add_footer("probe_time_s", fmt(fit.probe_time));
    csv.add_footer("points", std::to_string(fit.points.size()));
    const auto path = rc.output_dir / "dynamics_scaling.csv";
    write_text_file(path, csv.serialize());
    result.files.push_back(path);

    if (rc.formats.count(Format::svg)) {
      PlotSeries series;
      for (const auto& p : fit.points) {
        series.x.push_back(p.intensity);
        series.y.push_back(p.probability);
      }
      const auto svg_path = rc.output_dir / "dynamics_scaling.svg";
      write_text_file(svg_path, svg_line_plot("absorption probability vs intensity",
                                              "intensity_W_m2", "probability", series, true,
                                              true));
      result.files.push_back(svg_path);
    }
    return result;
  }

  throw config_error("[dynamics] mode must be one of evolve, scaling, spontaneous");
}

RunResult run_sweep(const RunConfig& rc) {
  const auto& c = rc.params;
  const std::string parameter = c.require_string("sweep", "parameter");
  static const char* kAllowed[] = {"target.radius_m", "target.volume_m3",
                                   "target.electron_count", "laser.intensity_W_m2",
                                   "laser.photon_energy_ev"};
  bool known = false;
  for (const char* a : kAllowed) known = known || parameter == a;
  if (!known) {
    throw config_error("[sweep] parameter '" + parameter +
                       "' is not sweepable; pick one of target.radius_m, target.volume_m3, "
                       "target.electron_count, laser.intensity_W_m2, laser.photon_energy_ev");
  }
  const auto points = c.require_int("sweep", "points");
  if (points < 0) throw config_error("[sweep] points must be >= 0");
  const double from = c.require_double("sweep", "from");
  const double to = c.require_double("sweep", "to");
  const std::string scale = c.get_string("sweep", "scale", "linear");
  if (scale != "linear" && scale != "log") {
    throw config_error("[sweep] scale must be linear or log");
  }
  if (scale == "log" && (!(from > 0.0) || !(to > 0.0))) {
    throw config_error("[sweep] log scale needs positive endpoints");
  }
  const double margin = c.get_double("feasibility", "margin", 10.0);

  Csv csv(kFeasibilityHeader);
  stamp(csv, rc.command);
  csv.add_metadata("margin", fmt(margin));
  csv.add_metadata("parameter", parameter);

  PlotSeries series;
  for (long long i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const double value = scale == "log"
                             ? std::pow(10.0, std::log10(from) + f * (std::log10(to) - std::log10(from)))
                             : from + f * (to - from);
    const auto target = target_from(c, parameter, value);
    const auto laser = laser_from(c, parameter, value);
    csv.add_row(feasibility_row(target, laser, margin));
    series.x.push_back(value);
    series.y.push_back(budget_condition(target, laser, margin).photon_count);
  }

  RunResult result;
  const auto path = rc.output_dir / "sweep.csv";
  write_text_file(path, csv.serialize());
  result.files.push_back(path);
  if (rc.formats.count(Format::svg) && !series.x.empty()) {
    const auto svg_path = rc.output_dir / "sweep.svg";
    write_text_file(svg_path, svg_line_plot("photon count vs " + parameter, parameter,
                                            "photon_count", series, scale == "log", true));
    result.files.push_back(svg_path);
  }
  return result;
}

}  // namespace

Command command_from_name(const std::string& name) {
  for (size_t i = 0; i < std::size(kCommandNames); ++i) {
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  }
  throw config_error("unknown command '" + name + "'");
}

std::string command_name(Command command) {
  return kCommandNames[static_cast<size_t>(command)];
}

const Schema& schema_for(Command command) {
  static const Schema fock{{
      {"run", {"command"}},
      {"fock", {"correlation_order", "truncation", "photon_energy_ev"}},
  }};
  static const Schema field{{
      {"run", {"command"}},
      {"field", {"correlation_order", "photon_energy_ev", "omega_rad_s", "c_real", "c_imag",
                 "quantization_volume_m3", "periods", "steps_per_period"}},
  }};
  static const Schema transition{{
      {"run", {"command"}},
      {"transition", {"order_n", "intensity_W_m2", "expansion_coeffs"}},
      {"initial", {"electron1", "electron2"}},
      {"final", {"electron1", "electron2"}},
  }};
  static const Schema feasibility{{
      {"run", {"command"}},
      {"target", {"radius_m", "volume_m3", "electron_count", "label"}},
      {"laser", {"intensity_W_m2", "photon_energy_ev", "omega_rad_s", "wavelength_m",
                 "pulse_duration_s"}},
      {"feasibility", {"margin", "order_n"}},
  }};
  static const Schema dynamics{{
      {"run", {"command"}},
      {"dynamics", {"mode", "order_n", "photon_energy_ev"}},
      {"system", {"level_energies_ev", "dipole_*"}},
      {"evolve", {"intensity_W_m2", "periods", "steps_per_period", "t_final_s", "dt_s"}},
      {"scaling", {"mode", "intensity_min_W_m2", "intensity_max_W_m2", "points",
                   "probe_rabi_fraction", "t_probe_s"}},
      {"spontaneous", {"photon_energy_ev", "dipole_au"}},
  }};
  static const Schema sweep{{
      {"run", {"command"}},
      {"sweep", {"parameter", "from", "to", "points", "scale"}},
      {"target", {"radius_m", "volume_m3", "electron_count", "label"}},
      {"laser", {"intensity_W_m2", "photon_energy_ev", "omega_rad_s", "wavelength_m",
                 "pulse_duration_s"}},
      {"feasibility", {"margin", "order_n"}},
  }};
  switch (command) {
    case Command::fock: return fock;
    case Command::field: return field;
    case Command::transition: return transition;
    case Command::feasibility: return feasibility;
    case Command::dynamics: return dynamics;
    case Command::sweep: return sweep;
  }
  throw std::logic_error("unreachable");
}

RunConfig load_run_config(const std::filesystem::path& config_path,
                          const std::string& expected_command,
                          const std::filesystem::path& out_dir, const std::set<Format>& formats) {
  RunConfig rc;
  rc.params = ConfigFile::parse_file(config_path);
  const std::string declared = rc.params.require_string("run", "command");
  rc.command = command_from_name(declared);
  if (!expected_command.empty() && declared != expected_command) {
    throw config_error(config_path.string() + ": [run] command is '" + declared +
                       "' but the tool was invoked as '" + expected_command + "'");
  }
  check_against_schema(rc.params, schema_for(rc.command));
  rc.output_dir = out_dir;
  rc.formats = formats;
  return rc;
}

RunResult run(const RunConfig& config) {
  switch (config.command) {
    case Command::fock: return run_fock(config);
    case Command::field: return run_field(config);
    case Command::transition: return run_transition(config);
    case Command::feasibility: return run_feasibility(config);
    case Command::dynamics: return run_dynamics(config);
    case Command::sweep: return run_sweep(config);
  }
  throw std::logic_error("unreachable");
}

namespace {

void validate_laser_block(const ConfigFile& c, std::vector<std::string>& out) {
  try {
    const auto laser = laser_from(c);
    const auto window = window_check(laser, kWindowStrictness);
    if (!window.pass) {
      out.push_back("absorption window violated: pulse_duration*omega = " + fmt(window.ratio) +
                    " exceeds " + fmt(kWindowStrictness));
    }
    if (c.has("feasibility", "order_n")) {
      const auto order = c.require_int("feasibility", "order_n");
      const auto cap = harmonic_order_cap(laser.omega);
      if (order > cap) {
        out.push_back("order " + std::to_string(order) + " exceeds n_max = " +
                      std::to_string(cap));
      } else if (order < 1) {
        out.push_back("order_n must be >= 1");
      }
    }
  } catch (const std::exception& e) {
    out.push_back(e.what());
  }
}

}  // namespace

std::vector<std::string> validate(const RunConfig& config) {
  const auto& c = config.params;
  std::vector<std::string> out;
  const auto guard = [&out](const auto& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.push_back(e.what());
    }
  };

  switch (config.command) {
    case Command::fock:
      guard([&] {
        const auto order = c.require_int("fock", "correlation_order");
        const auto trunc = c.require_int("fock", "truncation");
        const double ev = c.require_double("fock", "photon_energy_ev");
        if (order < 1) out.push_back("correlation_order must be >= 1");
        if (!(ev > 0.0)) out.push_back("photon_energy_ev must be > 0");
        if (trunc < order) out.push_back("truncation must be >= correlation_order");
        if (order >= 1 && ev > 0.0 && order > harmonic_order_cap(ev_to_omega(ev))) {
          out.push_back("order " + std::to_string(order) + " exceeds n_max = " +
                        std::to_string(harmonic_order_cap(ev_to_omega(ev))));
        }
      });
      break;
    case Command::field:
      guard([&] {
        const auto order = c.require_int("field", "correlation_order");
        if (order < 1) out.push_back("correlation_order must be >= 1");
        const bool has_ev = c.has("field", "photon_energy_ev");
        if (has_ev == c.has("field", "omega_rad_s")) {
          out.push_back("[field] needs exactly one of photon_energy_ev or omega_rad_s");
          return;
        }
        const double omega = has_ev ? ev_to_omega(c.require_double("field", "photon_energy_ev"))
                                    : c.require_double("field", "omega_rad_s");
        if (!(omega > 0.0)) out.push_back("field frequency must be > 0");
        if (!(c.require_double("field", "quantization_volume_m3") > 0.0)) {
          out.push_back("quantization_volume_m3 must be > 0");
        }
        const auto steps = c.get_int("field", "steps_per_period", 1000);
        if (steps < 63) {
          out.push_back("steps_per_period = " + std::to_string(steps) +
                        " makes dt*N*omega exceed 0.1 (needs >= 63)");
        }
        const auto periods = c.get_int("field", "periods", 10);
        if (periods * steps < 1000) {
          out.push_back("periods*steps_per_period must be >= 1000 integration steps");
        }
        if (order >= 1 && omega > 0.0 && order > harmonic_order_cap(omega)) {
          out.push_back("order " + std::to_string(order) + " exceeds n_max = " +
                        std::to_string(harmonic_order_cap(omega)));
        }
      });
      break;
    case Command::transition:
      guard([&] {
        if (c.require_int("transition", "order_n") < 1) out.push_back("order_n must be >= 1");
        if (c.require_double("transition", "intensity_W_m2") < 0.0) {
          out.push_back("intensity_W_m2 must be >= 0");
        }
        if (c.has("transition", "expansion_coeffs")) {
          c.require_double_list("transition", "expansion_coeffs");
        }
        guard([&] { orbital_from(c, "initial", "electron1"); });
        guard([&] { orbital_from(c, "final", "electron1"); });
        if (c.has("initial", "electron2") != c.has("final", "electron2")) {
          out.push_back("electron2 must be present in both [initial] and [final] or neither");
        }
        if (c.has("initial", "electron2")) {
          guard([&] { orbital_from(c, "initial", "electron2"); });
          guard([&] { orbital_from(c, "final", "electron2"); });
        }
      });
      break;
    case Command::feasibility:
      guard([&] { target_from(c); });
      validate_laser_block(c, out);
      guard([&] {
        if (c.get_double("feasibility", "margin", 10.0) < 1.0) {
          out.push_back("margin must be >= 1");
        }
      });
      break;
    case Command::dynamics:
      guard([&] {
        const std::string mode = c.require_string("dynamics", "mode");
        if (mode == "spontaneous") {
          if (!(c.require_double("spontaneous", "photon_energy_ev") > 0.0)) {
            out.push_back("spontaneous photon_energy_ev must be > 0");
          }
          if (!(c.require_double("spontaneous", "dipole_au") > 0.0)) {
            out.push_back("spontaneous dipole_au must be > 0");
          }
          return;
        }
        if (mode != "evolve" && mode != "scaling") {
          out.push_back("[dynamics] mode must be one of evolve, scaling, spontaneous");
          return;
        }
        const auto order = c.require_int("dynamics", "order_n");
        const double ev = c.require_double("dynamics", "photon_energy_ev");
        if (order < 1) out.push_back("order_n must be >= 1");
        if (!(ev > 0.0)) out.push_back("photon_energy_ev must be > 0");
        if (order >= 1 && ev > 0.0) {
          const auto cap = harmonic_order_cap(ev_to_omega(ev));
          if (order > cap) {
            out.push_back("order " + std::to_string(order) + " exceeds n_max = " +
                          std::to_string(cap));
          }
        }
        guard([&] {
          const auto sys = system_from(c, mode == "evolve"
                                              ? c.get_double("evolve", "intensity_W_m2", 0.0)
                                              : 0.0);
          if (mode == "evolve") {
            const double dt = c.get_double("evolve", "dt_s", 0.0);
            const double g = sys.coupling_rate(0, 1);
            if (dt > 0.0 && g > 0.0 && dt > kPi / g / 50.0) {
              out.push_back("dt_s under-resolves the Rabi period (needs >= 50 steps)");
            }
          }
        });
        if (mode == "scaling") {
          guard([&] {
            const auto grid = scaling_grid(c);
            if (grid.size() < 8) out.push_back("[scaling] needs >= 8 points");
            if (grid.back() / grid.front() < 1e3) {
              out.push_back("[scaling] intensity grid must span >= 3 decades");
            }
          });
        }
      });
      break;
    case Command::sweep:
      guard([&] {
        if (c.require_int("sweep", "points") < 0) out.push_back("[sweep] points must be >= 0");
        const std::string scale = c.get_string("sweep", "scale", "linear");
        if (scale != "linear" && scale != "log") {
          out.push_back("[sweep] scale must be linear or log");
        }
      });
      guard([&] { target_from(c); });
      validate_laser_block(c, out);
      break;
  }
  return out;
}

}  // namespace nlqed::cli
