#include "nlqed/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "nlqed/constants.hpp"

namespace nlqed {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Reference point fixing the spontaneous-rate constant: 12 eV at 1 a.u.
// dipole decays in 100 ns.
constexpr double kCalibEnergyEv = 12.0;
constexpr double kCalibDipoleAu = 1.0;
constexpr double kCalibLifetimeS = 100e-9;

double coupling_rate_at(double intensity, double dipole) {
  return std::sqrt(2.0 * kPi * intensity) / PhysicalConstants::c * dipole;
}
}  // namespace

FewLevelSystem::FewLevelSystem(std::vector<double> energies_ev, Eigen::MatrixXd dipoles,
                               int order_n, ModeGroup field_group, double intensity_w_m2)
    : level_energies_ev(std::move(energies_ev)),
      dipole_moments(std::move(dipoles)),
      coupling_order(order_n),
      field(std::move(field_group)),
      intensity(intensity_w_m2) {
  const auto n = static_cast<Eigen::Index>(level_energies_ev.size());
  if (n < 2) throw std::invalid_argument("FewLevelSystem: needs at least two levels");
  for (Eigen::Index k = 1; k < n; ++k) {
    if (!(level_energies_ev[k] > level_energies_ev[k - 1])) {
      throw std::invalid_argument("FewLevelSystem: level energies must be strictly increasing");
    }
  }
  if (dipole_moments.rows() != n || dipole_moments.cols() != n) {
    throw std::invalid_argument("FewLevelSystem: dipole matrix must be levels x levels");
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (dipole_moments(k, k) != 0.0) {
      throw std::invalid_argument("FewLevelSystem: dipole matrix diagonal must be zero");
    }
    for (Eigen::Index j = 0; j < k; ++j) {
      if (dipole_moments(k, j) != dipole_moments(j, k)) {
        throw std::invalid_argument("FewLevelSystem: dipole matrix must be symmetric");
      }
    }
  }
  if (coupling_order < 1) throw std::invalid_argument("FewLevelSystem: coupling order must be >= 1");
  if (intensity < 0.0) throw std::invalid_argument("FewLevelSystem: intensity must be >= 0");
}

double FewLevelSystem::coupling_rate(int k, int j) const {
  if (k < 0 || j < 0 || k >= levels() || j >= levels()) {
    throw std::invalid_argument("FewLevelSystem::coupling_rate: level index out of range");
  }
  return coupling_rate_at(intensity, dipole_moments(k, j));
}

FewLevelSystem FewLevelSystem::with_intensity(double intensity_w_m2) const {
  return FewLevelSystem(level_energies_ev, dipole_moments, coupling_order, field, intensity_w_m2);
}

namespace {

// Rotating-frame Hamiltonian over hbar, rad/s.
Eigen::MatrixXcd frame_hamiltonian(const FewLevelSystem& sys) {
  const int n = sys.levels();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const double group_freq = sys.coupling_order * sys.field.omega;
  for (int k = 0; k < n; ++k) {
    const double gap_j = ev_to_joule(sys.level_energies_ev[k] - sys.level_energies_ev[0]);
    h(k, k) = gap_j / PhysicalConstants::hbar - k * group_freq;
    for (int j = 0; j < n; ++j) {
      if (j != k) h(k, j) = sys.coupling_rate(k, j);
    }
  }
  return h.cast<std::complex<double>>();
}

double max_coupling_rate(const FewLevelSystem& sys) {
  double g = 0.0;
  for (int k = 0; k < sys.levels(); ++k) {
    for (int j = 0; j < k; ++j) {
      g = std::max(g, std::abs(sys.coupling_rate(k, j)));
    }
  }
  return g;
}

}  // namespace

Trajectory evolve(const FewLevelSystem& sys, double t_final, double dt) {
  if (!(t_final > 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("evolve: t_final and dt must be > 0");
  }
  const double g_max = max_coupling_rate(sys);
  if (g_max > 0.0) {
    const double rabi_period = kPi / g_max;
    if (dt > rabi_period / 50.0) {
      throw std::invalid_argument("evolve: under-resolved step size, dt = " + std::to_string(dt) +
                                  " s exceeds 1/50 of the Rabi period " +
                                  std::to_string(rabi_period) + " s");
    }
  }
  const auto n_out = static_cast<long long>(std::floor(t_final / dt + 1e-9));
  if (n_out < 1) throw std::invalid_argument("evolve: t_final shorter than one output step");

  const Eigen::MatrixXcd h = frame_hamiltonian(sys);
  const int n = sys.levels();

  // Internal substeps sized from a Gershgorin bound on the spectral radius so
  // RK4 stays far inside its accuracy region regardless of the sampling step.
  double lambda = 0.0;
  for (int k = 0; k < n; ++k) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(h(k, j));
    lambda = std::max(lambda, row);
  }
  const int substeps = std::max(1, static_cast<int>(std::ceil(dt * lambda / 0.005)));
  const double hstep = dt / substeps;
  const std::complex<double> minus_i(0.0, -1.0);

  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
  c(0) = 1.0;

  Trajectory traj;
  traj.times.resize(static_cast<size_t>(n_out) + 1);
  traj.populations.resize(n_out + 1, n);

  const auto record = [&](long long row, double t) {
    traj.times[static_cast<size_t>(row)] = t;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      const double p = std::norm(c(k));
      traj.populations(row, k) = p;
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-8) {
      throw std::runtime_error("evolve: norm drifted to " + std::to_string(total));
    }
  };

  record(0, 0.0);
  Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n);
  for (long long i = 1; i <= n_out; ++i) {
    for (int s = 0; s < substeps; ++s) {
      k1 = minus_i * (h * c);
      k2 = minus_i * (h * (c + 0.5 * hstep * k1));
      k3 = minus_i * (h * (c + 0.5 * hstep * k2));
      k4 = minus_i * (h * (c + hstep * k3));
      c += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    record(i, static_cast<double>(i) * dt);
  }
  return traj;
}

ScalingFit scaling_experiment(const FewLevelSystem& sys_template,
                              const std::vector<double>& intensities, double t_probe,
                              ScalingMode mode) {
  if (intensities.size() < 8) {
    throw std::invalid_argument("scaling_experiment: needs >= 8 intensity points");
  }
  double i_min = intensities.front();
  double i_max = intensities.front();
  for (double i : intensities) {
    if (!(i > 0.0)) throw std::invalid_argument("scaling_experiment: intensities must be > 0");
    i_min = std::min(i_min, i);
    i_max = std::max(i_max, i);
  }
  if (i_max / i_min < 1e3) {
    throw std::invalid_argument("scaling_experiment: intensity grid must span >= 3 decades");
  }
  if (!(t_probe > 0.0)) throw std::invalid_argument("scaling_experiment: t_probe must be > 0");

  const double d01 = sys_template.dipole_moments(0, 1);
  const auto probability_at = [&](double intensity) {
    if (mode == ScalingMode::conventional) {
      // Lowest-order N-photon perturbation theory: the one-group transition
      // probability (g t)^2, taken to the N-th power.
      const double g = coupling_rate_at(intensity, d01);
      const double base = g * t_probe * g * t_probe;
      return std::pow(base, sys_template.coupling_order);
    }
    const FewLevelSystem sys = sys_template.with_intensity(intensity);
    const double g_max = max_coupling_rate(sys);
    if (g_max <= 0.0) {
      throw std::invalid_argument("scaling_experiment: template has zero coupling");
    }
    const double dt = std::min(t_probe / 8.0, kPi / (64.0 * g_max));
    const Trajectory traj = evolve(sys, t_probe, dt);
    return 1.0 - traj.populations(traj.populations.rows() - 1, 0);
  };

  const double p_top = probability_at(i_max);
  if (p_top > 0.05) {
    throw std::runtime_error("scaling_experiment: saturation detected, excited population " +
                             std::to_string(p_top) + " at the largest intensity; shorten t_probe");
  }

  ScalingFit fit;
  fit.mode = mode;
  fit.order = sys_template.coupling_order;
  fit.probe_time = t_probe;
  fit.points.reserve(intensities.size());

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double intensity : intensities) {
    const double p = probability_at(intensity);
    if (!(p > 0.0)) {
      throw std::runtime_error("scaling_experiment: vanishing probability at I = " +
                               std::to_string(intensity));
    }
    fit.points.push_back({intensity, p});
    const double x = std::log10(intensity);
    const double y = std::log10(p);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double npts = static_cast<double>(fit.points.size());
  const double denom = npts * sxx - sx * sx;
  fit.slope = (npts * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / npts;
  return fit;
}

double spontaneous_rate_calibration() {
  const double omega_ref = ev_to_omega(kCalibEnergyEv);
  return 1.0 / (kCalibLifetimeS * omega_ref * omega_ref * omega_ref * kCalibDipoleAu *
                kCalibDipoleAu);
}

double spontaneous_rate(double photon_energy_ev, double dipole_au) {
  if (!(photon_energy_ev > 0.0) || !(dipole_au > 0.0)) {
    throw std::invalid_argument("spontaneous_rate: inputs must be > 0");
  }
  const double omega = ev_to_omega(photon_energy_ev);
  return spontaneous_rate_calibration() * omega * omega * omega * dipole_au * dipole_au;
}

double spontaneous_lifetime(double photon_energy_ev, double dipole_au) {
  return 1.0 / spontaneous_rate(photon_energy_ev, dipole_au);
}

}  // namespace nlqed
