#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nlqed/fock.hpp"

namespace nlqed {

// Few-level atom driven by one correlated mode group. Level energies in eV
// (strictly increasing, ground first); dipole transition moments in atomic
// units as a real symmetric matrix with zero diagonal.
struct FewLevelSystem {
  std::vector<double> level_energies_ev;
  Eigen::MatrixXd dipole_moments;
  int coupling_order;  // N
  ModeGroup field;
  double intensity;  // W/m^2

  FewLevelSystem(std::vector<double> energies_ev, Eigen::MatrixXd dipoles, int order_n,
                 ModeGroup field_group, double intensity_w_m2);

  int levels() const { return static_cast<int>(level_energies_ev.size()); }

  // Coupling rate between levels k and j, rad/s: sqrt(2 pi I)/c * d_kj.
  // The sqrt(I) scaling is the whole story for the intensity experiments;
  // the absolute rate normalization is a model convention.
  double coupling_rate(int k, int j) const;

  FewLevelSystem with_intensity(double intensity_w_m2) const;
};

// Populations over time; each row sums to 1.
struct Trajectory {
  std::vector<double> times;      // s
  Eigen::MatrixXd populations;    // row = time index, column = level
};

// Amplitude equations in the frame rotating at k * N * omega for level k:
// diagonal (E_k - E_0)/hbar - k N omega, off-diagonal the coupling rates.
// Integrated with fixed-step RK4 on internal substeps small enough that the
// norm stays conserved to better than 1e-8 over 1e5 output steps; dt is the
// output sampling interval and must resolve the Rabi period with at least
// 50 samples, otherwise the run is rejected as under-resolved.
Trajectory evolve(const FewLevelSystem& sys, double t_final, double dt);

enum class ScalingMode {
  nonlocal,      // evolve the driven system; P grows as I^1 for every order
  conventional,  // lowest-order N-photon perturbation theory; P grows as I^N
};

struct ScalingPoint {
  double intensity;
  double probability;
};

struct ScalingFit {
  double slope;      // d log10 P / d log10 I, least squares
  double intercept;  // log10 P at log10 I = 0
  std::vector<ScalingPoint> points;
  ScalingMode mode;
  int order;
  double probe_time;
};

// Excited-state probability at t_probe across an intensity grid, fitted in
// log-log. Requires >= 8 intensities spanning >= 3 decades; rejects probe
// times that drive the largest intensity out of the perturbative regime
// (P > 0.05).
ScalingFit scaling_experiment(const FewLevelSystem& sys_template,
                              const std::vector<double>& intensities, double t_probe,
                              ScalingMode mode = ScalingMode::nonlocal);

// Dipole spontaneous-emission rate K omega^3 d^2 in 1/s, with K calibrated so
// a 12 eV photon at the reference dipole (1 a.u.) has a 100 ns lifetime.
double spontaneous_rate(double photon_energy_ev, double dipole_au);
double spontaneous_lifetime(double photon_energy_ev, double dipole_au);
// The calibration constant K, reported in output metadata.
double spontaneous_rate_calibration();

}  // namespace nlqed
