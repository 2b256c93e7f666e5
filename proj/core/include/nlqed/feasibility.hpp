#pragma once

#include <string>

namespace nlqed {

// Absorber: a sphere of given radius (atom or cluster) carrying n_e
// outer-shell electrons, or a directly supplied volume.
struct TargetSpec {
  double radius;          // m; 0 when the volume was supplied directly
  double volume;          // m^3
  double electron_count;  // n_e
  std::string label;

  static TargetSpec sphere(double radius_m, double electron_count, std::string label = {});
  static TargetSpec with_volume(double volume_m3, double electron_count, std::string label = {});
};

// Drive field. Wavelength and omega are stored consistently; the factories
// derive one from the other, and the checked constructor enforces agreement
// to 1e-9 when both are given.
struct LaserSpec {
  double intensity;       // W/m^2
  double omega;           // rad/s
  double wavelength;      // m
  double pulse_duration;  // s, the absorption window delta t

  static LaserSpec from_wavelength(double intensity_w_m2, double wavelength_m,
                                   double pulse_duration_s);
  static LaserSpec from_omega(double intensity_w_m2, double omega_rad_s, double pulse_duration_s);
  static LaserSpec checked(double intensity_w_m2, double omega_rad_s, double wavelength_m,
                           double pulse_duration_s);
};

// Instantaneous photon count in the target volume: V I / (c hbar omega).
double photons_in_volume(const TargetSpec& target, const LaserSpec& laser);

struct BudgetResult {
  double photon_count;     // V I / (c hbar omega), dimensionless
  double literal_quantity; // V I / (c hbar omega^2); carries dimension time, reported as printed
  double ratio;            // photon_count / (margin * n_e)
  bool pass;               // ratio >= 1
};

// Photon-budget check: enough photons must be inside the target during the
// absorption window to serve every outer-shell electron. The verdict uses the
// dimensionless photon count; the quantity with an extra 1/omega is reported
// alongside without correction, since the two published forms of the
// condition disagree about that factor.
BudgetResult budget_condition(const TargetSpec& target, const LaserSpec& laser,
                              double margin = 10.0);

// Intensity at which the budget ratio equals 1 for the given margin:
// I_cut = margin * n_e * c hbar omega / V. Below it the correlated
// absorption cannot outrun the electron count.
double cutoff_intensity(const TargetSpec& target, double omega, double margin = 10.0);

struct WindowResult {
  double ratio;  // pulse_duration * omega
  bool pass;     // ratio <= strictness
};

// The correlated absorption must complete well within one field cycle:
// delta t * omega <= strictness (default 0.1).
WindowResult window_check(const LaserSpec& laser, double strictness = 0.1);

// Energy of the single spontaneously emitted photon after an order-N
// correlated absorption: N hbar omega, in eV. Throws if N exceeds
// harmonic_order_cap(omega) or N < 1.
double emitted_photon_energy_ev(long long order_n, double omega);

}  // namespace nlqed
