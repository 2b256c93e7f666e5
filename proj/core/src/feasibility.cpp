#include "nlqed/feasibility.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "nlqed/constants.hpp"
#include "nlqed/field.hpp"

namespace nlqed {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void validate_target(const TargetSpec& t) {
  if (!(t.volume > 0.0)) throw std::invalid_argument("TargetSpec: volume must be > 0");
  if (!(t.electron_count >= 1.0)) {
    throw std::invalid_argument("TargetSpec: electron count must be >= 1");
  }
}

void validate_laser(const LaserSpec& l) {
  if (l.intensity < 0.0) throw std::invalid_argument("LaserSpec: intensity must be >= 0");
  if (!(l.omega > 0.0)) throw std::invalid_argument("LaserSpec: omega must be > 0");
  if (l.pulse_duration < 0.0) throw std::invalid_argument("LaserSpec: pulse duration must be >= 0");
}
}  // namespace

TargetSpec TargetSpec::sphere(double radius_m, double electron_count, std::string label) {
  if (!(radius_m > 0.0)) throw std::invalid_argument("TargetSpec: radius must be > 0");
  TargetSpec t{radius_m, 4.0 / 3.0 * kPi * radius_m * radius_m * radius_m, electron_count,
               std::move(label)};
  validate_target(t);
  return t;
}

TargetSpec TargetSpec::with_volume(double volume_m3, double electron_count, std::string label) {
  TargetSpec t{0.0, volume_m3, electron_count, std::move(label)};
  validate_target(t);
  return t;
}

LaserSpec LaserSpec::from_wavelength(double intensity_w_m2, double wavelength_m,
                                     double pulse_duration_s) {
  if (!(wavelength_m > 0.0)) throw std::invalid_argument("LaserSpec: wavelength must be > 0");
  LaserSpec l{intensity_w_m2, wavelength_to_omega(wavelength_m), wavelength_m, pulse_duration_s};
  validate_laser(l);
  return l;
}

LaserSpec LaserSpec::from_omega(double intensity_w_m2, double omega_rad_s,
                                double pulse_duration_s) {
  if (!(omega_rad_s > 0.0)) throw std::invalid_argument("LaserSpec: omega must be > 0");
  LaserSpec l{intensity_w_m2, omega_rad_s, omega_to_wavelength(omega_rad_s), pulse_duration_s};
  validate_laser(l);
  return l;
}

LaserSpec LaserSpec::checked(double intensity_w_m2, double omega_rad_s, double wavelength_m,
                             double pulse_duration_s) {
  if (!(omega_rad_s > 0.0) || !(wavelength_m > 0.0)) {
    throw std::invalid_argument("LaserSpec: omega and wavelength must be > 0");
  }
  const double mismatch = std::abs(wavelength_to_omega(wavelength_m) - omega_rad_s) / omega_rad_s;
  if (mismatch > 1e-9) {
    throw std::invalid_argument("LaserSpec: wavelength and omega disagree by relative " +
                                std::to_string(mismatch));
  }
  LaserSpec l{intensity_w_m2, omega_rad_s, wavelength_m, pulse_duration_s};
  validate_laser(l);
  return l;
}

double photons_in_volume(const TargetSpec& target, const LaserSpec& laser) {
  validate_target(target);
  validate_laser(laser);
  return target.volume * laser.intensity /
         (PhysicalConstants::c * PhysicalConstants::hbar * laser.omega);
}

BudgetResult budget_condition(const TargetSpec& target, const LaserSpec& laser, double margin) {
  if (!(margin >= 1.0)) throw std::invalid_argument("budget_condition: margin must be >= 1");
  const double count = photons_in_volume(target, laser);
  const double literal = count / laser.omega;
  const double ratio = count / (margin * target.electron_count);
  return {count, literal, ratio, ratio >= 1.0};
}

double cutoff_intensity(const TargetSpec& target, double omega, double margin) {
  validate_target(target);
  if (!(omega > 0.0)) throw std::invalid_argument("cutoff_intensity: omega must be > 0");
  if (!(margin >= 1.0)) throw std::invalid_argument("cutoff_intensity: margin must be >= 1");
  return margin * target.electron_count * PhysicalConstants::c * PhysicalConstants::hbar * omega /
         target.volume;
}

WindowResult window_check(const LaserSpec& laser, double strictness) {
  validate_laser(laser);
  if (!(strictness > 0.0) || strictness > 1.0) {
    throw std::invalid_argument("window_check: strictness must be in (0, 1]");
  }
  const double ratio = laser.pulse_duration * laser.omega;
  return {ratio, ratio <= strictness};
}

double emitted_photon_energy_ev(long long order_n, double omega) {
  if (order_n < 1) throw std::invalid_argument("emitted_photon_energy_ev: order must be >= 1");
  const long long cap = harmonic_order_cap(omega);
  if (order_n > cap) {
    throw std::invalid_argument("emitted_photon_energy_ev: order " + std::to_string(order_n) +
                                " exceeds the rest-energy cap " + std::to_string(cap));
  }
  return static_cast<double>(order_n) * omega_to_ev(omega);
}

}  // namespace nlqed
