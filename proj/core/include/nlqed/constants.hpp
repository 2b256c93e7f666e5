#pragma once

namespace nlqed {

// CODATA 2018 values, SI units. Single source for every physical number in
// the library; the version tag is embedded in all CSV output so results can
// be traced to the constants they were computed with.
struct PhysicalConstants {
  static constexpr const char* version = "CODATA-2018";

  static constexpr double c = 299792458.0;             // speed of light, m/s (exact)
  static constexpr double hbar = 1.054571817e-34;      // reduced Planck constant, J s
  static constexpr double e_charge = 1.602176634e-19;  // elementary charge, C (exact)
  static constexpr double m_e = 9.1093837015e-31;      // electron mass, kg
  static constexpr double bohr_radius = 5.29177210903e-11;  // m

  static constexpr double electron_rest_energy_j = m_e * c * c;
  static constexpr double electron_rest_energy_ev = electron_rest_energy_j / e_charge;
};

constexpr double ev_to_joule(double ev) { return ev * PhysicalConstants::e_charge; }
constexpr double joule_to_ev(double j) { return j / PhysicalConstants::e_charge; }

// Photon energy in eV <-> angular frequency in rad/s.
constexpr double ev_to_omega(double ev) { return ev_to_joule(ev) / PhysicalConstants::hbar; }
constexpr double omega_to_ev(double omega) { return joule_to_ev(omega * PhysicalConstants::hbar); }

// Vacuum wavelength in m <-> angular frequency in rad/s.
constexpr double wavelength_to_omega(double lambda_m) {
  return 2.0 * 3.141592653589793238462643383279502884 * PhysicalConstants::c / lambda_m;
}
constexpr double omega_to_wavelength(double omega) {
  return 2.0 * 3.141592653589793238462643383279502884 * PhysicalConstants::c / omega;
}

}  // namespace nlqed
