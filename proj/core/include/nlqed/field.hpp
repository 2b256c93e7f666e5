#pragma once

#include <complex>
#include <vector>

#include "nlqed/fock.hpp"

namespace nlqed {

// Fourier coefficient C of one mode group over a quantization volume.
struct ModeAmplitude {
  ModeGroup group;
  std::complex<double> c_value;
  double quantization_volume;  // m^3

  ModeAmplitude(ModeGroup g, std::complex<double> c, double volume_m3);
};

// Canonical pair of one mode group. y is the momentum-like quantity, z the
// coordinate-like one; the pair oscillates at the group frequency N*omega.
struct Quadratures {
  double y;
  double z;
  double group_frequency;  // N*omega, rad/s
};

// y = -i sqrt(Omega/pi)/(2c) * N*omega * (C - C*)
// z =    sqrt(Omega/pi)/(2c) * (C + C*)
// Both are real; the imaginary parts cancel identically.
Quadratures quadratures_from_amplitude(const ModeAmplitude& amp, int correlation_order);

// Field energy of one group, W = (Y^2 + (N*omega)^2 Z^2) / 2, using the
// group frequency stored in the quadrature pair.
double field_energy_classical(const Quadratures& quads);

// Same energy evaluated directly from the mode amplitude,
// W = Omega (N*omega)^2 |C|^2 / (2 pi c^2). Second algebraic route used to
// cross-check quadratures_from_amplitude + field_energy_classical.
double field_energy_from_amplitude(const ModeAmplitude& amp, int correlation_order);

struct QuadratureSample {
  double t;
  double y;
  double z;
};

// Fixed-step 4th-order symplectic (Yoshida) integration of Hamilton's
// equations dZ/dt = Y, dY/dt = -(N*omega)^2 Z. Throws if dt*N*omega > 0.1 or
// fewer than 1000 steps are requested.
std::vector<QuadratureSample> integrate_quadratures(const Quadratures& initial,
                                                    int correlation_order, double omega,
                                                    double t_final, double dt);

// Integrates as above and returns the dominant oscillation frequency of Z(t)
// in rad/s, extracted from the trajectory by a least-squares fit of the
// second-difference relation of a sampled sinusoid. For any nonzero initial
// condition this recovers N*omega to well within 0.1%.
double verify_hamilton_oscillation(const Quadratures& initial, int correlation_order,
                                   double omega, double t_final, double dt);

// Largest n with n*hbar*omega <= m_e c^2: the electron rest energy caps both
// the zero-point summation and the emitted photon energy. Ratios within one
// part in 1e12 of an integer count as attaining it, which keeps exact-boundary
// inputs stable against roundoff.
long long harmonic_order_cap(double omega);

}  // namespace nlqed
