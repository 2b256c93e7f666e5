#include "nlqed/field.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "nlqed/constants.hpp"

namespace nlqed {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ModeAmplitude::ModeAmplitude(ModeGroup g, std::complex<double> c, double volume_m3)
    : group(std::move(g)), c_value(c), quantization_volume(volume_m3) {
  if (!(quantization_volume > 0.0)) {
    throw std::invalid_argument("ModeAmplitude: quantization volume must be > 0");
  }
}

Quadratures quadratures_from_amplitude(const ModeAmplitude& amp, int correlation_order) {
  if (correlation_order < 1) {
    throw std::invalid_argument("quadratures_from_amplitude: correlation order must be >= 1");
  }
  const double scale = std::sqrt(amp.quantization_volume / kPi) / (2.0 * PhysicalConstants::c);
  const double group_freq = correlation_order * amp.group.omega;
  // C - C* = 2i Im C and C + C* = 2 Re C, so both quadratures are real.
  const double y = scale * group_freq * 2.0 * amp.c_value.imag();
  const double z = scale * 2.0 * amp.c_value.real();
  return {y, z, group_freq};
}

double field_energy_classical(const Quadratures& quads) {
  return 0.5 * (quads.y * quads.y +
                quads.group_frequency * quads.group_frequency * quads.z * quads.z);
}

double field_energy_from_amplitude(const ModeAmplitude& amp, int correlation_order) {
  const double group_freq = correlation_order * amp.group.omega;
  const double c2 = PhysicalConstants::c * PhysicalConstants::c;
  return amp.quantization_volume * group_freq * group_freq * std::norm(amp.c_value) /
         (2.0 * kPi * c2);
}

std::vector<QuadratureSample> integrate_quadratures(const Quadratures& initial,
                                                    int correlation_order, double omega,
                                                    double t_final, double dt) {
  if (correlation_order < 1) {
    throw std::invalid_argument("integrate_quadratures: correlation order must be >= 1");
  }
  if (!(omega > 0.0) || !(dt > 0.0) || !(t_final > 0.0)) {
    throw std::invalid_argument("integrate_quadratures: omega, dt and t_final must be > 0");
  }
  const double group_freq = correlation_order * omega;
  if (dt * group_freq > 0.1) {
    throw std::invalid_argument("integrate_quadratures: step too coarse, dt*N*omega = " +
                                std::to_string(dt * group_freq) + " > 0.1");
  }
  const auto steps = static_cast<long long>(std::floor(t_final / dt));
  if (steps < 1000) {
    throw std::invalid_argument("integrate_quadratures: needs >= 1000 steps, got " +
                                std::to_string(steps));
  }

  const double omega2 = group_freq * group_freq;
  // Yoshida composition of three leapfrog substeps; 4th order, symplectic.
  const double cbrt2 = std::cbrt(2.0);
  const double w1 = 1.0 / (2.0 - cbrt2);
  const double w0 = -cbrt2 * w1;
  const double weights[3] = {w1, w0, w1};

  std::vector<QuadratureSample> out;
  out.reserve(static_cast<size_t>(steps) + 1);
  double z = initial.z;
  double y = initial.y;
  out.push_back({0.0, y, z});
  for (long long i = 1; i <= steps; ++i) {
    for (double w : weights) {
      const double h = w * dt;
      z += 0.5 * h * y;
      y -= h * omega2 * z;
      z += 0.5 * h * y;
    }
    out.push_back({static_cast<double>(i) * dt, y, z});
  }
  return out;
}

double verify_hamilton_oscillation(const Quadratures& initial, int correlation_order,
                                   double omega, double t_final, double dt) {
  const auto trajectory = integrate_quadratures(initial, correlation_order, omega, t_final, dt);
  // A sampled sinusoid satisfies z[i+1] - 2 z[i] + z[i-1] = -4 sin^2(w dt / 2) z[i]
  // exactly; least squares over the whole trajectory recovers w without
  // needing peak finding or zero crossings.
  double num = 0.0;
  double den = 0.0;
  for (size_t i = 1; i + 1 < trajectory.size(); ++i) {
    const double zi = trajectory[i].z;
    const double second_diff = trajectory[i + 1].z - 2.0 * zi + trajectory[i - 1].z;
    num += -second_diff * zi;
    den += zi * zi;
  }
  if (den == 0.0) {
    throw std::runtime_error("verify_hamilton_oscillation: trajectory has no oscillation (zero initial amplitude)");
  }
  const double lambda = num / den;  // 4 sin^2(w dt / 2)
  if (lambda <= 0.0 || lambda >= 4.0) {
    throw std::runtime_error("verify_hamilton_oscillation: frequency fit out of range");
  }
  return 2.0 * std::asin(0.5 * std::sqrt(lambda)) / dt;
}

long long harmonic_order_cap(double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("harmonic_order_cap: omega must be > 0");
  }
  const double ratio = PhysicalConstants::electron_rest_energy_j /
                       (PhysicalConstants::hbar * omega);
  auto n = static_cast<long long>(std::floor(ratio));
  if (static_cast<double>(n + 1) <= ratio * (1.0 + 1e-12)) ++n;
  return n;
}

}  // namespace nlqed
