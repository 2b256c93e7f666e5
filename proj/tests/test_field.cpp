#include <cmath>
#include <complex>

#include <doctest.h>

#include "nlqed/constants.hpp"
#include "nlqed/field.hpp"

using namespace nlqed;

namespace {
ModeGroup group(int n, double omega = 1.0) { return ModeGroup("g", n, omega); }
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

TEST_CASE("quadratures from a mode amplitude") {
  SUBCASE("real C gives y = 0") {
    const ModeAmplitude amp(group(2), {3.0, 0.0}, 2.5);
    const auto q = quadratures_from_amplitude(amp, 2);
    CHECK(q.y == 0.0);
    CHECK(q.z == doctest::Approx(2.0 * 3.0 * std::sqrt(2.5 / kPi) / (2.0 * PhysicalConstants::c))
                     .epsilon(1e-15));
    CHECK(q.group_frequency == doctest::Approx(2.0));
  }
  SUBCASE("imaginary C gives z = 0") {
    const double u = 1.7;
    const ModeAmplitude amp(group(3, 2.0), {0.0, u}, kPi);
    const auto q = quadratures_from_amplitude(amp, 3);
    CHECK(q.z == 0.0);
    // sqrt(Omega/pi)/(2c) * N omega * 2u with Omega = pi
    CHECK(q.y == doctest::Approx(6.0 * 2.0 * u / (2.0 * PhysicalConstants::c)).epsilon(1e-15));
  }
  SUBCASE("C = 1+i, Omega = pi, N = 2, omega = 1: direct substitution") {
    const ModeAmplitude amp(group(2), {1.0, 1.0}, kPi);
    const auto q = quadratures_from_amplitude(amp, 2);
    const double scale = 1.0 / (2.0 * PhysicalConstants::c);  // sqrt(pi/pi) / (2c)
    CHECK(q.y == doctest::Approx(scale * 2.0 * 2.0).epsilon(1e-15));
    CHECK(q.z == doctest::Approx(scale * 2.0).epsilon(1e-15));
  }
  SUBCASE("volume must be positive") {
    CHECK_THROWS_AS(ModeAmplitude(group(1), {1.0, 0.0}, 0.0), std::invalid_argument);
  }
}

TEST_CASE("classical field energy") {
  CHECK(field_energy_classical({0.0, 0.0, 5.0}) == 0.0);
  // N = 2, omega = 1, Y = 0, Z = 1: the (N omega)^2 = 4 coefficient
  CHECK(field_energy_classical({0.0, 1.0, 2.0}) == doctest::Approx(2.0).epsilon(1e-15));
  // N = 3, omega = 2, Y = 1, Z = 1
  CHECK(field_energy_classical({1.0, 1.0, 6.0}) == doctest::Approx(18.5).epsilon(1e-15));
}

TEST_CASE("both energy routes agree to 1e-12") {
  unsigned long long seed = 12345;
  const auto next = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>((seed >> 33) & 0xffffff) / double(0xffffff) * 4.0 - 2.0;
  };
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 7;
    const double omega = 0.5 + std::abs(next());
    const double volume = 0.1 + std::abs(next());
    const ModeAmplitude amp(group(n, omega), {next(), next()}, volume);
    const double via_quads = field_energy_classical(quadratures_from_amplitude(amp, n));
    const double direct = field_energy_from_amplitude(amp, n);
    CHECK(via_quads == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("hamiltonian oscillation recovers N omega") {
  const Quadratures q0{0.3, 1.0, 0.0};  // group_frequency unused by the integrator inputs below
  SUBCASE("N = 1, omega = 1") {
    const double f = verify_hamilton_oscillation(q0, 1, 1.0, 20.0 * 2.0 * kPi, 0.01);
    CHECK(f == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(f == doctest::Approx(1.0).epsilon(1e-6));  // the fit is far better than required
  }
  SUBCASE("N = 2, omega = 1 oscillates at 2 omega") {
    const double f = verify_hamilton_oscillation(q0, 2, 1.0, 10.0 * 2.0 * kPi, 0.005);
    CHECK(f == doctest::Approx(2.0).epsilon(2e-3));
  }
  SUBCASE("N = 10, omega = 0.5") {
    const double f = verify_hamilton_oscillation(q0, 10, 0.5, 4.0 * 2.0 * kPi, 0.001);
    CHECK(f == doctest::Approx(5.0).epsilon(1e-3));
  }
  SUBCASE("closed form tracks the trajectory") {
    const double omega_g = 3.0;  // N = 3, omega = 1
    const auto traj = integrate_quadratures({0.5, 0.25, omega_g}, 3, 1.0, 50.0, 0.002);
    for (size_t i = 0; i < traj.size(); i += 499) {
      const double t = traj[i].t;
      const double z_exact = 0.25 * std::cos(omega_g * t) + (0.5 / omega_g) * std::sin(omega_g * t);
      CHECK(traj[i].z == doctest::Approx(z_exact).epsilon(1e-7));
    }
  }
}

TEST_CASE("oscillation preconditions") {
  const Quadratures q0{0.0, 1.0, 0.0};
  CHECK_THROWS_WITH_AS(verify_hamilton_oscillation(q0, 10, 1.0, 1000.0, 0.02),
                       doctest::Contains("too coarse"), std::invalid_argument);
  CHECK_THROWS_AS(verify_hamilton_oscillation(q0, 1, 1.0, 5.0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(verify_hamilton_oscillation({0.0, 0.0, 0.0}, 1, 1.0, 100.0, 0.01),
                  std::runtime_error);
}

TEST_CASE("energy drift along ten periods stays below 1e-6") {
  for (int n : {1, 2, 10}) {
    const double omega = 0.8;
    const double group_freq = n * omega;
    const Quadratures q0{0.1, 1.0, group_freq};
    const double period = 2.0 * kPi / group_freq;
    const auto traj = integrate_quadratures(q0, n, omega, 10.0 * period, period / 2000.0);
    const double e0 = field_energy_classical({traj.front().y, traj.front().z, group_freq});
    double worst = 0.0;
    for (const auto& s : traj) {
      const double e = field_energy_classical({s.y, s.z, group_freq});
      worst = std::max(worst, std::abs(e - e0) / e0);
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("harmonic order cap") {
  SUBCASE("exact boundary gives n_max = 1") {
    const double omega = PhysicalConstants::electron_rest_energy_j / PhysicalConstants::hbar;
    CHECK(harmonic_order_cap(omega) == 1);
  }
  SUBCASE("1.55 eV photons") {
    const long long expected = static_cast<long long>(
        std::floor(PhysicalConstants::electron_rest_energy_ev / 1.55));
    CHECK(harmonic_order_cap(ev_to_omega(1.55)) == expected);
    CHECK(expected == 329676);
  }
  SUBCASE("5 eV photons cap lower than 1.55 eV ones") {
    const auto cap5 = harmonic_order_cap(ev_to_omega(5.0));
    CHECK(cap5 == static_cast<long long>(std::floor(PhysicalConstants::electron_rest_energy_ev / 5.0)));
    CHECK(cap5 == 102199);
    CHECK(cap5 < harmonic_order_cap(ev_to_omega(1.55)));
  }
  SUBCASE("monotone non-increasing in omega") {
    unsigned long long seed = 777;
    const auto next = [&seed]() {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<double>((seed >> 33) & 0xffffff) / double(0xffffff);
    };
    for (int i = 0; i < 200; ++i) {
      const double w = ev_to_omega(0.1 + 20.0 * next());
      const double factor = 1.0 + 3.0 * next();
      CHECK(harmonic_order_cap(w * factor) <= harmonic_order_cap(w));
    }
  }
}

TEST_CASE("quantized and classical energies meet in the correspondence limit") {
  for (int n : {1, 2, 4}) {
    const double omega = 2.0;
    const ModeGroup g("g", n, omega);
    for (int occ : {64 * n, 256 * n}) {
      const auto q = number_and_energy(FockVector::basis(g, occ + n, occ));
      // matched amplitude: |C|^2 chosen so the classical energy equals n hbar omega
      const double classical = occ * PhysicalConstants::hbar * omega;
      const double rel = std::abs(q.energy_j - classical) / classical;
      CHECK(rel <= 2.0 / occ);
    }
  }
}
