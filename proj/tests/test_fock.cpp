#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "nlqed/constants.hpp"
#include "nlqed/fock.hpp"

using namespace nlqed;

namespace {
ModeGroup group(int n, double omega = 1.0) { return ModeGroup("g", n, omega); }

Eigen::VectorXcd as_vector(const FockVector& v) {
  Eigen::VectorXcd out(v.truncation() + 1);
  for (int n = 0; n <= v.truncation(); ++n) out(n) = v.amplitude(n);
  return out;
}
}  // namespace

TEST_CASE("mode group invariants") {
  CHECK_THROWS_AS(ModeGroup("bad", 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModeGroup("bad", 1, 0.0), std::invalid_argument);
  CHECK(group(3, 2.0).group_frequency() == doctest::Approx(6.0));
}

TEST_CASE("annihilating the vacuum gives the flagged zero vector") {
  const auto vac = FockVector::basis(group(2), 8, 0);
  const auto out = apply_annihilate_n(vac);
  CHECK(out.is_zero());
  CHECK(out.norm_squared() == 0.0);
}

TEST_CASE("b_2 |2> = sqrt(2) |0>") {
  const auto s = FockVector::basis(group(2), 8, 2);
  const auto out = apply_annihilate_n(s);
  CHECK(out.amplitude(0).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(out.norm_squared() == doctest::Approx(2.0));
}

TEST_CASE("b_3 on (|3>+|6>)/sqrt(2), against the dense-matrix route") {
  const auto g = group(3);
  std::vector<std::complex<double>> amps(13, 0.0);
  amps[3] = 1.0;
  amps[6] = 1.0;
  const auto s = FockVector::from_amplitudes(g, 12, amps);
  const auto out = apply_annihilate_n(s);
  CHECK(out.amplitude(0).real() == doctest::Approx(std::sqrt(3.0) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(out.amplitude(3).real() == doctest::Approx(std::sqrt(6.0) / std::sqrt(2.0)).epsilon(1e-14));

  const auto mat = dense_matrix({g, LadderKind::annihilate}, 12);
  const Eigen::VectorXcd expect = mat * as_vector(s);
  CHECK((expect - as_vector(out)).norm() <= 1e-14);
}

TEST_CASE("creation examples") {
  SUBCASE("b_2† |0> = sqrt(2) |2>") {
    const auto out = apply_create_n(FockVector::basis(group(2), 8, 0));
    CHECK(out.amplitude(2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("N = 1 reduces to the textbook ladder") {
    for (int n = 0; n <= 6; ++n) {
      const auto out = apply_create_n(FockVector::basis(group(1), 8, n, false));
      CHECK(out.amplitude(n + 1).real() == doctest::Approx(std::sqrt(n + 1.0)).epsilon(1e-15));
    }
  }
  SUBCASE("b_4† |4> = sqrt(8) |8>, matching the dense route") {
    const auto g = group(4);
    const auto s = FockVector::basis(g, 8, 4);
    const auto out = apply_create_n(s);
    CHECK(out.amplitude(8).real() == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
    const Eigen::VectorXcd expect = dense_matrix({g, LadderKind::create}, 8) * as_vector(s);
    CHECK((expect - as_vector(out)).norm() <= 1e-14);
  }
}

TEST_CASE("creation past the truncation is a named hard error") {
  const auto s = FockVector::basis(group(2), 9, 8);
  try {
    apply_create_n(s);
    FAIL("expected truncation_error");
  } catch (const truncation_error& e) {
    CHECK(e.occupation() == 8);
    CHECK(std::string(e.what()).find("8") != std::string::npos);
  }
}

TEST_CASE("dense matrices") {
  SUBCASE("standard annihilator at truncation 2") {
    const auto m = dense_matrix({group(1), LadderKind::annihilate}, 2);
    CHECK(m(0, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("b_2 at truncation 4 has exactly the three expected entries") {
    const auto m = dense_matrix({group(2), LadderKind::annihilate}, 4);
    CHECK(m(0, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m(1, 3).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(m(2, 4).real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m.cwiseAbs().sum() ==
          doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0) + 2.0).epsilon(1e-15));
  }
  SUBCASE("adjoint pair identity is exact for N <= 8, truncation <= 64") {
    for (int n = 1; n <= 8; ++n) {
      for (int trunc : {n, 16, 64}) {
        const auto a = dense_matrix({group(n), LadderKind::annihilate}, trunc);
        const auto c = dense_matrix({group(n), LadderKind::create}, trunc);
        CHECK((c - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("commutator defect vanishes on the physical-sector interior") {
  for (int n : {1, 2, 3, 5, 8}) {
    for (int trunc : {2 * n, 16 * n, 64}) {
      if (trunc < 2 * n) continue;
      const auto defect = commutator_defect(n, trunc);
      const int sector = trunc / n + 1;
      REQUIRE(defect.rows() == sector);
      // interior: occupation s*n <= trunc - n
      const int interior = (trunc - n) / n + 1;
      const double interior_max =
          defect.topLeftCorner(interior, interior).cwiseAbs().maxCoeff();
      CHECK(interior_max <= 1e-12);
      // the truncation row must deviate: the creator cannot leave the space
      CHECK(std::abs(defect(sector - 1, sector - 1)) > 0.5);
    }
  }
}

TEST_CASE("norm law: |b†|n>|^2 - |b|n>|^2 = N for n >= N") {
  for (int n_op : {1, 2, 3, 5, 8}) {
    for (int occ = n_op; occ <= 40; occ += n_op) {
      const auto s = FockVector::basis(group(n_op), 64, occ);
      const double grow = apply_create_n(s).norm_squared();
      const double shrink = apply_annihilate_n(s).norm_squared();
      CHECK(grow - shrink == doctest::Approx(static_cast<double>(n_op)).epsilon(1e-13));
    }
  }
}

TEST_CASE("physical sector is preserved by both ladder operators") {
  // deterministic LCG-driven random sector states
  unsigned long long seed = 0x9e3779b97f4a7c15ULL;
  const auto next = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>((seed >> 33) & 0xffffff) / double(0xffffff) - 0.5;
  };
  for (int n_op : {2, 3, 5}) {
    const auto g = group(n_op);
    const int trunc = 8 * n_op;
    std::vector<std::complex<double>> amps(trunc + 1, 0.0);
    for (int occ = 0; occ + n_op <= trunc; occ += n_op) amps[occ] = {next(), next()};
    const auto s = FockVector::from_amplitudes(g, trunc, amps, true);
    for (const auto& out : {apply_annihilate_n(s), apply_create_n(s)}) {
      for (int occ = 0; occ <= trunc; ++occ) {
        if (occ % n_op != 0) CHECK(std::abs(out.amplitude(occ)) == 0.0);
      }
    }
  }
}

TEST_CASE("sector violations are rejected at construction") {
  std::vector<std::complex<double>> amps(9, 0.0);
  amps[3] = 1.0;  // not a multiple of 2
  CHECK_THROWS_WITH_AS(FockVector::from_amplitudes(group(2), 8, amps, true),
                       doctest::Contains("occupation 3"), std::invalid_argument);
  CHECK_NOTHROW(FockVector::from_amplitudes(group(2), 8, amps, false));
}

TEST_CASE("number and energy") {
  const double hw = PhysicalConstants::hbar;  // omega = 1 in these groups
  SUBCASE("vacuum of an N = 2 group carries one quantum of zero point") {
    const auto r = number_and_energy(FockVector::basis(group(2), 8, 0));
    CHECK(r.occupation == 0.0);
    CHECK(r.energy_j == doctest::Approx(hw).epsilon(1e-15));
  }
  SUBCASE("|N> has energy hbar omega (N + N/2)") {
    for (int n : {1, 2, 3, 5, 8}) {
      const auto r = number_and_energy(FockVector::basis(group(n), 3 * n, n));
      CHECK(r.occupation == doctest::Approx(static_cast<double>(n)));
      CHECK(r.energy_j == doctest::Approx(hw * (n + 0.5 * n)).epsilon(1e-14));
    }
  }
  SUBCASE("standard oscillator zero point at N = 1") {
    const auto r = number_and_energy(FockVector::basis(group(1), 4, 0));
    CHECK(r.energy_j == doctest::Approx(0.5 * hw).epsilon(1e-15));
  }
  SUBCASE("unnormalized states are rejected") {
    const auto s = FockVector::raw(group(1), 4, {{0.5, 0.0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}});
    CHECK_THROWS_AS(number_and_energy(s), std::invalid_argument);
  }
}
