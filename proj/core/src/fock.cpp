#include "nlqed/fock.hpp"

#include <cmath>
#include <utility>

#include "nlqed/constants.hpp"

namespace nlqed {

ModeGroup::ModeGroup(std::string id, int order_n, double omega_rad_s, std::string polarization)
    : group_id(std::move(id)),
      correlation_order(order_n),
      omega(omega_rad_s),
      polarization_label(std::move(polarization)) {
  if (correlation_order < 1) {
    throw std::invalid_argument("ModeGroup: correlation_order must be >= 1, got " +
                                std::to_string(correlation_order));
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("ModeGroup: omega must be > 0");
  }
}

truncation_error::truncation_error(int occupation, int order_n, int truncation)
    : std::runtime_error("creation from occupation " + std::to_string(occupation) +
                         " would reach " + std::to_string(occupation + order_n) +
                         ", beyond truncation " + std::to_string(truncation)),
      occupation_(occupation) {}

FockVector::FockVector(ModeGroup group, int truncation,
                       std::vector<std::complex<double>> amplitudes, bool physical_sector_only)
    : group_(std::move(group)),
      truncation_(truncation),
      amplitudes_(std::move(amplitudes)),
      physical_sector_only_(physical_sector_only) {
  if (truncation_ < 0) {
    throw std::invalid_argument("FockVector: truncation must be >= 0");
  }
  if (static_cast<int>(amplitudes_.size()) != truncation_ + 1) {
    throw std::invalid_argument("FockVector: amplitude vector must have truncation+1 entries");
  }
  if (physical_sector_only_) {
    const int n_group = group_.correlation_order;
    for (int n = 0; n <= truncation_; ++n) {
      if (n % n_group != 0 && amplitudes_[n] != std::complex<double>(0.0, 0.0)) {
        throw std::invalid_argument("FockVector: occupation " + std::to_string(n) +
                                    " is not a multiple of N=" + std::to_string(n_group) +
                                    " but carries amplitude (physical sector requested)");
      }
    }
  }
}

FockVector FockVector::basis(const ModeGroup& group, int truncation, int occupation,
                             bool physical_sector_only) {
  if (occupation < 0 || occupation > truncation) {
    throw std::invalid_argument("FockVector::basis: occupation " + std::to_string(occupation) +
                                " outside [0, " + std::to_string(truncation) + "]");
  }
  std::vector<std::complex<double>> amps(truncation + 1, {0.0, 0.0});
  amps[occupation] = {1.0, 0.0};
  return FockVector(group, truncation, std::move(amps), physical_sector_only);
}

FockVector FockVector::from_amplitudes(const ModeGroup& group, int truncation,
                                       std::vector<std::complex<double>> amplitudes,
                                       bool physical_sector_only) {
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  if (n2 <= 0.0) {
    throw std::invalid_argument("FockVector::from_amplitudes: zero-norm input cannot be normalized");
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes) a *= inv;
  return FockVector(group, truncation, std::move(amplitudes), physical_sector_only);
}

FockVector FockVector::raw(const ModeGroup& group, int truncation,
                           std::vector<std::complex<double>> amplitudes,
                           bool physical_sector_only) {
  return FockVector(group, truncation, std::move(amplitudes), physical_sector_only);
}

std::complex<double> FockVector::amplitude(int occupation) const {
  if (occupation < 0 || occupation > truncation_) {
    throw std::invalid_argument("FockVector::amplitude: occupation out of range");
  }
  return amplitudes_[occupation];
}

double FockVector::norm_squared() const {
  double n2 = 0.0;
  for (const auto& a : amplitudes_) n2 += std::norm(a);
  return n2;
}

bool FockVector::is_zero() const { return norm_squared() == 0.0; }

FockVector apply_annihilate_n(const FockVector& state) {
  const int order_n = state.group().correlation_order;
  const int trunc = state.truncation();
  std::vector<std::complex<double>> out(trunc + 1, {0.0, 0.0});
  for (int n = order_n; n <= trunc; ++n) {
    const auto a = state.amplitudes()[n];
    if (a != std::complex<double>(0.0, 0.0)) {
      out[n - order_n] += std::sqrt(static_cast<double>(n)) * a;
    }
  }
  return FockVector::raw(state.group(), trunc, std::move(out), state.physical_sector_only());
}

FockVector apply_create_n(const FockVector& state) {
  const int order_n = state.group().correlation_order;
  const int trunc = state.truncation();
  std::vector<std::complex<double>> out(trunc + 1, {0.0, 0.0});
  for (int n = 0; n <= trunc; ++n) {
    const auto a = state.amplitudes()[n];
    if (a == std::complex<double>(0.0, 0.0)) continue;
    if (n + order_n > trunc) {
      throw truncation_error(n, order_n, trunc);
    }
    out[n + order_n] += std::sqrt(static_cast<double>(n + order_n)) * a;
  }
  return FockVector::raw(state.group(), trunc, std::move(out), state.physical_sector_only());
}

Eigen::MatrixXcd dense_matrix(const LadderN& op, int truncation) {
  const int order_n = op.group.correlation_order;
  if (truncation < order_n) {
    throw std::invalid_argument("dense_matrix: truncation must be >= correlation order");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(truncation + 1, truncation + 1);
  if (op.kind == LadderKind::annihilate) {
    for (int n = order_n; n <= truncation; ++n) {
      m(n - order_n, n) = std::sqrt(static_cast<double>(n));
    }
  } else {
    for (int n = 0; n + order_n <= truncation; ++n) {
      m(n + order_n, n) = std::sqrt(static_cast<double>(n + order_n));
    }
  }
  return m;
}

Eigen::MatrixXcd commutator_defect(int correlation_order, int truncation) {
  if (correlation_order < 1) {
    throw std::invalid_argument("commutator_defect: correlation order must be >= 1");
  }
  if (truncation < 2 * correlation_order) {
    throw std::invalid_argument("commutator_defect: truncation must be >= 2N");
  }
  // Ladder matrices on the physical sector: row/col s <-> occupation s*N.
  const int sector_size = truncation / correlation_order + 1;
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(sector_size, sector_size);
  for (int s = 1; s < sector_size; ++s) {
    lower(s - 1, s) = std::sqrt(static_cast<double>(s * correlation_order));
  }
  Eigen::MatrixXcd raise = lower.adjoint();
  Eigen::MatrixXcd defect = lower * raise - raise * lower -
                            static_cast<double>(correlation_order) *
                                Eigen::MatrixXcd::Identity(sector_size, sector_size);
  return defect;
}

NumberEnergy number_and_energy(const FockVector& state) {
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument("number_and_energy: state must be normalized (norm^2 = " +
                                std::to_string(n2) + ")");
  }
  const int order_n = state.group().correlation_order;
  // <b b†> and <b† b> evaluated termwise; these are quadratic forms diagonal
  // in the occupation basis, so no truncated intermediate state is needed.
  double occupation = 0.0;
  double bbdag = 0.0;
  double bdagb = 0.0;
  for (int n = 0; n <= state.truncation(); ++n) {
    const double w = std::norm(state.amplitudes()[n]);
    if (w == 0.0) continue;
    occupation += w * n;
    bbdag += w * (n + order_n);
    if (n >= order_n) bdagb += w * n;
  }
  const double energy = 0.5 * PhysicalConstants::hbar * state.group().omega * (bbdag + bdagb);
  return {occupation, energy};
}

}  // namespace nlqed
