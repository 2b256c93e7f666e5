#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nlqed {

// A group of N phase-correlated field modes sharing one ladder-operator pair.
// All photons in the group have the same per-photon angular frequency omega;
// the group as a whole oscillates at N*omega.
struct ModeGroup {
  std::string group_id;
  int correlation_order;    // N: photons created/annihilated per operator application
  double omega;             // rad/s, per photon
  std::string polarization_label;

  ModeGroup(std::string id, int order_n, double omega_rad_s, std::string polarization = "lin");

  double group_frequency() const { return correlation_order * omega; }
};

// Raised when a creation would push amplitude above the truncation. Creation
// past the boundary is a hard error rather than a silent clip: clipped
// amplitude corrupts operator identities without leaving a trace.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(int occupation, int order_n, int truncation);
  int occupation() const { return occupation_; }

 private:
  int occupation_;
};

// Complex amplitude vector over the truncated occupation basis |0>, |1>, ...,
// |n_trunc> of one mode group. By default the support is restricted to the
// physical sector: occupations that are multiples of N, since photons of a
// correlated group arrive N at a time. The general sector can be requested
// for algebra testing.
//
// Values are immutable after construction; operator application returns a new
// vector and does not normalize (ladder operators scale the norm).
class FockVector {
 public:
  // Basis state |occupation>.
  static FockVector basis(const ModeGroup& group, int truncation, int occupation,
                          bool physical_sector_only = true);

  // Normalized state from raw amplitudes (index = occupation). Throws if the
  // input has zero norm.
  static FockVector from_amplitudes(const ModeGroup& group, int truncation,
                                    std::vector<std::complex<double>> amplitudes,
                                    bool physical_sector_only = true);

  // As given, no normalization. Operator results are built through this.
  static FockVector raw(const ModeGroup& group, int truncation,
                        std::vector<std::complex<double>> amplitudes,
                        bool physical_sector_only = false);

  const ModeGroup& group() const { return group_; }
  int truncation() const { return truncation_; }
  bool physical_sector_only() const { return physical_sector_only_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(int occupation) const;

  double norm_squared() const;
  // Zero-norm indicator: set when an annihilation removed all support.
  bool is_zero() const;

 private:
  FockVector(ModeGroup group, int truncation, std::vector<std::complex<double>> amplitudes,
             bool physical_sector_only);

  ModeGroup group_;
  int truncation_;
  std::vector<std::complex<double>> amplitudes_;
  bool physical_sector_only_;
};

enum class LadderKind { annihilate, create };

// The N-photon ladder operator b_N or b_N† of one mode group.
struct LadderN {
  ModeGroup group;
  LadderKind kind;
};

// b_N: each component |n> with n >= N contributes sqrt(n) |n-N>. Occupations
// below N are annihilated to the zero vector (a correlated group cannot be
// split), so the result may have zero norm; see FockVector::is_zero.
FockVector apply_annihilate_n(const FockVector& state);

// b_N†: each component |n> contributes sqrt(n+N) |n+N>. Throws
// truncation_error naming the offending occupation if any occupied component
// would leave the truncated space.
FockVector apply_create_n(const FockVector& state);

// Dense (truncation+1)^2 matrix of the operator over the full occupation
// basis; entry (m, n) = <m|op|n>. Creation columns with n + N > truncation
// are zero here (the matrix cannot hold the out-of-space result; the apply_*
// form throws instead). dense(create) is exactly the conjugate transpose of
// dense(annihilate).
Eigen::MatrixXcd dense_matrix(const LadderN& op, int truncation);

// [b_N, b_N†] - N*I evaluated on the physical sector {0, N, 2N, ...} up to
// the truncation; row/column s corresponds to occupation s*N. On the general
// sector the sub-N occupations 0 < n < N break the identity (their
// annihilation is defined as zero), so the commutation relation is a
// statement about the physical sector. Rows with occupation <= truncation - N
// are exactly zero; the last row deviates because creation falls outside the
// truncated space.
Eigen::MatrixXcd commutator_defect(int correlation_order, int truncation);

struct NumberEnergy {
  double occupation;  // <n>
  double energy_j;    // (hbar*omega/2) <b_N b_N† + b_N† b_N>
};

// Expected occupation and field energy of a normalized state. For a basis
// state |n> with n >= N or n = 0 the energy is hbar*omega*(n + N/2); the
// structured vacuum of an order-N group carries N/2 quanta of zero point.
NumberEnergy number_and_energy(const FockVector& state);

}  // namespace nlqed
