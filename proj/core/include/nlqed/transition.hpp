#pragma once

#include <complex>
#include <set>
#include <vector>

namespace nlqed {

// Hydrogenic orbital (n, l, m) with the radial function sampled on a shared
// log-distributed Gauss quadrature grid in Bohr radii. Values are immutable
// after construction and the factory enforces grid normalization to 1e-8, so
// downstream integrals can trust the samples.
class OrbitalState {
 public:
  static OrbitalState hydrogenic(int principal_n, int l, int m, double effective_charge = 1.0,
                                 int grid_points = 2048, double r_max_bohr = 150.0);

  int principal_n() const { return principal_n_; }
  int l() const { return l_; }
  int m() const { return m_; }
  double effective_charge() const { return effective_charge_; }

  const std::vector<double>& radial_r() const { return r_; }          // Bohr radii
  const std::vector<double>& radial_value() const { return value_; }  // R(r)
  // Weights w_i such that integral f(r) dr ~= sum_i w_i f(r_i).
  const std::vector<double>& radial_weight() const { return weight_; }

  double norm_squared() const;  // integral R^2 r^2 dr on the grid

 private:
  OrbitalState(int n, int l, int m, double z_eff, std::vector<double> r,
               std::vector<double> value, std::vector<double> weight);

  int principal_n_;
  int l_;
  int m_;
  double effective_charge_;
  std::vector<double> r_;
  std::vector<double> value_;
  std::vector<double> weight_;
};

// Legendre coefficients a_j of the polarization-vector expansion. The default
// is flat, a_j = 1 for j = 0..8, which keeps every orbital momentum l <= 8
// coupled; lowest_order() keeps only a_0.
class PolarizationExpansion {
 public:
  PolarizationExpansion();
  explicit PolarizationExpansion(std::vector<double> coefficients);
  static PolarizationExpansion lowest_order();

  int j_max() const { return static_cast<int>(coefficients_.size()) - 1; }
  // a_j, zero outside the stored range.
  double coefficient(int j) const;
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  std::vector<double> coefficients_;
};

enum class AngularMethod {
  reduction,   // closed-form orthogonality reduction of the kernel (default)
  quadrature,  // numerical integration over the sphere pair, with residual check
};

struct AngularOptions {
  AngularMethod method = AngularMethod::reduction;
  int theta_nodes = 48;  // Gauss-Legendre nodes per polar angle (quadrature path)
  int phi_nodes = 64;    // uniform azimuthal nodes (quadrature path)
  // Also admit l_f = l_i - N. Off by default: the implemented transfer kernel
  // raises only.
  bool include_lowering = false;
};

// Angular part of the order-N transition matrix element between orbital
// momenta (l_i, m_i) and (l_f, m_f).
//
// The per-electron kernel between the final-state direction r and the
// initial-state direction r' is
//
//   K_N(r, r') = sum_j a_j [ (1 + u) P_j(u) + B_jN(r, r') ],   u = r.r'
//
// where the (1+u)P_j part comes from dotting the electron direction into the
// pair factor of the polarization expansion (it is diagonal in l and couples
// l_f = l_i only), and
//
//   B_jN = 4 pi / sqrt((2j+1)(2j+2N+1)) * sum_m Y_{j+N,m}(r) Y*_{j,m}(r')
//
// is the order-N angular-momentum transfer kernel that carries the N
// absorbed photons' angular momentum onto the electron, coupling exactly
// l_f = l_i + N. Every term is azimuthally symmetric (a function of the
// relative azimuth only), so m is conserved. The vanishing of the integral
// for l_f outside {l_i, l_i + N} is a property of this kernel; the
// quadrature path demonstrates it numerically, the reduction path evaluates
// the same kernel through orthogonality.
//
// With include_lowering set, the adjoint transfer term is added and
// l_f = l_i - N >= 0 becomes reachable as well.
double angular_integral(int l_i, int m_i, int l_f, int m_f, int order_n,
                        const PolarizationExpansion& expansion, const AngularOptions& opts = {});

// Final orbital momenta reachable from l_i at order N: {l_i, l_i + N}, plus
// l_i - N when the lowering flag is set and non-negative.
std::set<int> allowed_final_l(int l_i, int order_n, bool include_lowering = false);

struct TransitionAmplitude {
  std::complex<double> value;
  double intensity;  // W/m^2
  int order_n;
};

// integral R_bra(r) r R_ket(r) r^2 dr on the shared grid, Bohr units.
double radial_dipole_integral(const OrbitalState& bra, const OrbitalState& ket);
// integral R_bra(r) R_ket(r) r^2 dr (spectator-electron overlap factor).
double radial_overlap(const OrbitalState& bra, const OrbitalState& ket);

// Order-N dipole transition matrix element between product states of one or
// two orbitals: value = sqrt(2 pi I)/c * sum over electrons of
// (radial dipole integral * angular integral * spectator overlaps).
// |value|^2 is the absorption probability up to a constant factor and scales
// as I^1 for every order N.
TransitionAmplitude matrix_element(const std::vector<OrbitalState>& psi_i,
                                   const std::vector<OrbitalState>& psi_f,
                                   const PolarizationExpansion& expansion, double intensity,
                                   int order_n, const AngularOptions& opts = {});

// |value|^2. Proportional to intensity for fixed geometry, for every order N.
double absorption_probability(const TransitionAmplitude& amp);

}  // namespace nlqed
