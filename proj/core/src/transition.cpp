#include "nlqed/transition.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "nlqed/constants.hpp"
#include "gauss_legendre.hpp"

namespace nlqed {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kFourPi = 4.0 * kPi;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Generalized Laguerre L^(alpha)_k(x) by upward recurrence.
double laguerre(int k, int alpha, double x) {
  if (k == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int i = 1; i < k; ++i) {
    const double lp1 = ((2.0 * i + 1.0 + alpha - x) * l - (i + alpha) * lm1) / (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

// Normalized theta-part of the spherical harmonic: Y_lm = S_lm(cos theta) e^{i m phi),
// m >= 0, Condon-Shortley phase included. Fills table[l][m] for l <= l_top, m <= l.
std::vector<std::vector<double>> assoc_legendre_table(int l_top, double x) {
  std::vector<std::vector<double>> s(l_top + 1);
  for (int l = 0; l <= l_top; ++l) s[l].assign(l + 1, 0.0);
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  s[0][0] = std::sqrt(1.0 / kFourPi);
  for (int m = 1; m <= l_top; ++m) {
    s[m][m] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sx * s[m - 1][m - 1];
  }
  for (int m = 0; m < l_top; ++m) {
    s[m + 1][m] = std::sqrt(2.0 * m + 3.0) * x * s[m][m];
  }
  for (int m = 0; m <= l_top; ++m) {
    for (int l = m + 2; l <= l_top; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
      const double b =
          std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      s[l][m] = a * (x * s[l - 1][m] - b * s[l - 2][m]);
    }
  }
  return s;
}

// S_lm for signed m.
double signed_s(const std::vector<std::vector<double>>& table, int l, int m) {
  const int am = std::abs(m);
  const double v = table[l][am];
  return (m < 0 && (am % 2 == 1)) ? -v : v;
}

// Transfer-kernel normalization 4 pi / sqrt((2j+1)(2j+2N+1)).
double transfer_coeff(int j, int order_n) {
  return kFourPi / std::sqrt((2.0 * j + 1.0) * (2.0 * (j + order_n) + 1.0));
}

void validate_angular_args(int l_i, int m_i, int l_f, int m_f, int order_n) {
  if (l_i < 0 || l_f < 0) throw std::invalid_argument("angular_integral: l must be >= 0");
  if (std::abs(m_i) > l_i || std::abs(m_f) > l_f) {
    throw std::invalid_argument("angular_integral: |m| must be <= l");
  }
  if (order_n < 1) throw std::invalid_argument("angular_integral: order must be >= 1");
}

// Closed-form evaluation through orthogonality of the kernel's harmonic content.
double angular_reduction(int l_i, int m_i, int l_f, int m_f, int order_n,
                         const PolarizationExpansion& exp, bool include_lowering) {
  if (m_f != m_i) return 0.0;
  if (l_f == l_i) {
    // Coefficient of P_l in sum_j a_j (1+u) P_j(u):
    //   a_l + a_{l-1} l/(2l-1) + a_{l+1} (l+1)/(2l+3).
    const int l = l_i;
    double c = exp.coefficient(l);
    if (l >= 1) c += exp.coefficient(l - 1) * l / (2.0 * l - 1.0);
    c += exp.coefficient(l + 1) * (l + 1.0) / (2.0 * l + 3.0);
    return kFourPi * c / (2.0 * l + 1.0);
  }
  if (l_f == l_i + order_n) {
    return exp.coefficient(l_i) * transfer_coeff(l_i, order_n);
  }
  if (include_lowering && l_f == l_i - order_n) {
    return exp.coefficient(l_f) * transfer_coeff(l_f, order_n);
  }
  return 0.0;
}

double angular_quadrature_once(int l_i, int m_i, int l_f, int m_f, int order_n,
                               const PolarizationExpansion& exp, bool include_lowering,
                               int n_theta, int n_phi) {
  const int j_max = exp.j_max();
  const int l_top = std::max({l_f, l_i, j_max + order_n});

  const auto gl = detail::gauss_legendre(n_theta);
  std::vector<std::vector<std::vector<double>>> s_tab(n_theta);
  for (int a = 0; a < n_theta; ++a) s_tab[a] = assoc_legendre_table(l_top, gl.node[a]);

  const double h = 2.0 * kPi / n_phi;
  std::vector<double> cos_m_dphi(static_cast<size_t>(n_phi) * (j_max + 1));
  std::vector<double> cphi(n_phi), sphi(n_phi);
  for (int d = 0; d < n_phi; ++d) {
    const double dphi = h * d;
    cphi[d] = std::cos(dphi);
    sphi[d] = std::sin(dphi);
    for (int m = 0; m <= j_max; ++m) cos_m_dphi[static_cast<size_t>(d) * (j_max + 1) + m] = std::cos(m * dphi);
  }

  // Azimuthal factor from the phi' sum: 2 pi when m_i == m_f, zero otherwise
  // (discrete orthogonality on the uniform grid); evaluated numerically.
  std::complex<double> g(0.0, 0.0);
  for (int e = 0; e < n_phi; ++e) {
    const double phi = h * e;
    g += h * std::complex<double>(std::cos((m_i - m_f) * phi), std::sin((m_i - m_f) * phi));
  }

  std::complex<double> acc(0.0, 0.0);
  for (int a = 0; a < n_theta; ++a) {
    const double xa = gl.node[a];
    const double sa = std::sqrt(std::max(0.0, 1.0 - xa * xa));
    const double sf = signed_s(s_tab[a], l_f, m_f);
    for (int b = 0; b < n_theta; ++b) {
      const double xb = gl.node[b];
      const double sb = std::sqrt(std::max(0.0, 1.0 - xb * xb));
      const double si = signed_s(s_tab[b], l_i, m_i);
      const double wab = gl.weight[a] * gl.weight[b] * sf * si;
      if (wab == 0.0) continue;

      std::complex<double> q(0.0, 0.0);
      for (int d = 0; d < n_phi; ++d) {
        const double u = xa * xb + sa * sb * cphi[d];
        // Diagonal part: (1+u) sum_j a_j P_j(u), Legendre recurrence in place.
        double p0 = 1.0, p1 = u;
        double leg = exp.coefficient(0);
        if (j_max >= 1) leg += exp.coefficient(1) * u;
        for (int j = 2; j <= j_max; ++j) {
          const double p2 = ((2.0 * j - 1.0) * u * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
          leg += exp.coefficient(j) * p1;
        }
        double kernel = (1.0 + u) * leg;
        // Order-N transfer part.
        const double* cmd = &cos_m_dphi[static_cast<size_t>(d) * (j_max + 1)];
        for (int j = 0; j <= j_max; ++j) {
          const double aj = exp.coefficient(j);
          if (aj == 0.0) continue;
          const double cjn = transfer_coeff(j, order_n);
          double sum = s_tab[a][j + order_n][0] * s_tab[b][j][0];
          for (int m = 1; m <= j; ++m) {
            sum += 2.0 * s_tab[a][j + order_n][m] * s_tab[b][j][m] * cmd[m];
          }
          if (include_lowering) {
            double low = s_tab[a][j][0] * s_tab[b][j + order_n][0];
            for (int m = 1; m <= j; ++m) {
              low += 2.0 * s_tab[a][j][m] * s_tab[b][j + order_n][m] * cmd[m];
            }
            sum += low;
          }
          kernel += aj * cjn * sum;
        }
        // e^{-i m_f dphi} factor of the relative-azimuth integral.
        const double cd = (m_f == 0) ? 1.0 : std::cos(m_f * h * d);
        const double sd = (m_f == 0) ? 0.0 : -std::sin(m_f * h * d);
        q += std::complex<double>(kernel * cd, kernel * sd);
      }
      acc += wab * h * q;
    }
  }
  return (acc * g).real();
}

double angular_quadrature(int l_i, int m_i, int l_f, int m_f, int order_n,
                          const PolarizationExpansion& exp, const AngularOptions& opts) {
  const int min_phi = 2 * std::max({exp.j_max(), std::abs(m_i), std::abs(m_f)}) + 2;
  if (opts.phi_nodes < min_phi) {
    throw std::invalid_argument("angular_integral: phi_nodes must be >= " + std::to_string(min_phi));
  }
  if (opts.theta_nodes < 8) {
    throw std::invalid_argument("angular_integral: theta_nodes must be >= 8");
  }
  const double v1 = angular_quadrature_once(l_i, m_i, l_f, m_f, order_n, exp,
                                            opts.include_lowering, opts.theta_nodes, opts.phi_nodes);
  // Residual estimate against a refined rule; refinement upward also catches
  // node counts too small for the integrand's polynomial degree.
  const double v2 = angular_quadrature_once(l_i, m_i, l_f, m_f, order_n, exp,
                                            opts.include_lowering, opts.theta_nodes + 8,
                                            opts.phi_nodes + 8);
  const double residual = std::abs(v1 - v2);
  if (residual > 1e-8 * std::max(1.0, std::abs(v1))) {
    throw std::runtime_error("angular_integral: quadrature did not converge, residual " +
                             std::to_string(residual));
  }
  return v1;
}

}  // namespace

OrbitalState::OrbitalState(int n, int l, int m, double z_eff, std::vector<double> r,
                           std::vector<double> value, std::vector<double> weight)
    : principal_n_(n),
      l_(l),
      m_(m),
      effective_charge_(z_eff),
      r_(std::move(r)),
      value_(std::move(value)),
      weight_(std::move(weight)) {}

OrbitalState OrbitalState::hydrogenic(int principal_n, int l, int m, double effective_charge,
                                      int grid_points, double r_max_bohr) {
  if (principal_n < 1) throw std::invalid_argument("OrbitalState: principal_n must be >= 1");
  if (l < 0 || l >= principal_n) {
    throw std::invalid_argument("OrbitalState: requires 0 <= l < principal_n");
  }
  if (std::abs(m) > l) throw std::invalid_argument("OrbitalState: requires |m| <= l");
  if (!(effective_charge > 0.0)) {
    throw std::invalid_argument("OrbitalState: effective charge must be > 0");
  }
  if (grid_points < 64) throw std::invalid_argument("OrbitalState: grid too small");
  if (!(r_max_bohr > 1.0)) throw std::invalid_argument("OrbitalState: r_max must exceed 1 Bohr");

  // Gauss-Legendre in log r: nodes cluster where hydrogenic functions vary.
  const double u_min = std::log(1e-6);
  const double u_max = std::log(r_max_bohr);
  const auto gl = detail::gauss_legendre(grid_points);
  std::vector<double> r(grid_points), value(grid_points), weight(grid_points);

  const double z = effective_charge;
  const int n = principal_n;
  const double rho_scale = 2.0 * z / n;
  const double norm = std::sqrt(rho_scale * rho_scale * rho_scale * factorial(n - l - 1) /
                                (2.0 * n * factorial(n + l)));
  for (int i = 0; i < grid_points; ++i) {
    const double u = 0.5 * (u_max - u_min) * gl.node[i] + 0.5 * (u_max + u_min);
    const double ri = std::exp(u);
    r[i] = ri;
    weight[i] = 0.5 * (u_max - u_min) * gl.weight[i] * ri;  // jacobian dr = r du
    const double rho = rho_scale * ri;
    value[i] = norm * std::pow(rho, l) * std::exp(-0.5 * rho) * laguerre(n - l - 1, 2 * l + 1, rho);
  }

  OrbitalState orbital(principal_n, l, m, effective_charge, std::move(r), std::move(value),
                       std::move(weight));
  const double n2 = orbital.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-8) {
    throw std::invalid_argument("OrbitalState: radial function not normalized on the grid (norm^2 = " +
                                std::to_string(n2) + "); enlarge r_max or the grid");
  }
  return orbital;
}

double OrbitalState::norm_squared() const {
  double acc = 0.0;
  for (size_t i = 0; i < r_.size(); ++i) {
    acc += weight_[i] * value_[i] * value_[i] * r_[i] * r_[i];
  }
  return acc;
}

PolarizationExpansion::PolarizationExpansion() : coefficients_(9, 1.0) {}

PolarizationExpansion::PolarizationExpansion(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("PolarizationExpansion: needs at least a_0");
  }
  for (double a : coefficients_) {
    if (!std::isfinite(a)) throw std::invalid_argument("PolarizationExpansion: coefficients must be finite");
  }
}

PolarizationExpansion PolarizationExpansion::lowest_order() {
  return PolarizationExpansion(std::vector<double>{1.0});
}

double PolarizationExpansion::coefficient(int j) const {
  if (j < 0 || j > j_max()) return 0.0;
  return coefficients_[j];
}

double angular_integral(int l_i, int m_i, int l_f, int m_f, int order_n,
                        const PolarizationExpansion& expansion, const AngularOptions& opts) {
  validate_angular_args(l_i, m_i, l_f, m_f, order_n);
  if (opts.method == AngularMethod::reduction) {
    return angular_reduction(l_i, m_i, l_f, m_f, order_n, expansion, opts.include_lowering);
  }
  return angular_quadrature(l_i, m_i, l_f, m_f, order_n, expansion, opts);
}

std::set<int> allowed_final_l(int l_i, int order_n, bool include_lowering) {
  if (l_i < 0) throw std::invalid_argument("allowed_final_l: l_i must be >= 0");
  if (order_n < 1) throw std::invalid_argument("allowed_final_l: order must be >= 1");
  std::set<int> out{l_i, l_i + order_n};
  if (include_lowering && l_i - order_n >= 0) out.insert(l_i - order_n);
  return out;
}

namespace {

void require_shared_grid(const OrbitalState& a, const OrbitalState& b, const char* who) {
  const auto& ra = a.radial_r();
  const auto& rb = b.radial_r();
  const bool same = ra.size() == rb.size() && ra.front() == rb.front() && ra.back() == rb.back();
  if (!same) {
    throw std::invalid_argument(std::string(who) + ": orbitals must share a radial grid");
  }
}

}  // namespace

double radial_dipole_integral(const OrbitalState& bra, const OrbitalState& ket) {
  require_shared_grid(bra, ket, "radial_dipole_integral");
  const auto& r = bra.radial_r();
  const auto& w = bra.radial_weight();
  double acc = 0.0;
  for (size_t i = 0; i < r.size(); ++i) {
    acc += w[i] * bra.radial_value()[i] * ket.radial_value()[i] * r[i] * r[i] * r[i];
  }
  return acc;
}

double radial_overlap(const OrbitalState& bra, const OrbitalState& ket) {
  require_shared_grid(bra, ket, "radial_overlap");
  const auto& r = bra.radial_r();
  const auto& w = bra.radial_weight();
  double acc = 0.0;
  for (size_t i = 0; i < r.size(); ++i) {
    acc += w[i] * bra.radial_value()[i] * ket.radial_value()[i] * r[i] * r[i];
  }
  return acc;
}

TransitionAmplitude matrix_element(const std::vector<OrbitalState>& psi_i,
                                   const std::vector<OrbitalState>& psi_f,
                                   const PolarizationExpansion& expansion, double intensity,
                                   int order_n, const AngularOptions& opts) {
  if (psi_i.size() != psi_f.size()) {
    throw std::invalid_argument("matrix_element: electron counts differ (" +
                                std::to_string(psi_i.size()) + " vs " +
                                std::to_string(psi_f.size()) + ")");
  }
  if (psi_i.empty() || psi_i.size() > 2) {
    throw std::invalid_argument("matrix_element: supports 1 or 2 electrons");
  }
  if (intensity < 0.0) throw std::invalid_argument("matrix_element: intensity must be >= 0");
  for (const auto* states : {&psi_i, &psi_f}) {
    for (const auto& orb : *states) {
      if (std::abs(orb.norm_squared() - 1.0) > 1e-8) {
        throw std::invalid_argument("matrix_element: unnormalized orbital (norm^2 = " +
                                    std::to_string(orb.norm_squared()) + ")");
      }
    }
  }

  const size_t n_el = psi_i.size();
  double sum = 0.0;
  for (size_t e = 0; e < n_el; ++e) {
    double term = radial_dipole_integral(psi_f[e], psi_i[e]) *
                  angular_integral(psi_i[e].l(), psi_i[e].m(), psi_f[e].l(), psi_f[e].m(),
                                   order_n, expansion, opts);
    // Spectator electrons contribute their overlap.
    for (size_t k = 0; k < n_el && term != 0.0; ++k) {
      if (k == e) continue;
      if (psi_f[k].l() != psi_i[k].l() || psi_f[k].m() != psi_i[k].m()) {
        term = 0.0;
      } else {
        term *= radial_overlap(psi_f[k], psi_i[k]);
      }
    }
    sum += term;
  }

  const double prefactor = std::sqrt(2.0 * kPi * intensity) / PhysicalConstants::c;
  return {std::complex<double>(prefactor * sum, 0.0), intensity, order_n};
}

double absorption_probability(const TransitionAmplitude& amp) { return std::norm(amp.value); }

}  // namespace nlqed
