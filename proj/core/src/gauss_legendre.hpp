#pragma once

// Internal: Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration
// on the three-term recurrence. Used for the radial grid and the angular
// quadrature path; not part of the public interface.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlqed::detail {

struct GaussLegendre {
  std::vector<double> node;
  std::vector<double> weight;
};

inline GaussLegendre gauss_legendre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: need at least 2 nodes");
  GaussLegendre out;
  out.node.resize(n);
  out.weight.resize(n);
  const double pi = 3.141592653589793238462643383279502884;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-type initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    out.node[i] = -x;
    out.node[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.weight[i] = w;
    out.weight[n - 1 - i] = w;
  }
  return out;
}

}  // namespace nlqed::detail
