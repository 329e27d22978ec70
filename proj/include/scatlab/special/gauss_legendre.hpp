#pragma once

#include <cmath>
#include <vector>

#include "scatlab/core.hpp"

namespace scatlab {

struct GaussLegendre {
  std::vector<double> nodes;  // ascending in (-1, 1)
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n with the Bonnet recurrence; accurate to
// machine precision for the orders used here (n up to a few hundred).
inline GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw validation_error("gauss_legendre: need n >= 1");
  GaussLegendre out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // refresh dp at the converged node for the weight formula
        p0 = 1.0;
        p1 = x;
        for (int l = 2; l <= n; ++l) {
          double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[i] = -x;
    out.nodes[n - 1 - i] = x;
    out.weights[i] = w;
    out.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    // odd n: the middle node is exactly 0, set it cleanly
    out.nodes[n / 2] = 0.0;
  }
  return out;
}

// Rule for integrals over [a, b].
inline GaussLegendre gauss_legendre_mapped(int n, double a, double b) {
  GaussLegendre g = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = mid + half * g.nodes[i];
    g.weights[i] *= half;
  }
  return g;
}

}  // namespace scatlab
