#pragma once

#include <cmath>
#include <vector>

#include "scatlab/core.hpp"

namespace scatlab {

// Spherical Bessel functions at positive real argument.
//
// j_l: Miller's downward recurrence (stable for all l, x), normalized against
// the closed forms of j_0 / j_1. y_l: upward recurrence (the dominant
// direction). h_l^{(1)} = j_l + i y_l.
inline void spherical_jy_table(int lmax, double x, std::vector<double>& j,
                               std::vector<double>& y) {
  if (x <= 0.0) throw validation_error("spherical Bessel: need x > 0");
  if (lmax < 0) throw validation_error("spherical Bessel: need l >= 0");
  j.assign(lmax + 1, 0.0);
  y.assign(lmax + 1, 0.0);

  double sx = std::sin(x), cx = std::cos(x);
  double j0 = sx / x;
  double j1 = sx / (x * x) - cx / x;

  if (lmax == 0) {
    j[0] = j0;
  } else {
    int start = lmax + 30 + static_cast<int>(1.3 * x);
    double fp = 0.0;        // f_{l+1}
    double fc = 1e-200;     // f_l, arbitrary seed
    std::vector<double> f(lmax + 1, 0.0);
    for (int l = start; l >= 1; --l) {
      double fm = (2.0 * l + 1.0) / x * fc - fp;
      fp = fc;
      fc = fm;
      if (std::abs(fc) > 1e250) {  // rescale to dodge overflow
        fc *= 1e-250;
        fp *= 1e-250;
        for (int i = l; i <= lmax; ++i) f[i] *= 1e-250;
      }
      if (l - 1 <= lmax) f[l - 1] = fc;
    }
    // normalize by whichever closed form is better conditioned
    double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / f[0] : j1 / f[1];
    for (int l = 0; l <= lmax; ++l) j[l] = f[l] * scale;
  }

  y[0] = -cx / x;
  if (lmax >= 1) y[1] = -cx / (x * x) - sx / x;
  for (int l = 2; l <= lmax; ++l)
    y[l] = (2.0 * l - 1.0) / x * y[l - 1] - y[l - 2];
}

inline double spherical_bessel_j(int l, double x) {
  std::vector<double> j, y;
  spherical_jy_table(l, x, j, y);
  return j[l];
}

inline double spherical_bessel_y(int l, double x) {
  std::vector<double> j, y;
  spherical_jy_table(l, x, j, y);
  return y[l];
}

inline cplx spherical_hankel_h1(int l, double x) {
  std::vector<double> j, y;
  spherical_jy_table(l, x, j, y);
  return cplx(j[l], y[l]);
}

// f_l'(x) from neighbours: f_l' = f_{l-1} - (l+1)/x f_l (l >= 1);
// f_0' = -f_1.
inline double sph_bessel_derivative(int l, double x,
                                    const std::vector<double>& f) {
  if (l == 0) return -f[1];
  return f[l - 1] - (l + 1.0) / x * f[l];
}

// Large-order form of h_l^{(1)}(r) on r >= 1:
//   i * sqrt(1/((l+1/2) r)) * ((2l+1)/(e r))^{(2l+1)/2},
// evaluated through logs so large l stays representable.
inline cplx hankel_large_order_asymptotic(int l, double r) {
  if (l < 1) throw validation_error("hankel asymptotic: need l >= 1");
  if (r < 1.0) throw validation_error("hankel asymptotic: need r >= 1");
  double lp = l + 0.5;
  double log_mag = lp * std::log((2.0 * l + 1.0) / (std::exp(1.0) * r)) -
                   0.5 * std::log(lp * r);
  return cplx(0.0, std::exp(log_mag));
}

}  // namespace scatlab
