#pragma once

#include <cmath>
#include <vector>

#include "scatlab/core.hpp"

namespace scatlab {

// P_0..P_L at t. Works for real and complex scalars; the upward recurrence
// tracks the dominant solution, so it is stable on and off [-1, 1].
template <class T>
inline void legendre_sequence(int L, T t, std::vector<T>& P) {
  P.resize(L + 1);
  if (L >= 0) P[0] = T(1);
  if (L >= 1) P[1] = t;
  for (int l = 2; l <= L; ++l)
    P[l] = (double(2 * l - 1) * t * P[l - 1] - double(l - 1) * P[l - 2]) / double(l);
}

inline int legendre_tri_index(int l, int m) { return l * (l + 1) / 2 + m; }

// Fully normalized associated Legendre values Pbar_l^m(ct) for 0 <= m <= l <= L,
// packed triangularly. Normalization: Y_l^m = Pbar_l^m(cos th) e^{i m phi} with
// the Condon-Shortley phase folded in, so that the Y_l^m are orthonormal on S^2.
inline void normalized_legendre_table(int L, double ct, double st,
                                      std::vector<double>& P) {
  P.assign(static_cast<std::size_t>(L + 1) * (L + 2) / 2, 0.0);
  P[0] = 1.0 / std::sqrt(four_pi);
  for (int m = 1; m <= L; ++m) {
    P[legendre_tri_index(m, m)] =
        -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * st *
        P[legendre_tri_index(m - 1, m - 1)];
  }
  for (int m = 0; m < L; ++m) {
    P[legendre_tri_index(m + 1, m)] =
        std::sqrt(2.0 * m + 3.0) * ct * P[legendre_tri_index(m, m)];
  }
  for (int m = 0; m <= L; ++m) {
    for (int l = m + 2; l <= L; ++l) {
      double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                           (4.0 * double(l - 1) * (l - 1) - 1.0));
      P[legendre_tri_index(l, m)] =
          a * (ct * P[legendre_tri_index(l - 1, m)] -
               b * P[legendre_tri_index(l - 2, m)]);
    }
  }
}

}  // namespace scatlab
