#pragma once

#include <cmath>
#include <vector>

#include "scatlab/core.hpp"
#include "scatlab/special/legendre.hpp"

namespace scatlab {

// Complex orthonormal spherical harmonics Y_l^m with the Condon-Shortley
// phase. Degrees are capped by the caller-configurable max_degree below; the
// recurrences themselves stay finite in double far beyond it.
inline constexpr int default_max_degree = 40;
inline constexpr int hard_max_degree = 256;

struct HarmonicIndex {
  int l = 0;
  int m = 0;
  bool valid() const { return l >= 0 && std::abs(m) <= l; }
};

inline int sh_index(int l, int m) { return l * (l + 1) + m; }
inline int sh_count(int L) { return (L + 1) * (L + 1); }

inline void check_harmonic_index(const HarmonicIndex& idx, int max_degree) {
  if (!idx.valid())
    throw validation_error("harmonic index requires l >= 0 and |m| <= l");
  if (idx.l > max_degree || idx.l > hard_max_degree)
    throw validation_error("unsupported harmonic degree l = " +
                           std::to_string(idx.l));
}

// All Y_l^m(u) for l <= L at a real unit vector, packed as sh_index(l, m).
// Evaluated via normalized associated Legendre recurrences plus complex
// exponentials in the azimuth.
inline void sph_harmonic_table_real(int L, const Vec3& u,
                                    std::vector<cplx>& out) {
  double ct = u[2];
  double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  double phi = (st > 0.0) ? std::atan2(u[1], u[0]) : 0.0;
  std::vector<double> P;
  normalized_legendre_table(L, ct, st, P);
  out.assign(sh_count(L), cplx(0.0));
  std::vector<cplx> eim(L + 1);
  eim[0] = 1.0;
  cplx e1 = cplx(std::cos(phi), std::sin(phi));
  for (int m = 1; m <= L; ++m) eim[m] = eim[m - 1] * e1;
  for (int l = 0; l <= L; ++l) {
    out[sh_index(l, 0)] = P[legendre_tri_index(l, 0)];
    for (int m = 1; m <= l; ++m) {
      cplx v = P[legendre_tri_index(l, m)] * eim[m];
      out[sh_index(l, m)] = v;
      // Y_l^{-m} = (-1)^m conj(Y_l^m)
      out[sh_index(l, -m)] = (m % 2 ? -1.0 : 1.0) * std::conj(v);
    }
  }
}

inline cplx sph_harmonic(const HarmonicIndex& idx, const Vec3& u,
                         int max_degree = default_max_degree) {
  check_harmonic_index(idx, max_degree);
  require_unit(u, 1e-10, "sph_harmonic argument");
  std::vector<cplx> tab;
  sph_harmonic_table_real(idx.l, u, tab);
  return tab[sh_index(idx.l, idx.m)];
}

namespace detail {

// One diagonal-then-column pass of the solid-harmonic recurrence. `u` is
// x + i*y for the m >= 0 stream and x - i*y for the m < 0 stream.
// S_l^m = q-normalized solid harmonic: for real points, S_l^m(x) =
// |x|^l Y_l^m(x/|x|); for complex points it is the same homogeneous
// harmonic polynomial evaluated at the complex argument.
inline void solid_stream(int L, cplx u, cplx z, cplx q,
                         std::vector<cplx>& S) {
  S.assign(static_cast<std::size_t>(L + 1) * (L + 2) / 2, cplx(0.0));
  S[0] = 1.0 / std::sqrt(four_pi);
  for (int m = 1; m <= L; ++m)
    S[legendre_tri_index(m, m)] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * u *
                                  S[legendre_tri_index(m - 1, m - 1)];
  for (int m = 0; m < L; ++m)
    S[legendre_tri_index(m + 1, m)] =
        std::sqrt(2.0 * m + 3.0) * z * S[legendre_tri_index(m, m)];
  for (int m = 0; m <= L; ++m)
    for (int l = m + 2; l <= L; ++l) {
      double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                           (4.0 * double(l - 1) * (l - 1) - 1.0));
      S[legendre_tri_index(l, m)] =
          a * (z * S[legendre_tri_index(l - 1, m)] -
               b * q * S[legendre_tri_index(l - 2, m)]);
    }
}

}  // namespace detail

// Homogeneous harmonic polynomials p_l^m at a complex 3-vector, packed as
// sh_index(l, m). On real unit vectors these coincide with Y_l^m; on the
// quadric theta.theta = 1 they realize the analytic continuation of the
// harmonics to complex directions.
inline void solid_harmonic_table(int L, const CVec3& p, std::vector<cplx>& out) {
  cplx x = p[0], y = p[1], z = p[2];
  cplx q = x * x + y * y + z * z;
  std::vector<cplx> Sp, Sm;
  detail::solid_stream(L, x + cplx(0, 1) * y, z, q, Sp);
  detail::solid_stream(L, x - cplx(0, 1) * y, z, q, Sm);
  out.assign(sh_count(L), cplx(0.0));
  for (int l = 0; l <= L; ++l) {
    out[sh_index(l, 0)] = Sp[legendre_tri_index(l, 0)];
    for (int m = 1; m <= l; ++m) {
      out[sh_index(l, m)] = Sp[legendre_tri_index(l, m)];
      out[sh_index(l, -m)] =
          (m % 2 ? -1.0 : 1.0) * Sm[legendre_tri_index(l, m)];
    }
  }
}

inline cplx sph_harmonic_complex(const HarmonicIndex& idx, const CVec3& theta,
                                 int max_degree = default_max_degree,
                                 double variety_tol = 1e-8) {
  check_harmonic_index(idx, max_degree);
  require_on_variety(theta, variety_tol);
  std::vector<cplx> tab;
  solid_harmonic_table(idx.l, theta, tab);
  return tab[sh_index(idx.l, idx.m)];
}

// Value plus Cartesian gradient, propagated through the solid-harmonic
// recurrence (forward-mode differentiation of each step).
struct Jet {
  cplx v{0.0, 0.0};
  cplx gx{0.0, 0.0}, gy{0.0, 0.0}, gz{0.0, 0.0};
};

// Jets of the m >= 0 solid harmonics at a real point, packed triangularly.
// At real arguments the m < 0 entries follow by conjugation.
inline void solid_harmonic_jets(int L, const Vec3& p, std::vector<Jet>& S) {
  cplx x(p[0], 0.0), y(p[1], 0.0), z(p[2], 0.0);
  cplx q = x * x + y * y + z * z;
  const cplx iu(0.0, 1.0);
  cplx u = x + iu * y;
  S.assign(static_cast<std::size_t>(L + 1) * (L + 2) / 2, Jet{});
  S[0].v = 1.0 / std::sqrt(four_pi);
  for (int m = 1; m <= L; ++m) {
    double f = -std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    const Jet& s = S[legendre_tri_index(m - 1, m - 1)];
    Jet& d = S[legendre_tri_index(m, m)];
    d.v = f * u * s.v;
    d.gx = f * (u * s.gx + s.v);
    d.gy = f * (u * s.gy + iu * s.v);
    d.gz = f * u * s.gz;
  }
  for (int m = 0; m < L; ++m) {
    double f = std::sqrt(2.0 * m + 3.0);
    const Jet& s = S[legendre_tri_index(m, m)];
    Jet& d = S[legendre_tri_index(m + 1, m)];
    d.v = f * z * s.v;
    d.gx = f * z * s.gx;
    d.gy = f * z * s.gy;
    d.gz = f * (z * s.gz + s.v);
  }
  for (int m = 0; m <= L; ++m)
    for (int l = m + 2; l <= L; ++l) {
      double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                           (4.0 * double(l - 1) * (l - 1) - 1.0));
      const Jet& s1 = S[legendre_tri_index(l - 1, m)];
      const Jet& s2 = S[legendre_tri_index(l - 2, m)];
      Jet& d = S[legendre_tri_index(l, m)];
      d.v = a * (z * s1.v - b * q * s2.v);
      d.gx = a * (z * s1.gx - b * (q * s2.gx + 2.0 * x * s2.v));
      d.gy = a * (z * s1.gy - b * (q * s2.gy + 2.0 * y * s2.v));
      d.gz = a * (z * s1.gz + s1.v - b * (q * s2.gz + 2.0 * z * s2.v));
    }
}

// Real orthonormal basis built from the complex harmonics:
//   m = 0 :  Y_l^0 (already real)
//   m > 0 :  sqrt(2) Re Y_l^m
//   m < 0 :  sqrt(2) Im Y_l^{|m|}
inline double real_sph_harmonic(int l, int m, const Vec3& u,
                                int max_degree = default_max_degree) {
  check_harmonic_index({l, std::abs(m)}, max_degree);
  require_unit(u, 1e-10, "real_sph_harmonic argument");
  std::vector<cplx> tab;
  sph_harmonic_table_real(l, u, tab);
  if (m == 0) return tab[sh_index(l, 0)].real();
  cplx v = tab[sh_index(l, std::abs(m))];
  return std::sqrt(2.0) * (m > 0 ? v.real() : v.imag());
}

}  // namespace scatlab
