#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "scatlab/core.hpp"
#include "scatlab/special/quadrature.hpp"
#include "scatlab/special/spherical_harmonics.hpp"

namespace scatlab {

// One real spherical-harmonic coefficient of the radial function.
// Basis: m = 0 -> Y_l^0, m > 0 -> sqrt(2) Re Y_l^m, m < 0 -> sqrt(2) Im Y_l^|m|.
struct SurfaceCoefficient {
  int l = 0;
  int m = 0;
  double value = 0.0;
};

struct SurfaceFrame {
  double r = 0.0;
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::Zero();   // outward unit normal
  double jacobian = 0.0;        // dS = jacobian * dOmega
};

struct AdmissibilityReport {
  bool annulus_ok = false;
  double r_min = 0.0, r_max = 0.0;
  bool smooth_ok = false;
  double smooth_value = 0.0;  // sum |c_lm| (1 + l(l+1)), a C^2-type proxy
  double a0 = 0.0, a1 = 0.0, c0 = 0.0;
  bool pass() const { return annulus_ok && smooth_ok; }
};

// Closed star-shaped surface about the origin, r = r(u) for u on S^2, with
// a band-limited radial function. Confinement to the annulus [a0, a1] is
// enforced at construction; the smoothness budget c0 is checked by
// admissibility_check.
class StarSurface {
 public:
  StarSurface(double a0, double a1, double c0, int L_geom,
              std::vector<SurfaceCoefficient> coefficients)
      : a0_(a0), a1_(a1), c0_(c0), L_(L_geom) {
    if (!(a0 > 0.0) || !(a1 > a0))
      throw validation_error("StarSurface: need 0 < a0 < a1");
    if (!(c0 > 0.0)) throw validation_error("StarSurface: need c0 > 0");
    if (L_ < 0 || L_ > hard_max_degree)
      throw validation_error("StarSurface: bad radial degree");
    coef_.assign(sh_count(L_), 0.0);
    for (const auto& c : coefficients) {
      if (c.l < 0 || c.l > L_ || std::abs(c.m) > c.l)
        throw validation_error("StarSurface: coefficient index out of range");
      coef_[sh_index(c.l, c.m)] += c.value;
    }
    enforce_annulus();
  }

  static StarSurface sphere(double radius, double a0, double a1, double c0) {
    return StarSurface(a0, a1, c0, 0,
                       {{0, 0, radius * std::sqrt(four_pi)}});
  }

  // Unit sphere family with generous class constants, handy default.
  static StarSurface sphere(double radius) {
    return sphere(radius, radius * 0.5, radius * 2.0,
                  10.0 * std::max(1.0, radius));
  }

  double a0() const { return a0_; }
  double a1() const { return a1_; }
  double c0() const { return c0_; }
  int radial_degree() const { return L_; }
  const std::vector<double>& coefficients() const { return coef_; }

  bool is_sphere() const {
    for (int k = 1; k < sh_count(L_); ++k)
      if (coef_[k] != 0.0) return false;
    return true;
  }

  double sphere_radius() const { return coef_[0] / std::sqrt(four_pi); }

  double eval_radius(const Vec3& u) const {
    require_unit(u, 1e-10, "eval_radius direction");
    std::vector<cplx> tab;
    sph_harmonic_table_real(L_, u, tab);
    double r = 0.0;
    const double s2 = std::sqrt(2.0);
    for (int l = 0; l <= L_; ++l) {
      r += coef_[sh_index(l, 0)] * tab[sh_index(l, 0)].real();
      for (int m = 1; m <= l; ++m) {
        const cplx v = tab[sh_index(l, m)];
        r += coef_[sh_index(l, m)] * s2 * v.real();
        r += coef_[sh_index(l, -m)] * s2 * v.imag();
      }
    }
    return r;
  }

  // Point, outward unit normal and surface-measure factor at direction u.
  // The tangential gradient of r comes from jets of the solid harmonics:
  // for the degree-l homogeneous extension p, grad_S Y = grad p - l Y u.
  SurfaceFrame frame(const Vec3& u) const {
    require_unit(u, 1e-10, "surface frame direction");
    std::vector<Jet> jets;
    solid_harmonic_jets(L_, u, jets);
    double r = 0.0;
    Vec3 grad = Vec3::Zero();
    const double s2 = std::sqrt(2.0);
    for (int l = 0; l <= L_; ++l)
      for (int m = 0; m <= l; ++m) {
        const Jet& J = jets[legendre_tri_index(l, m)];
        double cr = coef_[sh_index(l, m)];
        double ci = (m > 0) ? coef_[sh_index(l, -m)] : 0.0;
        double w_re = (m == 0) ? cr : s2 * cr;
        double w_im = (m == 0) ? 0.0 : s2 * ci;
        double val = w_re * J.v.real() + w_im * J.v.imag();
        Vec3 g(w_re * J.gx.real() + w_im * J.gx.imag(),
               w_re * J.gy.real() + w_im * J.gy.imag(),
               w_re * J.gz.real() + w_im * J.gz.imag());
        r += val;
        grad += g - double(l) * val * u;  // tangential part
      }
    SurfaceFrame f;
    f.r = r;
    f.point = r * u;
    Vec3 n = r * u - grad;
    double nn = n.norm();
    if (!(nn > 1e-12))
      throw numerical_error("surface frame: degenerate normal");
    f.normal = n / nn;
    f.jacobian = r * nn;  // r * sqrt(r^2 + |grad_S r|^2)
    return f;
  }

  AdmissibilityReport admissibility_check(int grid_degree = 0) const {
    AdmissibilityReport rep;
    rep.a0 = a0_;
    rep.a1 = a1_;
    rep.c0 = c0_;
    scan_radius(grid_degree > 0 ? grid_degree : default_check_degree(),
                rep.r_min, rep.r_max);
    rep.annulus_ok = (rep.r_min >= a0_ - 1e-12) && (rep.r_max <= a1_ + 1e-12);
    rep.smooth_value = 0.0;
    for (int l = 0; l <= L_; ++l)
      for (int m = -l; m <= l; ++m)
        rep.smooth_value +=
            std::abs(coef_[sh_index(l, m)]) * (1.0 + double(l) * (l + 1));
    rep.smooth_ok = rep.smooth_value <= c0_;
    return rep;
  }

 private:
  int default_check_degree() const { return std::max(2 * L_ + 16, 16); }

  void scan_radius(int degree, double& rmin, double& rmax) const {
    SphereQuadrature q = build_sphere_quadrature(degree);
    rmin = 1e300;
    rmax = -1e300;
    for (const Vec3& u : q.nodes) {
      double r = eval_radius(u);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
  }

  void enforce_annulus() const {
    double rmin, rmax;
    scan_radius(default_check_degree(), rmin, rmax);
    if (rmin < a0_ - 1e-12 || rmax > a1_ + 1e-12)
      throw validation_error(
          "StarSurface: radial function leaves the annulus [a0, a1] "
          "(r in [" + fmt_g17(rmin) + ", " + fmt_g17(rmax) + "])");
  }

  double a0_, a1_, c0_;
  int L_;
  std::vector<double> coef_;  // packed by sh_index
};

// Quadrature on the surface itself: points, outward normals, and weights
// that carry the surface measure.
struct SurfaceQuadrature {
  SphereQuadrature param;  // directions and solid-angle weights
  std::vector<Vec3> points;
  std::vector<Vec3> normals;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  double area() const {
    double a = 0.0;
    for (double w : weights) a += w;
    return a;
  }
};

inline SurfaceQuadrature build_surface_quadrature(const StarSurface& s,
                                                  const SphereQuadrature& q) {
  SurfaceQuadrature sq;
  sq.param = q;
  sq.points.resize(q.size());
  sq.normals.resize(q.size());
  sq.weights.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    SurfaceFrame f = s.frame(q.nodes[i]);
    sq.points[i] = f.point;
    sq.normals[i] = f.normal;
    sq.weights[i] = q.weights[i] * f.jacobian;
  }
  return sq;
}

inline SurfaceQuadrature build_surface_quadrature(const StarSurface& s,
                                                  int degree) {
  return build_surface_quadrature(s, build_sphere_quadrature(degree));
}

}  // namespace scatlab
