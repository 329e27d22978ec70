#pragma once

#include <cmath>
#include <vector>

#include "scatlab/core.hpp"
#include "scatlab/special/gauss_legendre.hpp"

namespace scatlab {

// Product rule on the unit sphere: Gauss-Legendre in the polar cosine times a
// uniform grid in azimuth. Weights sum to 4*pi; spherical polynomials are
// integrated exactly up to exact_degree.
struct SphereQuadrature {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
  int n_polar = 0;
  int n_azimuth = 0;

  std::size_t size() const { return nodes.size(); }
};

inline SphereQuadrature make_sphere_grid(int n_polar, int n_azimuth) {
  if (n_polar < 1 || n_azimuth < 1)
    throw validation_error("make_sphere_grid: grid sizes must be positive");
  GaussLegendre gl = gauss_legendre(n_polar);
  SphereQuadrature q;
  q.n_polar = n_polar;
  q.n_azimuth = n_azimuth;
  q.exact_degree = std::min(2 * n_polar - 1, n_azimuth - 1);
  q.nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  q.weights.reserve(q.nodes.capacity());
  double wphi = 2.0 * pi / n_azimuth;
  for (int i = 0; i < n_polar; ++i) {
    double ct = gl.nodes[i];
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < n_azimuth; ++j) {
      double phi = wphi * j;
      q.nodes.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
      q.weights.push_back(gl.weights[i] * wphi);
    }
  }
  return q;
}

// Smallest product grid exact for spherical polynomials up to `degree`.
// The azimuth count is rounded up to an even number so the node set is
// closed under the antipodal map.
inline SphereQuadrature build_sphere_quadrature(int degree) {
  if (degree < 1) throw validation_error("build_sphere_quadrature: degree >= 1");
  int n_polar = (degree + 2) / 2;  // 2*n_polar - 1 >= degree
  int n_azimuth = degree + 1;
  if (n_azimuth % 2 == 1) ++n_azimuth;
  SphereQuadrature q = make_sphere_grid(n_polar, n_azimuth);
  q.exact_degree = degree;
  return q;
}

}  // namespace scatlab
