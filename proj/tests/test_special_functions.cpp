#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "scatlab/special/bessel.hpp"
#include "scatlab/special/quadrature.hpp"
#include "scatlab/special/spherical_harmonics.hpp"
#include "test_util.hpp"

using namespace scatlab;
using testutil::rel_err;

namespace {

// Textbook low-degree harmonics, written out as polynomials in (x, y, z).
// Used as an independent oracle for the recurrence-based evaluators.
cplx explicit_harmonic(int l, int m, const Vec3& u) {
  const double x = u[0], y = u[1], z = u[2];
  const cplx xp(x, y), xm(x, -y);
  switch (l * 10 + (m + l)) {
    case 0:   return 1.0 / std::sqrt(4.0 * pi);
    case 10:  return std::sqrt(3.0 / (8.0 * pi)) * xm;              // (1,-1)
    case 11:  return std::sqrt(3.0 / (4.0 * pi)) * z;               // (1, 0)
    case 12:  return -std::sqrt(3.0 / (8.0 * pi)) * xp;             // (1, 1)
    case 20:  return std::sqrt(15.0 / (32.0 * pi)) * xm * xm;       // (2,-2)
    case 21:  return std::sqrt(15.0 / (8.0 * pi)) * xm * z;         // (2,-1)
    case 22:  return std::sqrt(5.0 / (16.0 * pi)) * (3.0 * z * z - 1.0);
    case 23:  return -std::sqrt(15.0 / (8.0 * pi)) * xp * z;        // (2, 1)
    case 24:  return std::sqrt(15.0 / (32.0 * pi)) * xp * xp;       // (2, 2)
    default:  FAIL("explicit_harmonic: degree not tabulated");
  }
  return 0.0;
}

}  // namespace

TEST_CASE("sphere quadrature integrates polynomials exactly") {
  SECTION("weights sum to 4pi for the minimal rule") {
    auto q = build_sphere_quadrature(1);
    double s = 0.0;
    for (double w : q.weights) s += w;
    REQUIRE(std::abs(s - four_pi) < 1e-13);
  }

  SECTION("nodes are unit vectors and weights positive") {
    auto q = build_sphere_quadrature(24);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      REQUIRE(std::abs(q.nodes[i].norm() - 1.0) < 1e-14);
      REQUIRE(q.weights[i] > 0.0);
      s += q.weights[i];
    }
    REQUIRE(std::abs(s - four_pi) < 1e-12);
  }

  SECTION("a pure harmonic integrates to zero") {
    auto q = build_sphere_quadrature(8);
    cplx s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
      s += q.weights[i] * sph_harmonic({3, 2}, q.nodes[i]);
    REQUIRE(std::abs(s) < 1e-12);
  }

  SECTION("second moment of z is 4pi/3") {
    auto q = build_sphere_quadrature(4);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
      s += q.weights[i] * q.nodes[i][2] * q.nodes[i][2];
    REQUIRE(std::abs(s - four_pi / 3.0) < 1e-12);
  }
}

TEST_CASE("spherical harmonics: values and symmetries") {
  std::mt19937_64 rng(12345);

  SECTION("constant harmonic") {
    for (int t = 0; t < 5; ++t) {
      Vec3 u = testutil::random_unit(rng);
      REQUIRE(rel_err(sph_harmonic({0, 0}, u), 1.0 / std::sqrt(four_pi)) < 1e-15);
    }
  }

  SECTION("axial value of the z-harmonic") {
    cplx v = sph_harmonic({1, 0}, Vec3(0, 0, 1));
    REQUIRE(rel_err(v, std::sqrt(3.0 / four_pi)) < 1e-15);
  }

  SECTION("low degrees match explicit polynomials") {
    for (int t = 0; t < 20; ++t) {
      Vec3 u = testutil::random_unit(rng);
      for (int l = 0; l <= 2; ++l)
        for (int m = -l; m <= l; ++m) {
          cplx want = explicit_harmonic(l, m, u);
          REQUIRE(std::abs(sph_harmonic({l, m}, u) - want) < 1e-14);
        }
    }
  }

  SECTION("conjugation symmetry Y_l^-m = (-1)^m conj(Y_l^m)") {
    for (int t = 0; t < 10; ++t) {
      Vec3 u = testutil::random_unit(rng);
      std::vector<cplx> tab;
      sph_harmonic_table_real(12, u, tab);
      for (int l = 0; l <= 12; ++l)
        for (int m = 1; m <= l; ++m) {
          cplx lhs = tab[sh_index(l, -m)];
          cplx rhs = (m % 2 ? -1.0 : 1.0) * std::conj(tab[sh_index(l, m)]);
          REQUIRE(std::abs(lhs - rhs) < 1e-14);
        }
    }
  }

  SECTION("orthonormality under quadrature") {
    auto q = build_sphere_quadrature(10);
    cplx s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      cplx v = sph_harmonic({2, 1}, q.nodes[i]);
      s += q.weights[i] * v * std::conj(v);
    }
    REQUIRE(std::abs(s - 1.0) < 1e-10);
  }

  SECTION("Gram matrix is the identity up to degree 20") {
    const int L = 20;
    auto q = build_sphere_quadrature(2 * L);
    std::vector<std::vector<cplx>> tabs(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
      sph_harmonic_table_real(L, q.nodes[i], tabs[i]);
    double worst = 0.0;
    for (int a = 0; a < sh_count(L); ++a)
      for (int b = a; b < sh_count(L); ++b) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i)
          s += q.weights[i] * tabs[i][a] * std::conj(tabs[i][b]);
        double want = (a == b) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(s - want));
      }
    REQUIRE(worst < 1e-10);
  }

  SECTION("degree above the configured maximum is rejected") {
    REQUIRE_THROWS_AS(sph_harmonic({41, 0}, Vec3(0, 0, 1)), validation_error);
    REQUIRE_THROWS_AS(sph_harmonic({41, 0}, Vec3(0, 0, 1), 40), validation_error);
    REQUIRE_NOTHROW(sph_harmonic({41, 0}, Vec3(0, 0, 1), 64));
  }

  SECTION("non-unit argument is rejected") {
    REQUIRE_THROWS_AS(sph_harmonic({1, 0}, Vec3(0, 0, 1.1)), validation_error);
  }
}

TEST_CASE("complex-direction harmonics") {
  std::mt19937_64 rng(777);

  SECTION("constant harmonic on the quadric") {
    CVec3 th(cplx(0.0, 0.5), cplx(0, 0), cplx(std::sqrt(1.25), 0));
    REQUIRE(rel_err(sph_harmonic_complex({0, 0}, th), 1.0 / std::sqrt(four_pi)) <
            1e-15);
  }

  SECTION("restriction to real unit vectors matches the real evaluator") {
    for (int t = 0; t < 8; ++t) {
      Vec3 u = testutil::random_unit(rng);
      std::vector<cplx> real_tab, solid_tab;
      sph_harmonic_table_real(40, u, real_tab);
      solid_harmonic_table(40, complexify(u), solid_tab);
      for (int k = 0; k < sh_count(40); ++k)
        REQUIRE(std::abs(real_tab[k] - solid_tab[k]) < 1e-12);
    }
  }

  SECTION("degree-1 value at a complex direction") {
    // oracle: the degree-1 m=0 harmonic is the explicit polynomial
    // sqrt(3/(4pi)) * theta_3
    double t = 0.5;
    CVec3 th(cplx(0.0, t), cplx(0, 0), cplx(std::sqrt(1.0 + t * t), 0));
    cplx want = std::sqrt(3.0 / four_pi) * std::sqrt(1.25);
    REQUIRE(rel_err(sph_harmonic_complex({1, 0}, th), want) < 1e-14);
  }

  SECTION("off-variety arguments are rejected") {
    CVec3 th(cplx(0.0, 0.5), cplx(0, 0), cplx(1.0, 0));
    REQUIRE_THROWS_AS(sph_harmonic_complex({1, 0}, th), validation_error);
  }

  SECTION("jets agree with central differences") {
    std::vector<Jet> jets;
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 4; ++t) {
      Vec3 p(d(rng), d(rng), d(rng));
      solid_harmonic_jets(8, p, jets);
      const double h = 1e-5;
      for (int l = 0; l <= 8; ++l)
        for (int m = 0; m <= l; ++m) {
          const Jet& J = jets[legendre_tri_index(l, m)];
          for (int axis = 0; axis < 3; ++axis) {
            Vec3 pp = p, pm = p;
            pp[axis] += h;
            pm[axis] -= h;
            std::vector<cplx> tp, tm;
            solid_harmonic_table(l, complexify(pp), tp);
            solid_harmonic_table(l, complexify(pm), tm);
            cplx fd = (tp[sh_index(l, m)] - tm[sh_index(l, m)]) / (2.0 * h);
            cplx g = axis == 0 ? J.gx : (axis == 1 ? J.gy : J.gz);
            REQUIRE(std::abs(fd - g) < 1e-7);
          }
        }
    }
  }
}

TEST_CASE("spherical Bessel and Hankel functions") {
  SECTION("closed forms at x = 1") {
    REQUIRE(rel_err(spherical_bessel_j(0, 1.0), std::sin(1.0)) < 1e-15);
    cplx want = -cplx(0, 1) * std::exp(cplx(0, 1));
    REQUIRE(rel_err(spherical_hankel_h1(0, 1.0), want) < 1e-15);
  }

  SECTION("Wronskian at (l=10, x=5)") {
    std::vector<double> j, y;
    spherical_jy_table(11, 5.0, j, y);
    double w = j[10] * sph_bessel_derivative(10, 5.0, y) -
               sph_bessel_derivative(10, 5.0, j) * y[10];
    REQUIRE(rel_err(w, 1.0 / 25.0) < 1e-10);
  }

  SECTION("Wronskian sweep over orders and arguments") {
    for (double x : {0.5, 1.0, 2.0, 5.0, 11.0, 20.0}) {
      std::vector<double> j, y;
      spherical_jy_table(61, x, j, y);
      for (int l = 0; l <= 60; ++l) {
        double w = j[l] * sph_bessel_derivative(l, x, y) -
                   sph_bessel_derivative(l, x, j) * y[l];
        REQUIRE(rel_err(w, 1.0 / (x * x)) < 1e-9);
      }
    }
  }

  SECTION("domain errors") {
    REQUIRE_THROWS_AS(spherical_bessel_j(3, 0.0), validation_error);
    REQUIRE_THROWS_AS(spherical_bessel_j(3, -1.0), validation_error);
  }
}

TEST_CASE("large-order Hankel asymptotics") {
  auto ratio = [](int l, double r) {
    return std::abs(hankel_large_order_asymptotic(l, r) /
                    spherical_hankel_h1(l, r));
  };

  SECTION("approaches the exact function") {
    REQUIRE(std::abs(ratio(40, 1.0) - 1.0) < 0.02);
    REQUIRE(std::abs(ratio(80, 1.0) - 1.0) < 0.01);
    // at r = 2 the first neglected correction ~ r^2/(2(2l-1)) is ~1.3%
    REQUIRE(std::abs(ratio(80, 2.0) - 1.0) < 0.02);
  }

  SECTION("error shrinks with the order") {
    double e40 = std::abs(ratio(40, 1.5) - 1.0);
    double e80 = std::abs(ratio(80, 1.5) - 1.0);
    REQUIRE(e80 < e40);
  }

  SECTION("convergence is monotone beyond l = 20 on [1, 3]") {
    for (double r : {1.0, 1.5, 2.0, 3.0}) {
      double prev = std::abs(ratio(20, r) - 1.0);
      for (int l = 25; l <= 80; l += 5) {
        double cur = std::abs(ratio(l, r) - 1.0);
        REQUIRE(cur < prev);
        prev = cur;
      }
    }
  }

  SECTION("domain errors") {
    REQUIRE_THROWS_AS(hankel_large_order_asymptotic(0, 1.5), validation_error);
    REQUIRE_THROWS_AS(hankel_large_order_asymptotic(10, 0.5), validation_error);
  }
}
