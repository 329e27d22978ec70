#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace scatlab {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double four_pi = 4.0 * pi;

// Bad inputs and contract violations detectable up front.
class validation_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An algorithm failed to reach its accuracy contract.
class numerical_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bilinear (not Hermitian) dot product. The complex quadric
// {theta in C^3 : theta.theta = 1} is defined through this product.
inline cplx bilinear_dot(const CVec3& a, const CVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline CVec3 complexify(const Vec3& v) {
  return CVec3(cplx(v[0], 0.0), cplx(v[1], 0.0), cplx(v[2], 0.0));
}

inline void require_unit(const Vec3& v, double tol = 1e-10,
                         const char* what = "direction") {
  if (std::abs(v.norm() - 1.0) > tol)
    throw validation_error(std::string(what) + " must be a unit vector");
}

inline void require_on_variety(const CVec3& th, double tol = 1e-8) {
  if (std::abs(bilinear_dot(th, th) - 1.0) > tol)
    throw validation_error(
        "complex direction is off the variety theta.theta = 1");
}

// Prints enough digits that parsing the string recovers the double exactly.
inline std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

}  // namespace scatlab
