#pragma once

#include <random>

#include "scatlab/core.hpp"

namespace testutil {

inline double rel_err(scatlab::cplx got, scatlab::cplx want) {
  double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline scatlab::Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  scatlab::Vec3 v;
  do {
    v = scatlab::Vec3(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace testutil
