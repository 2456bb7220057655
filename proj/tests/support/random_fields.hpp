#pragma once

#include "burgers/grid.hpp"

#include <random>

namespace burgers::testing {

inline Field random_field(std::mt19937_64& rng, int M, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Field f(M);
  for (double& x : f.values()) {
    x = dist(rng);
  }
  return f;
}

inline int random_cells(std::mt19937_64& rng, int lo = 2, int hi = 24) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace burgers::testing
