#ifndef LIEALG_SAMPLING_HPP
#define LIEALG_SAMPLING_HPP

#include <random>

#include "liealg/algebra.hpp"

namespace liealg
{

  /// Coefficient vector with entries uniform in [-1, 1]. All seeded
  /// verification routines draw through this so reports are reproducible.
  inline Vec random_coeffs(std::mt19937_64 & rng, Index m)
  {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vec v(m);
    for (Index i = 0; i < m; i++) {
      v(i) = dist(rng);
    }
    return v;
  }

  inline double random_scalar(std::mt19937_64 & rng)
  {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return dist(rng);
  }

}

#endif
