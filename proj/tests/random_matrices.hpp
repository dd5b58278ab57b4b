#pragma once

// Pinned-seed random matrices for the polar tests.

#include <cmath>
#include <random>

#include "bbgroup/real_matrix.hpp"

namespace bbgroup::testing {

/// Entries uniform in [-1, 1]; redrawn until comfortably invertible.
inline RealMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
    if (std::abs(m.determinant()) > 1e-6) return m;
  }
}

/// Modified Gram-Schmidt on the columns of a random invertible matrix.
inline RealMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  RealMatrix q = random_invertible(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += q(i, j) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace bbgroup::testing
