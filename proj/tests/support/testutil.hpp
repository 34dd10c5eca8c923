#pragma once

#include "qsi/linalg.hpp"

#include <cstdint>
#include <random>

namespace testutil {

inline double max_abs(const qsi::Matrix& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

inline qsi::Matrix random_hermitian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  qsi::Matrix a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      a(r, c) = qsi::Complex(gauss(gen), gauss(gen));
  return 0.5 * (a + a.adjoint()).eval();
}

inline qsi::Matrix random_density(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  qsi::Matrix a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      a(r, c) = qsi::Complex(gauss(gen), gauss(gen));
  qsi::Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

// Analytic binary-mixture entropy h(1/3, 2/3) = log2(3) - 2/3.
inline constexpr double kThirdsEntropy = 0.9182958340544896;

}  // namespace testutil
