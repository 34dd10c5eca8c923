#pragma once

#include "qsi/state.hpp"

#include <vector>

namespace qsi {

// All quantities in bits (log base 2).

/// Von Neumann entropy of the reduced state on the given subsystems.
double von_neumann_entropy(const MultipartiteState& state,
                           const std::vector<std::string>& subset);

/// I(x;y) = H(x) + H(y) - H(xy). x and y must be disjoint and non-empty.
double mutual_information(const MultipartiteState& state,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& y);

/// I(x;y|z) = H(xz) + H(yz) - H(z) - H(xyz). Empty z reduces to I(x;y).
double conditional_mutual_information(const MultipartiteState& state,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y,
                                      const std::vector<std::string>& z);

/// Root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1+1e-9].
double fidelity(const Matrix& rho, const Matrix& sigma);
double fidelity(const MultipartiteState& rho, const MultipartiteState& sigma);

/// Entropy in bits of a spectrum; eigenvalues in [-1e-9, 0) are clamped to 0.
double entropy_of_spectrum(const RealVector& eigenvalues);

}  // namespace qsi
