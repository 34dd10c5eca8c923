#include "qsi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qsi {

namespace {

void require_disjoint(const std::vector<std::string>& a,
                      const std::vector<std::string>& b,
                      const std::string& where) {
  std::set<std::string> seen(a.begin(), a.end());
  for (const std::string& label : b)
    if (seen.count(label)) {
      throw std::invalid_argument(where + ": label sets overlap on \"" +
                                  label + "\"");
    }
}

std::vector<std::string> joined(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    double w = eigenvalues[i];
    if (w < 0.0) {
      if (w < -1e-9) {
        std::ostringstream msg;
        msg << "entropy: eigenvalue " << w << " below -1e-9";
        throw std::invalid_argument(msg.str());
      }
      w = 0.0;
    }
    if (w > 0.0) sum -= w * std::log2(w);
  }
  return sum;
}

double von_neumann_entropy(const MultipartiteState& state,
                           const std::vector<std::string>& subset) {
  const MultipartiteState reduced = partial_trace(state, subset);
  return entropy_of_spectrum(eig_hermitian(reduced.rho).eigenvalues);
}

double mutual_information(const MultipartiteState& state,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("mutual_information: empty label set");
  require_disjoint(x, y, "mutual_information");
  return von_neumann_entropy(state, x) + von_neumann_entropy(state, y) -
         von_neumann_entropy(state, joined(x, y));
}

double conditional_mutual_information(const MultipartiteState& state,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y,
                                      const std::vector<std::string>& z) {
  if (x.empty() || y.empty())
    throw std::invalid_argument(
        "conditional_mutual_information: empty label set");
  require_disjoint(x, y, "conditional_mutual_information");
  require_disjoint(x, z, "conditional_mutual_information");
  require_disjoint(y, z, "conditional_mutual_information");
  if (z.empty()) return mutual_information(state, x, y);
  return von_neumann_entropy(state, joined(x, z)) +
         von_neumann_entropy(state, joined(y, z)) -
         von_neumann_entropy(state, z) -
         von_neumann_entropy(state, joined(joined(x, y), z));
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const Matrix root = sqrt_psd(rho);
  Matrix inner = root * sigma * root;
  inner = 0.5 * (inner + inner.adjoint().eval());  // scrub numerical skew
  const RealVector eigenvalues = eig_hermitian(inner).eigenvalues;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    sum += std::sqrt(std::max(eigenvalues[i], 0.0));
  return std::clamp(sum, 0.0, 1.0 + 1e-9);
}

double fidelity(const MultipartiteState& rho, const MultipartiteState& sigma) {
  return fidelity(rho.rho, sigma.rho);
}

}  // namespace qsi
