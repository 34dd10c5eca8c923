#include "qsi/linalg.hpp"

#include <cmath>
#include <sstream>

namespace qsi {

double hermiticity_deviation(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const Matrix& a, const std::string& where) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << where << ": matrix is not square (" << a.rows() << "x" << a.cols()
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_hermitian(const Matrix& a, const std::string& where, double tol) {
  require_square(a, where);
  const double dev = hermiticity_deviation(a);
  if (dev > tol) {
    std::ostringstream msg;
    msg << where << ": matrix is not Hermitian (deviation " << dev
        << " exceeds " << tol << ")";
    throw std::invalid_argument(msg.str());
  }
}

HermitianEigen eig_hermitian(const Matrix& a) {
  require_hermitian(a, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

Matrix apply_spectral(const HermitianEigen& eig,
                      const std::function<double(double)>& f,
                      double zero_cutoff) {
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double w = eig.eigenvalues[i];
    mapped[i] = std::abs(w) <= zero_cutoff ? 0.0 : f(w);
  }
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

Matrix spectral_fn(const Matrix& a, const std::function<double(double)>& f,
                   double zero_cutoff) {
  return apply_spectral(eig_hermitian(a), f, zero_cutoff);
}

Matrix spectral_fn(const Matrix& a, const std::function<double(double)>& f) {
  const HermitianEigen eig = eig_hermitian(a);
  const double scale =
      eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return apply_spectral(eig, f, kRelativeZeroCutoff * scale);
}

Complex trace(const Matrix& a) {
  require_square(a, "trace");
  return a.trace();
}

double trace_norm(const Matrix& a) {
  const HermitianEigen eig = eig_hermitian(a);
  return eig.eigenvalues.cwiseAbs().sum();
}

Matrix sqrt_psd(const Matrix& a) {
  return spectral_fn(a, [](double w) { return std::sqrt(std::max(w, 0.0)); });
}

Matrix inv_sqrt_psd(const Matrix& a) {
  return spectral_fn(
      a, [](double w) { return w > 0.0 ? 1.0 / std::sqrt(w) : 0.0; });
}

}  // namespace qsi
