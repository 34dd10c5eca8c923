#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace qsi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance below which a matrix counts as Hermitian (max-abs of a - a†).
inline constexpr double kHermitianTol = 1e-10;

/// Default spectral cutoff, relative to the largest |eigenvalue|.
inline constexpr double kRelativeZeroCutoff = 1e-10;

/// Eigensystem of a Hermitian matrix. Eigenvalues ascending, eigenvector
/// columns orthonormal, input = V diag(w) V†.
struct HermitianEigen {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

double hermiticity_deviation(const Matrix& a);

void require_square(const Matrix& a, const std::string& where);
void require_hermitian(const Matrix& a, const std::string& where,
                       double tol = kHermitianTol);

/// Kronecker product with a's index major: out has dimensions
/// (a.rows*b.rows) x (a.cols*b.cols).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
tensor(const Eigen::MatrixBase<DerivedA>& a,
       const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

HermitianEigen eig_hermitian(const Matrix& a);

/// V f(w) V† with f applied eigenvalue-wise. Eigenvalues with
/// |w| <= zero_cutoff map to 0 instead of f(w), so inverse powers act on the
/// support only.
Matrix spectral_fn(const Matrix& a, const std::function<double(double)>& f,
                   double zero_cutoff);

/// Same, with the cutoff chosen as kRelativeZeroCutoff * max|eigenvalue|.
Matrix spectral_fn(const Matrix& a, const std::function<double(double)>& f);

Complex trace(const Matrix& a);

/// Sum of |eigenvalues|; defined for Hermitian input.
double trace_norm(const Matrix& a);

/// Principal square root on the positive part of the spectrum.
Matrix sqrt_psd(const Matrix& a);

/// Pseudo-inverse square root: eigenvalues at or below the cutoff map to 0.
Matrix inv_sqrt_psd(const Matrix& a);

}  // namespace qsi
