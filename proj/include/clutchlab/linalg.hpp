#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace clutchlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Numerical tolerances shared by every module.
struct Tolerances {
  double eps_mat = 1e-8;   // relative Frobenius residual for matrix identities
  double eps_char = 1e-6;  // character comparisons and multiplicity rounding
  double eps_sing = 1e-8;  // smallest admissible singular value
};

/// ||x - y||_F / max(1, ||y||_F).
inline double rel_residual(const CMatrix& x, const CMatrix& y) {
  const double scale = std::max(1.0, y.norm());
  return (x - y).norm() / scale;
}

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

inline double smallest_singular_value(const CMatrix& m) {
  if (m.rows() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

/// Gaussian entries, real and imaginary parts independent.
inline CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

/// Haar-ish random unitary via QR of a Gaussian matrix.
inline CMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_matrix(n, n, rng));
  return qr.householderQ() * identity(n);
}

}  // namespace clutchlab
