#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>

#include "gainlap/eigensolver.hpp"
#include "gainlap/errors.hpp"

namespace gainlap {

// A matrix held as matrix * e^{logScale}, renormalized after every product
// so that the max entry magnitude stays in [0.5, 2]. Keeps high powers of a
// Laplacian representable: raw entries grow like lambda_n^k and overflow
// doubles near k ~ 200.
template <typename MatrixType>
struct ScaledPower {
  MatrixType matrix;
  double logScale = 0.0;

  void normalize() {
    if (matrix.size() == 0) return;
    const double mx = matrix.cwiseAbs().maxCoeff();
    if (mx <= 0.0) {
      logScale = 0.0;
      return;
    }
    if (mx < 0.5 || mx > 2.0) {
      matrix /= mx;
      logScale += std::log(mx);
    }
  }
};

// base^k by binary repeated squaring with renormalization at every step.
template <typename MatrixType>
ScaledPower<MatrixType> scaled_power(const MatrixType& base, int k) {
  if (k < 1) throw InvalidArgument("scaled_power: k must be >= 1");
  const Eigen::Index n = base.rows();
  ScaledPower<MatrixType> acc{MatrixType::Identity(n, n), 0.0};
  ScaledPower<MatrixType> sq{base, 0.0};
  sq.normalize();
  unsigned int rest = static_cast<unsigned int>(k);
  while (rest > 0) {
    if (rest & 1u) {
      acc.matrix = (acc.matrix * sq.matrix).eval();
      acc.logScale += sq.logScale;
      acc.normalize();
    }
    rest >>= 1u;
    if (rest > 0) {
      sq.matrix = (sq.matrix * sq.matrix).eval();
      sq.logScale *= 2.0;
      sq.normalize();
    }
  }
  return acc;
}

namespace detail {

template <typename MatrixType>
double log_max_diagonal(const ScaledPower<MatrixType>& p) {
  double maxDiag = 0.0;
  for (Eigen::Index i = 0; i < p.matrix.rows(); ++i) {
    maxDiag = std::max(maxDiag, Eigen::numext::real(p.matrix(i, i)));
  }
  if (maxDiag <= 0.0) return -std::numeric_limits<double>::infinity();
  return p.logScale + std::log(maxDiag);
}

}  // namespace detail

// (max_i (L^k)_ii)^{1/k}: a lower bound on lambda_n for PSD Hermitian L
// that converges to lambda_n as k grows. Evaluated in the log domain.
template <typename MatrixType>
double diag_power_bound(const MatrixType& lap, int k) {
  if (k < 1) throw InvalidArgument("diag_power_bound: k must be >= 1");
  detail::ensure_hermitian(lap, "diag_power_bound");
  if (lap.rows() == 0) throw InvalidArgument("diag_power_bound: empty matrix");
  const auto p = scaled_power(lap, k);
  const double logMax = detail::log_max_diagonal(p);
  return std::isfinite(logMax) ? std::exp(logMax / k) : 0.0;
}

// k-th root of Tr(L^k)/n + sqrt((n Tr(L^{2k}) - Tr(L^k)^2) / (n^2 (n-1))):
// a lower bound on lambda_n converging to lambda_n, with equality at k for
// gain graphs switching-equivalent to (K_n, 1).
template <typename MatrixType>
double trace_power_bound(const MatrixType& lap, int k) {
  if (k < 1) throw InvalidArgument("trace_power_bound: k must be >= 1");
  detail::ensure_hermitian(lap, "trace_power_bound");
  const auto n = static_cast<double>(lap.rows());
  if (lap.rows() < 2) throw InvalidArgument("trace_power_bound: dimension must be >= 2");
  const auto p = scaled_power(lap, k);
  // Tr(L^k) = e^s t1 and Tr(L^{2k}) = e^{2s} t2 with t2 = ||P||_F^2.
  const double t1 = Eigen::numext::real(p.matrix.trace());
  const double t2 = p.matrix.squaredNorm();
  const double disc = std::max(0.0, (n * t2 - t1 * t1) / (n * n * (n - 1.0)));
  const double inner = t1 / n + std::sqrt(disc);
  if (inner <= 0.0) return 0.0;
  return std::exp((p.logScale + std::log(inner)) / k);
}

// (max_i (L^{-k})_ii)^{-1/k}: an estimate of lambda_1 for nonsingular PSD L
// (unbalanced gain graphs) converging to lambda_1 from above. L is factored
// once by Cholesky; a numerically singular factor raises
// SingularMatrixError.
template <typename MatrixType>
double inverse_diag_power_bound(const MatrixType& lap, int k) {
  if (k < 1) throw InvalidArgument("inverse_diag_power_bound: k must be >= 1");
  detail::ensure_hermitian(lap, "inverse_diag_power_bound");
  const Eigen::Index n = lap.rows();
  if (n == 0) throw InvalidArgument("inverse_diag_power_bound: empty matrix");

  Eigen::LLT<MatrixType> llt(lap);
  bool singular = llt.info() != Eigen::Success;
  if (!singular) {
    double minDiag = std::numeric_limits<double>::infinity();
    double maxDiag = 0.0;
    const auto& factor = llt.matrixLLT();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = Eigen::numext::real(factor(i, i));
      minDiag = std::min(minDiag, d);
      maxDiag = std::max(maxDiag, d);
    }
    singular = minDiag <= 0.0 || minDiag * minDiag <= 1e-12 * maxDiag * maxDiag;
  }
  if (singular) {
    throw SingularMatrixError(
        "inverse_diag_power_bound: Laplacian is numerically singular "
        "(balanced gain graph)");
  }

  MatrixType inverse = llt.solve(MatrixType::Identity(n, n));
  inverse = ((inverse + inverse.adjoint()) / typename MatrixType::Scalar(2)).eval();
  const auto p = scaled_power(inverse, k);
  const double logMax = detail::log_max_diagonal(p);
  return std::exp(-logMax / k);
}

}  // namespace gainlap
