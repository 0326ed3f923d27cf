#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gainlap/errors.hpp"
#include "gainlap/gain_graph.hpp"

namespace gainlap {

// Ascending real eigenvalues of a Hermitian matrix.
struct Spectrum {
  Eigen::VectorXd values;

  int size() const { return static_cast<int>(values.size()); }
  double lambda1() const { return values(0); }
  double lambdaN() const { return values(values.size() - 1); }
};

namespace detail {

template <typename MatrixType>
void ensure_hermitian(const MatrixType& m, const char* context) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument(std::string(context) + ": matrix is not square");
  }
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  const double tol = kHermitianTol * std::max(1.0, scale);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (Eigen::numext::abs(m(i, j) - Eigen::numext::conj(m(j, i))) > tol) {
        throw InvalidArgument(std::string(context) + ": matrix is not Hermitian at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace detail

// Cyclic Jacobi eigensolver for dense Hermitian matrices. Each rotation is a
// unitary 2x2 transform annihilating one off-diagonal pair; sweeps repeat
// until the off-diagonal Frobenius norm drops below 1e-12 of the matrix norm
// (hard cap 100 sweeps). Works for real symmetric and complex Hermitian
// scalar types alike.
template <typename MatrixType>
class HermitianEigenSolver {
 public:
  using Scalar = typename MatrixType::Scalar;

  explicit HermitianEigenSolver(const MatrixType& matrix, bool computeVectors = false) {
    compute(matrix, computeVectors);
  }

  const Spectrum& spectrum() const { return spectrum_; }
  const Eigen::VectorXd& eigenvalues() const { return spectrum_.values; }
  // Columns are unit eigenvectors matching eigenvalues() order.
  const MatrixType& eigenvectors() const {
    if (!hasVectors_) {
      throw InvalidArgument("HermitianEigenSolver: eigenvectors were not requested");
    }
    return vectors_;
  }
  bool converged() const { return converged_; }
  int sweeps() const { return sweeps_; }

 private:
  void compute(const MatrixType& matrix, bool computeVectors) {
    detail::ensure_hermitian(matrix, "HermitianEigenSolver");
    const Eigen::Index n = matrix.rows();
    hasVectors_ = computeVectors;
    if (n == 0) {
      spectrum_.values.resize(0);
      converged_ = true;
      return;
    }

    MatrixType h = ((matrix + matrix.adjoint()) / Scalar(2)).eval();
    MatrixType v;
    if (computeVectors) v = MatrixType::Identity(n, n);

    const double frob = h.norm();
    const double target = 1e-12 * frob;
    const double skip = n >= 1 ? 1e-13 * frob / static_cast<double>(n * n) : 0.0;

    converged_ = frob == 0.0;
    for (sweeps_ = 0; sweeps_ < 100 && !converged_; ++sweeps_) {
      double off = 0.0;
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) off += 2.0 * Eigen::numext::abs2(h(p, q));
      }
      if (std::sqrt(off) <= target) {
        converged_ = true;
        break;
      }
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          rotate(h, v, p, q, skip, computeVectors);
        }
      }
    }
    if (!converged_) {
      // One final norm check after the capped sweeps.
      double off = 0.0;
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) off += 2.0 * Eigen::numext::abs2(h(p, q));
      }
      converged_ = std::sqrt(off) <= target;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return Eigen::numext::real(h(a, a)) < Eigen::numext::real(h(b, b));
    });
    spectrum_.values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      spectrum_.values(i) = Eigen::numext::real(h(order[static_cast<std::size_t>(i)],
                                                   order[static_cast<std::size_t>(i)]));
    }
    if (computeVectors) {
      vectors_.resize(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        vectors_.col(i) = v.col(order[static_cast<std::size_t>(i)]);
      }
    }
  }

  static void rotate(MatrixType& h, MatrixType& v, Eigen::Index p, Eigen::Index q,
                     double skip, bool computeVectors) {
    const Scalar hpq = h(p, q);
    const double mag = Eigen::numext::abs(hpq);
    if (mag <= skip || mag == 0.0) return;

    const double app = Eigen::numext::real(h(p, p));
    const double aqq = Eigen::numext::real(h(q, q));
    const double theta = (app - aqq) / (2.0 * mag);
    const double sign = theta >= 0.0 ? 1.0 : -1.0;
    const double t = -sign / (std::abs(theta) + std::hypot(1.0, theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Scalar phase = hpq / Scalar(mag);
    const Scalar phaseConj = Eigen::numext::conj(phase);

    using ColVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

    const ColVec cp = h.col(p);
    const ColVec cq = h.col(q);
    h.col(p) = c * cp - (s * phaseConj) * cq;
    h.col(q) = (s * phase) * cp + c * cq;
    const RowVec rp = h.row(p);
    const RowVec rq = h.row(q);
    h.row(p) = c * rp - (s * phase) * rq;
    h.row(q) = (s * phaseConj) * rp + c * rq;

    h(p, q) = Scalar(0);
    h(q, p) = Scalar(0);
    h(p, p) = Scalar(Eigen::numext::real(h(p, p)));
    h(q, q) = Scalar(Eigen::numext::real(h(q, q)));

    if (computeVectors) {
      const ColVec vp = v.col(p);
      const ColVec vq = v.col(q);
      v.col(p) = c * vp - (s * phaseConj) * vq;
      v.col(q) = (s * phase) * vp + c * vq;
    }
  }

  Spectrum spectrum_;
  MatrixType vectors_;
  bool hasVectors_ = false;
  bool converged_ = false;
  int sweeps_ = 0;
};

// Convenience wrapper: all eigenvalues of a Hermitian expression, ascending.
template <typename Derived>
Spectrum eigenvalues(const Eigen::MatrixBase<Derived>& h) {
  using Plain = typename Derived::PlainObject;
  return HermitianEigenSolver<Plain>(h.eval()).spectrum();
}

}  // namespace gainlap
