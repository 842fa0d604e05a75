#include "eigrefine/core.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace eigrefine {

namespace {

// Singular-to-working-precision test on a computed LU factor:
// |u_kk| <= n * eps * max|a_ij|.
void require_nonsingular(const Eigen::PartialPivLU<Matrix>& lu, const Matrix& a,
                         const char* op) {
  const double amax = a.size() > 0 ? a.cwiseAbs().maxCoeff() : 0.0;
  const double tol = static_cast<double>(a.rows()) *
                     std::numeric_limits<double>::epsilon() * amax;
  const double umin = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (umin <= tol) {
    throw SingularMatrixError(std::string(op) +
                              ": matrix is singular to working precision");
  }
}

}  // namespace

bool representable_in_binary32(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (static_cast<double>(static_cast<float>(z.real())) != z.real() ||
          static_cast<double>(static_cast<float>(z.imag())) != z.imag()) {
        return false;
      }
    }
  }
  return true;
}

bool representable_in_binary32(const Vector& v) {
  return representable_in_binary32(static_cast<const Matrix&>(v.matrix()));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  return a * b;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols()) {
    throw DimensionError("solve: coefficient matrix must be square");
  }
  if (b.rows() != a.rows()) {
    throw DimensionError("solve: right-hand side has incompatible row count");
  }
  Eigen::PartialPivLU<Matrix> lu(a);
  require_nonsingular(lu, a, "solve");
  return lu.solve(b);
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("inverse: matrix must be square");
  }
  Eigen::PartialPivLU<Matrix> lu(a);
  require_nonsingular(lu, a, "inverse");
  return lu.inverse();
}

double fro_norm(const Matrix& a) { return a.norm(); }

double sep(const Vector& d) {
  const Index n = d.size();
  if (n < 2) {
    throw DimensionError("sep: needs at least two diagonal entries");
  }
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      best = std::min(best, std::abs(d(i) - d(j)));
    }
  }
  return best;
}

namespace {

MetricRecord metrics_impl(const Matrix& a, const Matrix& v, const Matrix* w,
                          const Vector& d) {
  if (a.rows() != a.cols() || v.rows() != a.rows() || v.cols() != d.size()) {
    throw DimensionError("metrics: A, V, D shapes are inconsistent");
  }
  if (w != nullptr && (w->rows() != v.rows() || w->cols() != v.cols())) {
    throw DimensionError("metrics: W does not conform with V");
  }
  MetricRecord rec;
  const double a_norm = a.norm();
  const Matrix av = a * v;
  rec.rel_residual = (av - v * d.asDiagonal()).norm() / a_norm;
  if (w == nullptr) {
    rec.biorth_error = std::numeric_limits<double>::quiet_NaN();
    rec.eig_consistency = std::numeric_limits<double>::quiet_NaN();
    return rec;
  }
  Matrix gram = w->adjoint() * v;
  gram.diagonal().array() -= Complex(1.0, 0.0);
  rec.biorth_error = gram.norm();
  // diag(W^H A V) via columnwise dots against the already-formed A V.
  Vector projected(d.size());
  for (Index i = 0; i < d.size(); ++i) {
    projected(i) = w->col(i).dot(av.col(i));  // conjugates w
  }
  rec.eig_consistency = (projected - d).norm() / a_norm;
  return rec;
}

}  // namespace

MetricRecord metrics(const Matrix& a, const Matrix& v, const Vector& d) {
  return metrics_impl(a, v, nullptr, d);
}

MetricRecord metrics(const Matrix& a, const Matrix& v, const Matrix& w,
                     const Vector& d) {
  return metrics_impl(a, v, &w, d);
}

}  // namespace eigrefine
