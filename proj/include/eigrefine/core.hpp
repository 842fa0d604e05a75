#pragma once

#include "eigrefine/types.hpp"

namespace eigrefine {

/// The three quantities tracked per iteration: relative right residual
/// ||AV - VD||_F / ||A||_F, biorthogonality error ||W^H V - I||_F, and
/// eigenvalue consistency ||diag(W^H A V) - diag(D)||_2 / ||A||_F.
/// The latter two are NaN when no left eigenvectors are available.
struct MetricRecord {
  double rel_residual = 0.0;
  double biorth_error = 0.0;
  double eig_consistency = 0.0;
};

/// Exact complex GEMM in binary64. Throws DimensionError on a shape mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

/// X with A X = B via partial-pivoted LU. A matrix whose LU factor has a
/// pivot with |u_kk| <= n * eps * max|a_ij| is reported as singular.
Matrix solve(const Matrix& a, const Matrix& b);

/// A^{-1} via partial-pivoted LU, same singularity criterion as solve().
Matrix inverse(const Matrix& a);

/// Frobenius norm, plain binary64 accumulation.
double fro_norm(const Matrix& a);

/// Minimum pairwise distance of the diagonal entries in the complex plane.
/// Zero iff two entries coincide exactly; requires at least two entries.
double sep(const Vector& d);

MetricRecord metrics(const Matrix& a, const Matrix& v, const Vector& d);
MetricRecord metrics(const Matrix& a, const Matrix& v, const Matrix& w,
                     const Vector& d);

}  // namespace eigrefine
