#pragma once

#include "eigrefine/core.hpp"
#include "eigrefine/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eigrefine {

/// Approximate eigendecomposition being refined: right eigenvectors V,
/// optional left eigenvectors W (left_right regime), eigenvalues d.
struct EigenTriple {
  Matrix V;
  std::optional<Matrix> W;
  Vector d;
  Regime regime = Regime::right_only;
  Precision precision = Precision::binary64;
};

// How the driving matrix Y is realized. The first three require the
// right_only regime, w_method requires left_right.
enum class DrivingMode { direct_solve, fixed_inverse, updated_inverse, w_method };

enum class BiorthoMode { none, exact, first_order };

struct RefineConfig {
  Regime regime = Regime::right_only;
  DrivingMode driving_mode = DrivingMode::direct_solve;
  // Separation guard on the shifted eigenvalues. With sep_threshold_relative
  // the trigger level is sep_threshold * max_i |d~_i|; the cluster
  // experiments override with an absolute value.
  double sep_threshold = 1e-6;
  bool sep_threshold_relative = true;
  // Cluster detection threshold (absolute distance in the complex plane).
  double cluster_delta = 1e-6;
  int max_iters = 5;
  // Stop once rel_residual <= stop_rel_residual; 0 runs out max_iters.
  double stop_rel_residual = 0.0;
  BiorthoMode biortho_preprocess = BiorthoMode::none;
  // Re-apply exact biorthogonalization after every left-right step.
  bool rebiortho_each_iter = false;
  // Run the cluster-aware step (detection + projected re-diagonalization +
  // intracluster suppression + trailing exact biorthogonalization) on every
  // iteration instead of escalating only when the separation guard fires.
  bool cluster_aware = false;

  void validate() const;  // throws std::invalid_argument on bad pairings
};

/// Per-step byproducts: driving matrix Y, right correction E (zero diagonal),
/// optional left correction F, shifted eigenvalues, separation value, and
/// whether the separation guard fired (in which case no componentwise update
/// was applied and the caller escalates to the cluster path).
struct StepArtifacts {
  Matrix Y;
  Matrix E;
  std::optional<Matrix> F;
  Vector d_new;
  double sep_value = 0.0;
  bool cluster_triggered = false;
};

struct IterationReport {
  int iteration = 0;
  MetricRecord metrics;
};

enum class RefineStatus { iteration_limit, reached_tolerance, aborted_nonfinite };

struct RefineResult {
  EigenTriple triple;
  std::vector<IterationReport> reports;  // index 0 is the initial state
  RefineStatus status = RefineStatus::iteration_limit;
  std::string diagnostic;  // set when the run aborted

  bool converged() const { return status != RefineStatus::aborted_nonfinite; }
};

struct StepResult {
  EigenTriple triple;
  StepArtifacts artifacts;
  std::optional<Matrix> m_state;  // approximate inverse carried across steps
};

/// R = A V - V D.
Matrix residual(const Matrix& a, const EigenTriple& t);

/// Right-only driving matrix. direct_solve solves V Y = R; the two inverse
/// modes multiply by the maintained approximation m_state (which this
/// function only consumes; updated_inverse refreshes it inside right_step).
Matrix driving_right(const Matrix& a, const EigenTriple& t, DrivingMode mode,
                     const std::optional<Matrix>& m_state);

/// Left-right driving matrix Y = W^H (A V - V D).
Matrix driving_w(const Matrix& a, const EigenTriple& t);

struct ShiftResult {
  Vector d_new;
  double sep_value = 0.0;
  bool cluster_triggered = false;
};

/// d~_i = d_i + y_ii, plus the separation of the shifted values and whether
/// it fell below the (absolute) threshold.
ShiftResult shift_and_sep(const Vector& d, const Matrix& y, double threshold);

/// Componentwise correction e_ij = y_ij / (d~_j - d~_i), zero diagonal.
/// Throws CoincidentEigenvalueError when a denominator is exactly zero.
Matrix offdiag_correction(const Matrix& y, const Vector& d_new);

/// Left correction F with F^H = -(W^H V - I + E); the argument is that sum.
Matrix left_correction(const Matrix& delta_plus_e);

/// One refinement step in the right-only regime. When the separation guard
/// fires the input triple is returned unchanged with the flag set.
StepResult right_step(const Matrix& a, const EigenTriple& t,
                      const RefineConfig& config,
                      std::optional<Matrix> m_state);

/// One refinement step in the left-right regime (both V and W updated).
StepResult w_step(const Matrix& a, const EigenTriple& t,
                  const RefineConfig& config);

/// W <- W S^{-H} with S = W^H V, making ||W^H V - I||_F roundoff-small.
EigenTriple biorthogonalize_exact(const EigenTriple& t);

/// First-order variant: split S = Sigma + G (Sigma = diag(S)) and apply
/// W <- W Sigma^{-H} (I - Sigma^{-H} G^H); the residual defect is O(||G||^2).
EigenTriple biorthogonalize_first_order(const EigenTriple& t);

/// Full refinement driver: optional one-time biorthogonalization
/// preprocessing, then iterates the configured step, recording metrics per
/// iteration (index 0 is the state before preprocessing). A step that
/// reports cluster_triggered escalates to the cluster-aware step. Non-finite
/// metrics abort the run with a diagnostic instead of propagating NaNs.
RefineResult refine_loop(const Matrix& a, const EigenTriple& t,
                         const RefineConfig& config);

}  // namespace eigrefine
