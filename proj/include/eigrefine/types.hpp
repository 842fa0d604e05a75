#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace eigrefine {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // dense complex, binary64 components
using Vector = Eigen::VectorXcd;   // diagonal matrices are stored as vectors
using Index = Eigen::Index;

// Provenance of the stored values: either native binary64, or values that
// were rounded to binary32 and widened back (the emulated single-precision
// initial solve). Rounded data is still carried in binary64 components.
enum class Precision { binary64, rounded_from_binary32 };

// Which approximate quantities the initial eigensolver provided.
enum class Regime { right_only, left_right };

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A factorization ran into a matrix that is singular to working precision.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shifted eigenvalues coincide exactly; the componentwise correction has a
// zero denominator and the caller should have routed to the cluster path.
struct CoincidentEigenvalueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The projected cluster block could not be re-diagonalized.
struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigensolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MtxFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InitializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True when every real and imaginary part is exactly representable in
// binary32 (the invariant of rounded_from_binary32 data).
bool representable_in_binary32(const Matrix& m);
bool representable_in_binary32(const Vector& v);

}  // namespace eigrefine
