#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qtel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kImag{0.0, 1.0};

// Tolerance for algebraic identities in double precision (all matrices here
// are at most a few hundred square, so this leaves ample headroom).
inline constexpr double kAlgebraTol = 1e-12;

// A linear solve or eigendecomposition failed to meet its residual bound.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtel
