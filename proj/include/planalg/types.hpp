#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace planalg {

using Real = double;
using Complex = std::complex<Real>;

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat2 = Eigen::Matrix2cd;

inline constexpr Real kPi = 3.14159265358979323846;

/// Base of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point on or outside the boundary, or an unsupported domain.
struct DomainError : Error {
  using Error::Error;
};

/// Argument outside its admissible range (|mu| > 1, bad truncation, ...).
struct ParameterError : Error {
  using Error::Error;
};

/// Coincident nodes, singular Gram blocks, clustered eigenvalues.
struct DegenerateError : Error {
  using Error::Error;
};

/// Rational function with a pole on the closed domain / singular q(T).
struct PoleError : Error {
  using Error::Error;
};

/// Numerical conditioning beyond the documented limits.
struct ConditioningError : Error {
  using Error::Error;
};

/// Matrix does not have the structural form an operation requires.
struct ShapeError : Error {
  using Error::Error;
};

/// Subspace fails to be numerically co-invariant under the adjoint shift.
struct CoinvarianceError : Error {
  using Error::Error;
};

namespace defaults {
inline constexpr int kTruncation = 200;
inline constexpr int kGridSize = 128;
inline constexpr int kQuadraturePoints = 512;
inline constexpr int kMaxDegree = 5;
}  // namespace defaults

namespace tol {
// PSD feasibility: lambda_min >= -kPsdRel * trace counts as feasible.
inline constexpr Real kPsdRel = 1e-10;
// |lambda_min| <= kMarginalRel * trace flags a boundary-case verdict.
inline constexpr Real kMarginalRel = 1e-8;
inline constexpr Real kReproducingDefect = 1e-8;
inline constexpr Real kHermitian = 1e-12;
inline constexpr Real kOrthonormal = 1e-10;
inline constexpr Real kCoinvarianceDefect = 1e-6;
inline constexpr Real kPoleMargin = 1e-9;
inline constexpr Real kEigvecCondLimit = 1e8;
inline constexpr Real kEigGapLimit = 1e-6;
inline constexpr Real kWeightedGramCond = 1e10;
inline constexpr Real kModulusMatch = 1e-12;
inline constexpr Real kKernelQuotientFloor = 1e-14;
}  // namespace tol

}  // namespace planalg
