#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace secants {

using cplx = std::complex<double>;
using Vec4c = Eigen::Vector4cd;
using Mat4c = Eigen::Matrix4cd;

// A candidate common-secant solution (t1,t2,s1,s2): the line through the
// standard cubic at parameters t1,t2 meets the second cubic at s1,s2.
struct SolutionPoint {
  cplx t1, t2, s1, s2;

  Vec4c vec() const { return Vec4c(t1, t2, s1, s2); }
  static SolutionPoint from_vec(const Vec4c& v) { return {v(0), v(1), v(2), v(3)}; }

  SolutionPoint conj() const {
    return {std::conj(t1), std::conj(t2), std::conj(s1), std::conj(s2)};
  }
  SolutionPoint swap_t() const { return {t2, t1, s1, s2}; }
  SolutionPoint swap_s() const { return {t1, t2, s2, s1}; }
};

inline double distance(const SolutionPoint& a, const SolutionPoint& b) {
  return (a.vec() - b.vec()).norm();
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error { using Error::Error; };
struct DegenerateSecantError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct SingularJacobianError : Error { using Error::Error; };
struct BootstrapError : Error { using Error::Error; };
struct NonGenericTargetError : Error { using Error::Error; };
struct OrbitMismatchError : Error { using Error::Error; };
struct AmbiguousRealityError : Error { using Error::Error; };
struct ConjugationMismatchError : Error { using Error::Error; };
struct ParityViolationError : Error { using Error::Error; };
struct InadmissibleTupleError : Error { using Error::Error; };
struct LoopFailureError : Error { using Error::Error; };
struct AmbiguousMatchingError : Error { using Error::Error; };

// Thrown when an interpolated edge determinant has fewer than three finite
// roots; root_count is the degree that survived after dropping vanishing
// leading coefficients.
struct DegenerateCubicError : Error {
  DegenerateCubicError(const std::string& what, int count)
      : Error(what), root_count(count) {}
  int root_count;
};
struct SamplingExhaustedError : Error { using Error::Error; };
struct CertificationIncompleteError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

}  // namespace secants
