#pragma once

#include <array>
#include <optional>
#include <vector>

#include "secants/classifier.hpp"
#include "secants/parameter_matrix.hpp"
#include "secants/types.hpp"

namespace secants {

// Threshold of Smale's alpha test: (13 - 3*sqrt(17)) / 4. A Newton iterate
// with alpha below this value converges quadratically to a unique nearby
// zero, and that zero lies within 2*beta of the iterate.
inline constexpr double kAlphaThreshold = 0.15767078078675424;

struct AlphaCertificate {
  SolutionPoint point;
  double alpha = 0.0;        // beta * gamma_bound
  double beta = 0.0;         // |J^-1 F|_2, the Newton step length
  double gamma_bound = 0.0;  // upper bound for sup_k |J^-1 D^k F / k!|^(1/(k-1))
  bool certified = false;
  bool strict = false;       // verdict established in exact rational arithmetic
};

// Certify x as an approximate zero at M. beta is exact up to rounding;
// gamma is bounded through majorants of the derivative tensors (the system
// has degree 6, so orders 2..6 contribute), with a 10x safety factor in
// floating-point mode. strict recomputes every comparison in exact rational
// arithmetic over the retained decimal entries (or the exact binary values).
AlphaCertificate alpha_test(const ParameterMatrix& M, const SolutionPoint& x,
                            bool strict = false);

struct DistinctnessCheck {
  bool distinct = false;
  int first = -1;  // offending pair when distinct is false
  int second = -1;
};

// True when every pair satisfies |x_i - x_j| > 2(beta_i + beta_j), which
// forces the associated exact zeros apart. Requires certified inputs.
// In strict mode uses the sufficient condition d^2 > 8(beta_i^2 + beta_j^2).
DistinctnessCheck certify_distinct(const std::vector<AlphaCertificate>& certs);

enum class RealityFlag { CertifiedReal, CertifiedNonreal, Undetermined };

const char* to_string(RealityFlag f);

// Decide whether the exact zero associated with cert is fixed by conjugation
// (real coordinate vector). For a real instance conj(x) approximates the
// conjugate zero, so:
//   |x - conj x| < 2 beta            -> CertifiedReal (same zero)
//   conj x within 2(beta_x + beta_j) of exactly one other certificate
//                                    -> CertifiedNonreal, partner = j
// Anything else is Undetermined. self is cert's index in all_certs.
RealityFlag certify_reality(const ParameterMatrix& M, const AlphaCertificate& cert,
                            const std::vector<AlphaCertificate>& all_certs, int self,
                            int* partner = nullptr);

struct CertificationReport {
  std::vector<AlphaCertificate> certificates;  // 40, orbit-major
  bool distinct = false;
  // Point-level verdict for each orbit's representative. A MinimallyReal
  // orbit is CertifiedNonreal here (its representative is a nonreal
  // coordinate vector) while still counting as a real line in the census.
  std::array<RealityFlag, 10> reality_flags{};
  std::array<std::optional<SecantClass>, 10> certified_class{};
  std::optional<TripleCount> census_certified;
  int refinement_rounds = 0;  // extra Newton rounds spent resolving flags
};

// Full certification of a solved instance: alpha test on all 40 points,
// pairwise distinctness, and the class of every orbit established by
// identifying which orbit image the conjugate zero equals. Orbits whose
// flags stay Undetermined are re-refined and retried up to 3 times; if any
// remain (or any alpha test fails on the inputs as given), throws
// CertificationIncompleteError naming them.
CertificationReport certify_census(const ParameterMatrix& M,
                                   const std::vector<OrbitRecord>& orbits,
                                   bool strict = false);

}  // namespace secants
