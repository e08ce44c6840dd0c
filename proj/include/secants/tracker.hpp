#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "secants/classifier.hpp"
#include "secants/parameter_matrix.hpp"
#include "secants/types.hpp"

namespace secants {

// Knobs for predictor-corrector continuation. Residual thresholds are in the
// scale-invariant sense of scaled_residual(): a raw tolerance on |F| is
// meaningless when coordinates reach 10^1..10^2 and the monomial terms that
// cancel are ~10^5.
struct TrackerConfig {
  double initial_step = 0.05;
  double min_step = 1e-14;
  double corrector_tolerance = 1e-9;
  double refine_tolerance = 1e-13;
  int max_newton_iters = 12;
  int max_steps = 10000;
  cplx gamma{1.0, 0.0};  // start-system twist; use with_seed for a random one
  std::uint64_t seed = 0;

  // gamma drawn uniformly from the unit circle, deterministically from seed.
  static TrackerConfig with_seed(std::uint64_t seed);
  void validate() const;  // throws Error on nonsensical settings
};

// The solved base instance: ten refined representatives and their full orbit
// expansion, in representative-major order (path 4i+k starts at image k of
// representative i).
struct StartSet {
  ParameterMatrix base;
  std::array<SolutionPoint, 10> representatives;
  std::array<SolutionPoint, 40> full_set;
  std::array<double, 10> refinement_displacement{};
  std::array<bool, 10> displacement_flagged{};  // moved more than 1e-3
};

enum class PathStatus {
  Converged,
  StepUnderflow,
  MaxSteps,
  SingularEndpoint,
  DegenerateEndpoint,
};

const char* to_string(PathStatus s);

struct PathResult {
  PathStatus status = PathStatus::SingularEndpoint;
  SolutionPoint endpoint{};
  int steps_taken = 0;
  double final_residual = 0.0;  // scale-invariant
  std::string note;             // diagnostic detail for non-converged paths
};

// Newton iteration at fixed parameter matrix. Converges when the
// scale-invariant residual drops below tol; throws NoConvergenceError /
// SingularJacobianError otherwise.
SolutionPoint newton_refine(const ParameterMatrix& M, const SolutionPoint& x0,
                            double tol = 1e-13, int max_iters = 12);

// Refine the built-in base representatives against the built-in base matrix,
// expand orbits, and check the start-set invariants (pairwise separation,
// nondegeneracy, realness). Throws BootstrapError when the embedded data
// cannot be reproduced.
StartSet bootstrap_start_set(const TrackerConfig& cfg = TrackerConfig{});

// Track one solution of F(.; M_start) to F(.; M_target) along the segment
// M(a) = (1-a) * g * M_start + a * M_target, with g = cfg.gamma when
// use_gamma is set and 1 otherwise (monodromy edges must not be twisted).
// RK4 predictor on the Davidenko ODE, Newton corrector, adaptive step.
PathResult track_path(const ParameterMatrix& M_start, const ParameterMatrix& M_target,
                      const SolutionPoint& x_start, const TrackerConfig& cfg,
                      bool use_gamma = true);

// Outcome of a full 40-path parameter-homotopy solve. When generic is false
// the paths of the final attempt are kept for diagnosis and orbits is empty.
struct SolveResult {
  std::vector<PathResult> paths;   // 40, path 4i+k from start image k of rep i
  std::vector<OrbitRecord> orbits; // 10 when generic
  bool generic = false;
  std::string diagnostic;
  int attempts = 1;  // whole-solve retries consumed (fresh gamma each)

  // Throws NonGenericTargetError carrying the diagnostic when !generic.
  const SolveResult& require_generic() const;
};

// Track all forty start points to M_target and group the endpoints into ten
// orbits. A failed attempt (any path not Converged, or endpoints that do not
// form ten clean orbits) is retried with a fresh deterministic gamma and a
// smaller initial step, up to max_attempts total.
SolveResult solve_at_parameter(const ParameterMatrix& M_target, const StartSet& start,
                               const TrackerConfig& cfg, int threads = 1,
                               int max_attempts = 4);

// Roots of the cubic det(a M_a + (1-a) M_b) in the segment variable a, i.e.
// a runs 0 -> 1 from M_b to M_a. The edge "A-B" of a triangle loop is
// edge_determinant_roots(A, B). Root locations are orientation-dependent
// (a <-> 1-a); the advisory predicate is not.
struct EdgeRootsResult {
  std::array<cplx, 3> roots{};        // sorted by (Re, Im)
  bool advisory = false;              // a root is within 1e-3 of [0, 1]
  double min_segment_distance = 0.0;  // distance of nearest root to [0, 1]
};

// Sample det at a = 0, 1/3, 2/3, 1, interpolate the cubic, and return its
// roots (companion-matrix eigenvalues). Degenerate cubics (vanishing leading
// coefficient) throw DegenerateCubicError carrying the surviving root count.
EdgeRootsResult edge_determinant_roots(const ParameterMatrix& M_a,
                                       const ParameterMatrix& M_b);

}  // namespace secants
