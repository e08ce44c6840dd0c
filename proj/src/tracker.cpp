#include "secants/tracker.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "secants/builtin_data.hpp"
#include "secants/philox.hpp"

namespace secants {

namespace {

constexpr double kDegenerateTol = 1e-8;
constexpr double kDivergenceNorm = 1e8;
constexpr double kStepCeiling = 0.1;

// 4x4 complex solve with a cheap singularity guard: the determinant from the
// LU diagonal measured against the entry scale. Near-singular systems still
// "succeed" here and are caught by the corrector instead.
bool lu_solve(const Mat4c& J, const Vec4c& rhs, Vec4c& out) {
  double scale = J.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !J.allFinite()) return false;
  Eigen::PartialPivLU<Mat4c> lu(J);
  double det = std::abs(lu.determinant());
  double s2 = scale * scale;
  if (!(det > 1e-14 * s2 * s2)) return false;
  out = lu.solve(rhs);
  return out.allFinite();
}

struct RefineOutcome {
  SolutionPoint x;
  double residual = 0.0;
  int iters = 0;
  bool ok = false;
  bool singular = false;
};

RefineOutcome refine_core(const Mat4c& m, const SolutionPoint& x0, double tol,
                          int max_iters) {
  RefineOutcome r;
  r.x = x0;
  r.residual = scaled_residual(m, r.x);
  while (r.residual >= tol && r.iters < max_iters) {
    Vec4c f = evaluate_system(m, r.x);
    Mat4c J = jacobian(m, r.x);
    Vec4c dx;
    if (!lu_solve(J, f, dx)) {
      r.singular = true;
      return r;
    }
    r.x = SolutionPoint::from_vec(r.x.vec() - dx);
    r.residual = scaled_residual(m, r.x);
    ++r.iters;
  }
  r.ok = r.residual < tol;
  return r;
}

bool endpoint_degenerate(const SolutionPoint& x) {
  return std::abs(x.t1 - x.t2) < kDegenerateTol || std::abs(x.s1 - x.s2) < kDegenerateTol;
}

}  // namespace

const char* to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Converged: return "Converged";
    case PathStatus::StepUnderflow: return "StepUnderflow";
    case PathStatus::MaxSteps: return "MaxSteps";
    case PathStatus::SingularEndpoint: return "SingularEndpoint";
    case PathStatus::DegenerateEndpoint: return "DegenerateEndpoint";
  }
  return "?";
}

TrackerConfig TrackerConfig::with_seed(std::uint64_t seed) {
  TrackerConfig cfg;
  cfg.seed = seed;
  cfg.gamma = PhiloxStream(seed, 0, purpose::kGamma).next_unit_complex();
  return cfg;
}

void TrackerConfig::validate() const {
  if (!(initial_step > 0.0) || initial_step > 1.0)
    throw Error("tracker: initial_step must lie in (0, 1]");
  if (!(min_step > 0.0) || min_step >= initial_step)
    throw Error("tracker: need 0 < min_step < initial_step");
  if (!(corrector_tolerance > 0.0) || !(refine_tolerance > 0.0))
    throw Error("tracker: tolerances must be positive");
  if (max_newton_iters < 1 || max_steps < 1)
    throw Error("tracker: iteration limits must be positive");
  if (std::abs(std::abs(gamma) - 1.0) > 1e-12)
    throw Error("tracker: gamma must lie on the unit circle");
}

SolutionPoint newton_refine(const ParameterMatrix& M, const SolutionPoint& x0,
                            double tol, int max_iters) {
  RefineOutcome r = refine_core(M.entries(), x0, tol, max_iters);
  if (r.singular)
    throw SingularJacobianError("newton_refine: linear solve failed (Jacobian singular)");
  if (!r.ok) {
    std::ostringstream os;
    os << "newton_refine: residual " << r.residual << " after " << r.iters
       << " iterations (tol " << tol << ")";
    throw NoConvergenceError(os.str());
  }
  return r.x;
}

StartSet bootstrap_start_set(const TrackerConfig& cfg) {
  cfg.validate();
  StartSet set{data::base_matrix(), {}, {}, {}, {}};
  const std::array<SolutionPoint, 10> literals = data::base_representatives();
  for (int i = 0; i < 10; ++i) {
    SolutionPoint refined;
    try {
      refined = newton_refine(set.base, literals[i], cfg.refine_tolerance,
                              cfg.max_newton_iters);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "bootstrap: representative " << i + 1 << " failed to refine: " << e.what();
      throw BootstrapError(os.str());
    }
    // Measure the Newton correction against the literal before switching to
    // the canonical labeling; relabeling is not a refinement move.
    double disp = distance(refined, literals[i]);
    set.refinement_displacement[i] = disp;
    set.displacement_flagged[i] = disp > 1e-3;
    refined = canonical_representative(refined);
    double max_imag = std::max(std::max(std::abs(refined.t1.imag()), std::abs(refined.t2.imag())),
                               std::max(std::abs(refined.s1.imag()), std::abs(refined.s2.imag())));
    if (max_imag > 1e-10) {
      std::ostringstream os;
      os << "bootstrap: representative " << i + 1 << " drifted off the real locus (|Im| = "
         << max_imag << ")";
      throw BootstrapError(os.str());
    }
    if (std::abs(refined.t1 - refined.t2) < 1e-6 || std::abs(refined.s1 - refined.s2) < 1e-6) {
      std::ostringstream os;
      os << "bootstrap: representative " << i + 1 << " is degenerate";
      throw BootstrapError(os.str());
    }
    set.representatives[i] = refined;
    std::array<SolutionPoint, 4> orbit = orbit_expand(refined);
    for (int k = 0; k < 4; ++k) set.full_set[4 * i + k] = orbit[k];
  }
  for (int i = 0; i < 40; ++i) {
    if (scaled_residual(set.base, set.full_set[i]) >= cfg.refine_tolerance)
      throw BootstrapError("bootstrap: an orbit image misses the residual bound");
    for (int j = i + 1; j < 40; ++j) {
      if (distance(set.full_set[i], set.full_set[j]) <= 1e-6) {
        std::ostringstream os;
        os << "bootstrap: start points " << i << " and " << j
           << " collide (orbit collision)";
        throw BootstrapError(os.str());
      }
    }
  }
  return set;
}

PathResult track_path(const ParameterMatrix& M_start, const ParameterMatrix& M_target,
                      const SolutionPoint& x_start, const TrackerConfig& cfg,
                      bool use_gamma) {
  cfg.validate();
  const cplx g = use_gamma ? cfg.gamma : cplx(1.0, 0.0);
  const Mat4c ms = g * M_start.entries();
  const Mat4c mt = M_target.entries();
  const Mat4c dm = mt - ms;  // dF/da, since F is linear in the matrix
  auto at = [&](double a) -> Mat4c { return (1.0 - a) * ms + a * mt; };

  PathResult out;
  SolutionPoint x = x_start;

  {
    RefineOutcome r0 = refine_core(ms, x, cfg.corrector_tolerance, 3);
    if (!r0.ok) {
      out.status = PathStatus::SingularEndpoint;
      out.endpoint = x;
      out.final_residual = r0.residual;
      out.note = "start point does not satisfy the start system";
      return out;
    }
    x = r0.x;
  }

  auto rhs = [&](double a, const Vec4c& xv, Vec4c& k) -> bool {
    SolutionPoint p = SolutionPoint::from_vec(xv);
    Vec4c dx;
    if (!lu_solve(jacobian(at(a), p), evaluate_system(dm, p), dx)) return false;
    k = -dx;
    return true;
  };

  double a = 0.0;
  double h = std::min(cfg.initial_step, kStepCeiling);
  int successes = 0;
  int attempts = 0;

  while (a < 1.0 - 1e-15) {
    if (++attempts > cfg.max_steps) {
      out.status = PathStatus::MaxSteps;
      out.endpoint = x;
      out.final_residual = scaled_residual(mt, x);
      std::ostringstream os;
      os << "step budget exhausted at a = " << a;
      out.note = os.str();
      return out;
    }
    const double hh = std::min(h, 1.0 - a);
    const Vec4c xv = x.vec();
    Vec4c k1, k2, k3, k4;
    bool predicted = rhs(a, xv, k1) && rhs(a + hh / 2, xv + (hh / 2) * k1, k2) &&
                     rhs(a + hh / 2, xv + (hh / 2) * k2, k3) &&
                     rhs(a + hh, xv + hh * k3, k4);
    bool accepted = false;
    if (predicted) {
      Vec4c xp = xv + (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      RefineOutcome rc =
          refine_core(at(a + hh), SolutionPoint::from_vec(xp), cfg.corrector_tolerance, 3);
      if (rc.ok) {
        x = rc.x;
        a += hh;
        ++out.steps_taken;
        accepted = true;
      }
    }
    if (!accepted) {
      h /= 2;
      successes = 0;
      if (h < cfg.min_step) {
        out.status = PathStatus::StepUnderflow;
        out.endpoint = x;
        out.final_residual = scaled_residual(mt, x);
        std::ostringstream os;
        os << "step underflow at a = " << a;
        out.note = os.str();
        return out;
      }
      continue;
    }
    if (x.vec().norm() > kDivergenceNorm) {
      out.status = PathStatus::SingularEndpoint;
      out.endpoint = x;
      out.final_residual = scaled_residual(mt, x);
      out.note = "path diverging (coordinate norm exceeded 1e8)";
      return out;
    }
    if (++successes >= 5) {
      h = std::min(h * 2, kStepCeiling);
      successes = 0;
    }
  }

  RefineOutcome rf = refine_core(mt, x, cfg.refine_tolerance, cfg.max_newton_iters);
  out.endpoint = rf.x;
  out.final_residual = rf.residual;
  if (!rf.ok) {
    out.status = PathStatus::SingularEndpoint;
    out.note = rf.singular ? "endpoint refinement hit a singular Jacobian"
                           : "endpoint refinement stalled above tolerance";
    return out;
  }
  if (endpoint_degenerate(rf.x)) {
    out.status = PathStatus::DegenerateEndpoint;
    out.note = "endpoint has coincident t or s parameters";
    return out;
  }
  out.status = PathStatus::Converged;
  return out;
}

const SolveResult& SolveResult::require_generic() const {
  if (!generic) throw NonGenericTargetError("non-generic target: " + diagnostic);
  return *this;
}

SolveResult solve_at_parameter(const ParameterMatrix& M_target, const StartSet& start,
                               const TrackerConfig& cfg, int threads, int max_attempts) {
  cfg.validate();
  threads = std::clamp(threads, 1, 40);
  if (max_attempts < 1) max_attempts = 1;

  SolveResult result;
  std::string last_reason;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    TrackerConfig acfg = cfg;
    if (attempt > 0) {
      // Fresh deterministic twist and a more cautious step for the retry.
      PhiloxStream gs(cfg.seed, std::uint64_t(attempt), purpose::kRetryGamma);
      acfg.gamma = gs.next_unit_complex();
      acfg.initial_step = cfg.initial_step / double(1 << attempt);
    }

    std::vector<PathResult> paths(40);
    if (threads == 1) {
      for (int i = 0; i < 40; ++i)
        paths[i] = track_path(start.base, M_target, start.full_set[i], acfg, true);
    } else {
      std::atomic<int> next{0};
      auto worker = [&]() {
        for (int i = next.fetch_add(1); i < 40; i = next.fetch_add(1))
          paths[i] = track_path(start.base, M_target, start.full_set[i], acfg, true);
      };
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    result.paths = std::move(paths);
    result.attempts = attempt + 1;

    int converged = 0;
    for (const PathResult& p : result.paths)
      if (p.status == PathStatus::Converged) ++converged;
    if (converged < 40) {
      std::ostringstream os;
      os << converged << "/40 paths converged";
      for (int i = 0; i < 40; ++i)
        if (result.paths[i].status != PathStatus::Converged) {
          os << "; path " << i << ": " << to_string(result.paths[i].status);
          break;
        }
      last_reason = os.str();
      continue;
    }

    try {
      std::vector<SolutionPoint> endpoints;
      endpoints.reserve(40);
      for (const PathResult& p : result.paths) endpoints.push_back(p.endpoint);
      std::vector<OrbitRecord> orbits = group_into_orbits(endpoints);
      for (OrbitRecord& o : orbits) o.residual = scaled_residual(M_target, o.representative);
      if (M_target.is_real()) pair_conjugate_orbits(orbits);
      result.orbits = std::move(orbits);
      result.generic = true;
      result.diagnostic.clear();
      return result;
    } catch (const OrbitMismatchError& e) {
      last_reason = e.what();
    } catch (const AmbiguousRealityError& e) {
      last_reason = e.what();
    } catch (const ConjugationMismatchError& e) {
      last_reason = e.what();
    } catch (const ParityViolationError& e) {
      last_reason = e.what();
    }
  }

  result.generic = false;
  result.orbits.clear();
  result.diagnostic = last_reason.empty() ? "tracking failed" : last_reason;
  return result;
}

EdgeRootsResult edge_determinant_roots(const ParameterMatrix& M_a,
                                       const ParameterMatrix& M_b) {
  const Mat4c& A = M_a.entries();
  const Mat4c& B = M_b.entries();
  const std::array<double, 4> nodes = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};

  Eigen::Vector4cd values;
  Eigen::Matrix4cd vand;
  for (int k = 0; k < 4; ++k) {
    values(k) = Mat4c(nodes[k] * A + (1.0 - nodes[k]) * B).determinant();
    double p = 1.0;
    for (int j = 0; j < 4; ++j, p *= nodes[k]) vand(k, j) = p;
  }
  Eigen::Vector4cd coeff = vand.partialPivLu().solve(values);

  const double scale = std::max(coeff.cwiseAbs().maxCoeff(), values.cwiseAbs().maxCoeff());
  int degree = 3;
  while (degree > 0 && std::abs(coeff(degree)) <= 1e-10 * scale) --degree;
  if (degree < 3) {
    std::ostringstream os;
    os << "edge determinant is not a genuine cubic: only " << degree << " roots";
    throw DegenerateCubicError(os.str(), degree);
  }

  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  for (int i = 0; i < 3; ++i) companion(i, 2) = -coeff(i) / coeff(3);
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> eigen(companion, false);

  EdgeRootsResult out;
  for (int i = 0; i < 3; ++i) out.roots[i] = eigen.eigenvalues()(i);
  std::sort(out.roots.begin(), out.roots.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  double closest = std::numeric_limits<double>::infinity();
  for (const cplx& r : out.roots) {
    double d = (r.real() >= 0.0 && r.real() <= 1.0)
                   ? std::abs(r.imag())
                   : std::min(std::abs(r), std::abs(r - cplx(1.0, 0.0)));
    closest = std::min(closest, d);
  }
  out.min_segment_distance = closest;
  out.advisory = closest < 1e-3;
  return out;
}

}  // namespace secants
