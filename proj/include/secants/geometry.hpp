#pragma once

#include <array>

#include "secants/parameter_matrix.hpp"
#include "secants/types.hpp"

namespace secants {

// (1, a, a^2, a^3): the affine chart of the standard twisted cubic.
struct MomentVector {
  cplx a;
  Vec4c v;
};

MomentVector moment_vector(cplx a);

// p_i(s) = m_i1 + m_i2 s + m_i3 s^2 + m_i4 s^3, i in 1..4.
cplx row_cubic(const ParameterMatrix& M, int i, cplx s);
cplx row_cubic_deriv(const ParameterMatrix& M, int i, cplx s);

// The four residuals (f1 at s1, f1 at s2, f2 at s1, f2 at s2) whose common
// zeros are the secants meeting both curves:
//   f1 = p3 - (t1+t2) p2 + t1 t2 p1
//   f2 = p4 - (t1^2 + t1 t2 + t2^2) p2 + t1 t2 (t1+t2) p1
// Derived from the 3x3 minors of [v(t1) v(t2) M v(s)] on rows {1,2,3} and
// {1,2,4}, after removing the common factor t2 - t1.
Vec4c evaluate_system(const ParameterMatrix& M, const SolutionPoint& x);

// Raw-matrix overloads: the system is linear in M, so homotopy code needs to
// evaluate at matrix combinations that are not themselves valid parameters.
Vec4c evaluate_system(const Mat4c& m, const SolutionPoint& x);
Mat4c jacobian(const Mat4c& m, const SolutionPoint& x);
Eigen::Vector4d evaluation_scales(const Mat4c& m, const SolutionPoint& x);
double scaled_residual(const Mat4c& m, const SolutionPoint& x);

// Backward-error scale of each residual row: the sum of the magnitudes of the
// monomial terms feeding it, floored at 1.  |f_i| / scale_i is a relative
// residual that stays meaningful when coordinates or entries are large.
Eigen::Vector4d evaluation_scales(const ParameterMatrix& M, const SolutionPoint& x);

// ||f_i / max(1, scale_i)||_2 — the convergence measure used by Newton
// refinement and path tracking.
double scaled_residual(const ParameterMatrix& M, const SolutionPoint& x);

// Analytic Jacobian of evaluate_system with respect to (t1,t2,s1,s2).
Mat4c jacobian(const ParameterMatrix& M, const SolutionPoint& x);

// The four labelings {t1<->t2} x {s1<->s2} of one geometric secant.
std::array<SolutionPoint, 4> orbit_expand(const SolutionPoint& x);

// Orbit member minimizing (Re t1, Im t1, Re t2, Im t2, Re s1, ...) lexicographically.
SolutionPoint canonical_representative(const SolutionPoint& x);

// Quadric generators of the standard cubic's ideal evaluated at p:
// (p1^2 - p0 p2, p1 p2 - p0 p3, p1 p3 - p2^2); all zero iff [p] lies on the curve.
std::array<cplx, 3> standard_cubic_membership(const Vec4c& p);

// Span basis of the line through v(t1), v(t2), each vector normalized to unit
// norm with its first nonzero coordinate rotated real-positive.
struct SecantLine {
  Vec4c basis0, basis1;
};

SecantLine secant_line(const SolutionPoint& x, double degeneracy_tol = 1e-8);

}  // namespace secants
