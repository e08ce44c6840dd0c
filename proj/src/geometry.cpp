#include "secants/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace secants {

MomentVector moment_vector(cplx a) {
  MomentVector mv;
  mv.a = a;
  mv.v(0) = 1.0;
  for (int k = 1; k < 4; ++k) mv.v(k) = a * mv.v(k - 1);
  return mv;
}

cplx row_cubic(const ParameterMatrix& M, int i, cplx s) {
  if (i < 1 || i > 4) throw Error("row_cubic: row index must be in 1..4");
  const Mat4c& m = M.entries();
  // Horner
  return ((m(i - 1, 3) * s + m(i - 1, 2)) * s + m(i - 1, 1)) * s + m(i - 1, 0);
}

cplx row_cubic_deriv(const ParameterMatrix& M, int i, cplx s) {
  if (i < 1 || i > 4) throw Error("row_cubic_deriv: row index must be in 1..4");
  const Mat4c& m = M.entries();
  return (3.0 * m(i - 1, 3) * s + 2.0 * m(i - 1, 2)) * s + m(i - 1, 1);
}

namespace {

struct RowVals {
  cplx p1, p2, p3, p4;
};

RowVals rows_at(const Mat4c& m, cplx s) {
  RowVals r;
  cplx s2 = s * s, s3 = s2 * s;
  r.p1 = m(0, 0) + m(0, 1) * s + m(0, 2) * s2 + m(0, 3) * s3;
  r.p2 = m(1, 0) + m(1, 1) * s + m(1, 2) * s2 + m(1, 3) * s3;
  r.p3 = m(2, 0) + m(2, 1) * s + m(2, 2) * s2 + m(2, 3) * s3;
  r.p4 = m(3, 0) + m(3, 1) * s + m(3, 2) * s2 + m(3, 3) * s3;
  return r;
}

double row_abs_at(const Mat4c& m, int i, double as) {
  double as2 = as * as, as3 = as2 * as;
  return std::abs(m(i, 0)) + std::abs(m(i, 1)) * as + std::abs(m(i, 2)) * as2 +
         std::abs(m(i, 3)) * as3;
}

cplx row_deriv_at(const Mat4c& m, int i, cplx s) {
  return m(i, 1) + 2.0 * m(i, 2) * s + 3.0 * m(i, 3) * s * s;
}

}  // namespace

Vec4c evaluate_system(const Mat4c& m, const SolutionPoint& x) {
  cplx e1 = x.t1 + x.t2;            // elementary symmetric functions of t
  cplx e2 = x.t1 * x.t2;
  cplx q = e1 * e1 - e2;            // t1^2 + t1 t2 + t2^2
  cplx c = e2 * e1;                 // t1 t2 (t1 + t2)
  RowVals a = rows_at(m, x.s1);
  RowVals b = rows_at(m, x.s2);
  Vec4c f;
  f(0) = a.p3 - e1 * a.p2 + e2 * a.p1;
  f(1) = b.p3 - e1 * b.p2 + e2 * b.p1;
  f(2) = a.p4 - q * a.p2 + c * a.p1;
  f(3) = b.p4 - q * b.p2 + c * b.p1;
  return f;
}

Vec4c evaluate_system(const ParameterMatrix& M, const SolutionPoint& x) {
  return evaluate_system(M.entries(), x);
}

Eigen::Vector4d evaluation_scales(const Mat4c& m, const SolutionPoint& x) {
  double e1 = std::abs(x.t1) + std::abs(x.t2);
  double e2 = std::abs(x.t1) * std::abs(x.t2);
  double q = std::abs(x.t1) * std::abs(x.t1) + e2 + std::abs(x.t2) * std::abs(x.t2);
  double c = e2 * e1;
  double as1 = std::abs(x.s1), as2 = std::abs(x.s2);
  Eigen::Vector4d sc;
  sc(0) = row_abs_at(m, 2, as1) + e1 * row_abs_at(m, 1, as1) + e2 * row_abs_at(m, 0, as1);
  sc(1) = row_abs_at(m, 2, as2) + e1 * row_abs_at(m, 1, as2) + e2 * row_abs_at(m, 0, as2);
  sc(2) = row_abs_at(m, 3, as1) + q * row_abs_at(m, 1, as1) + c * row_abs_at(m, 0, as1);
  sc(3) = row_abs_at(m, 3, as2) + q * row_abs_at(m, 1, as2) + c * row_abs_at(m, 0, as2);
  return sc.cwiseMax(1.0);
}

Eigen::Vector4d evaluation_scales(const ParameterMatrix& M, const SolutionPoint& x) {
  return evaluation_scales(M.entries(), x);
}

double scaled_residual(const Mat4c& m, const SolutionPoint& x) {
  Vec4c f = evaluate_system(m, x);
  Eigen::Vector4d sc = evaluation_scales(m, x);
  return (f.cwiseAbs().array() / sc.array()).matrix().norm();
}

double scaled_residual(const ParameterMatrix& M, const SolutionPoint& x) {
  return scaled_residual(M.entries(), x);
}

Mat4c jacobian(const Mat4c& m, const SolutionPoint& x) {
  RowVals a = rows_at(m, x.s1);
  RowVals b = rows_at(m, x.s2);
  cplx da1 = row_deriv_at(m, 0, x.s1), db1 = row_deriv_at(m, 0, x.s2);
  cplx da2 = row_deriv_at(m, 1, x.s1), db2 = row_deriv_at(m, 1, x.s2);
  cplx da3 = row_deriv_at(m, 2, x.s1), db3 = row_deriv_at(m, 2, x.s2);
  cplx da4 = row_deriv_at(m, 3, x.s1), db4 = row_deriv_at(m, 3, x.s2);
  cplx e1 = x.t1 + x.t2, e2 = x.t1 * x.t2;
  cplx q = e1 * e1 - e2, c = e2 * e1;

  Mat4c J = Mat4c::Zero();
  // f1 rows: d/dt1 = -p2 + t2 p1, d/dt2 = -p2 + t1 p1, d/ds = p3' - e1 p2' + e2 p1'
  J(0, 0) = -a.p2 + x.t2 * a.p1;
  J(0, 1) = -a.p2 + x.t1 * a.p1;
  J(0, 2) = da3 - e1 * da2 + e2 * da1;
  J(1, 0) = -b.p2 + x.t2 * b.p1;
  J(1, 1) = -b.p2 + x.t1 * b.p1;
  J(1, 3) = db3 - e1 * db2 + e2 * db1;
  // f2 rows: d/dt1 = -(2t1+t2) p2 + (2 t1 t2 + t2^2) p1, symmetric for t2,
  //          d/ds = p4' - q p2' + c p1'
  cplx dq1 = 2.0 * x.t1 + x.t2, dq2 = x.t1 + 2.0 * x.t2;
  cplx dc1 = x.t2 * (2.0 * x.t1 + x.t2), dc2 = x.t1 * (x.t1 + 2.0 * x.t2);
  J(2, 0) = -dq1 * a.p2 + dc1 * a.p1;
  J(2, 1) = -dq2 * a.p2 + dc2 * a.p1;
  J(2, 2) = da4 - q * da2 + c * da1;
  J(3, 0) = -dq1 * b.p2 + dc1 * b.p1;
  J(3, 1) = -dq2 * b.p2 + dc2 * b.p1;
  J(3, 3) = db4 - q * db2 + c * db1;
  return J;
}

Mat4c jacobian(const ParameterMatrix& M, const SolutionPoint& x) {
  return jacobian(M.entries(), x);
}

std::array<SolutionPoint, 4> orbit_expand(const SolutionPoint& x) {
  return {x, x.swap_t(), x.swap_s(), x.swap_t().swap_s()};
}

namespace {

std::array<double, 8> lex_key(const SolutionPoint& p) {
  return {p.t1.real(), p.t1.imag(), p.t2.real(), p.t2.imag(),
          p.s1.real(), p.s1.imag(), p.s2.real(), p.s2.imag()};
}

}  // namespace

SolutionPoint canonical_representative(const SolutionPoint& x) {
  auto orb = orbit_expand(x);
  return *std::min_element(orb.begin(), orb.end(),
                           [](const SolutionPoint& a, const SolutionPoint& b) {
                             return lex_key(a) < lex_key(b);
                           });
}

std::array<cplx, 3> standard_cubic_membership(const Vec4c& p) {
  if (p.cwiseAbs().maxCoeff() == 0.0)
    throw Error("standard_cubic_membership: zero vector has no projective class");
  return {p(1) * p(1) - p(0) * p(2),
          p(1) * p(2) - p(0) * p(3),
          p(1) * p(3) - p(2) * p(2)};
}

namespace {

Vec4c normalize_span_vector(const Vec4c& v) {
  Vec4c u = v / v.norm();
  for (int k = 0; k < 4; ++k) {
    double a = std::abs(u(k));
    if (a > 0.0) {
      u *= std::conj(u(k)) / a;  // rotate first nonzero coordinate real-positive
      break;
    }
  }
  return u;
}

}  // namespace

SecantLine secant_line(const SolutionPoint& x, double degeneracy_tol) {
  if (std::abs(x.t1 - x.t2) < degeneracy_tol)
    throw DegenerateSecantError("secant_line: t1 and t2 coincide within tolerance");
  return {normalize_span_vector(moment_vector(x.t1).v),
          normalize_span_vector(moment_vector(x.t2).v)};
}

}  // namespace secants
