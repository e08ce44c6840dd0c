#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "secants/builtin_data.hpp"
#include "secants/geometry.hpp"
#include "secants/philox.hpp"
#include "secants/sampler.hpp"

#include "properties.hpp"

using namespace secants;

namespace {

ParameterMatrix identity_matrix() {
  return ParameterMatrix::from_entries(Mat4c::Identity());
}

// Independent restatement of the residual rows through the row cubics
// p_i(s) = sum_j m_ij s^(j-1).
cplx oracle_row_cubic(const ParameterMatrix& M, int i, cplx s) {
  cplx acc = 0.0, p = 1.0;
  for (int j = 0; j < 4; ++j, p *= s) acc += M.entry(i - 1, j) * p;
  return acc;
}

Vec4c oracle_system(const ParameterMatrix& M, const SolutionPoint& x) {
  auto f1 = [&](cplx s) {
    return oracle_row_cubic(M, 3, s) - (x.t1 + x.t2) * oracle_row_cubic(M, 2, s) +
           x.t1 * x.t2 * oracle_row_cubic(M, 1, s);
  };
  auto f2 = [&](cplx s) {
    return oracle_row_cubic(M, 4, s) -
           (x.t1 * x.t1 + x.t1 * x.t2 + x.t2 * x.t2) * oracle_row_cubic(M, 2, s) +
           x.t1 * x.t2 * (x.t1 + x.t2) * oracle_row_cubic(M, 1, s);
  };
  return Vec4c(f1(x.s1), f1(x.s2), f2(x.s1), f2(x.s2));
}

// 3x3 determinant of the rows (r0,r1,r2) of the 4x3 matrix
// [v(t1) v(t2) M v(s)]; dividing by (t2 - t1) must reproduce the residual
// rows. This is the defining construction, computed independently.
cplx minor_residual(const ParameterMatrix& M, const SolutionPoint& x, cplx s, int r2) {
  Vec4c c0 = moment_vector(x.t1).v;
  Vec4c c1 = moment_vector(x.t2).v;
  Vec4c c2 = M.entries() * moment_vector(s).v;
  auto det3 = [&](int a, int b, int c) {
    return c0(a) * (c1(b) * c2(c) - c1(c) * c2(b)) -
           c1(a) * (c0(b) * c2(c) - c0(c) * c2(b)) +
           c2(a) * (c0(b) * c1(c) - c0(c) * c1(b));
  };
  return det3(0, 1, r2) / (x.t2 - x.t1);
}

}  // namespace

TEST_CASE("moment vector powers") {
  MomentVector m = moment_vector(2.0);
  CHECK(m.v(0) == cplx(1.0));
  CHECK(m.v(1) == cplx(2.0));
  CHECK(m.v(2) == cplx(4.0));
  CHECK(m.v(3) == cplx(8.0));
  CHECK((moment_vector(0.0).v - Vec4c(1, 0, 0, 0)).norm() == 0.0);

  MomentVector c = moment_vector(cplx(1, 1));
  CHECK(std::abs(c.v(2) - cplx(0, 2)) < 1e-15);
  CHECK(std::abs(c.v(3) - cplx(-2, 2)) < 1e-15);
}

TEST_CASE("row cubics match their coefficient rows") {
  const ParameterMatrix& M = data::base_matrix();
  PhiloxStream g(11, 0, props::kTestPurpose);
  for (int trial = 0; trial < 20; ++trial) {
    cplx s(g.next_gaussian(), g.next_gaussian());
    for (int i = 1; i <= 4; ++i) {
      cplx want = oracle_row_cubic(M, i, s);
      CHECK(std::abs(row_cubic(M, i, s) - want) <= 1e-12 * (1.0 + std::abs(want)));
      // derivative: m_i2 + 2 m_i3 s + 3 m_i4 s^2
      cplx d = M.entry(i - 1, 1) + 2.0 * M.entry(i - 1, 2) * s +
               3.0 * M.entry(i - 1, 3) * s * s;
      CHECK(std::abs(row_cubic_deriv(M, i, s) - d) <= 1e-12 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("system at the identity collapses to the factored form") {
  ParameterMatrix I = identity_matrix();
  // rows become p1=1, p2=s, p3=s^2, p4=s^3, so
  // f1 = (s-t1)(s-t2) and f2 = (s-t1)(s-t2)(s+t1+t2).
  SolutionPoint x{1.0, 2.0, 3.0, 4.0};
  Vec4c F = evaluate_system(I, x);
  CHECK(F(0) == cplx(2.0));
  CHECK(F(1) == cplx(6.0));
  CHECK(F(2) == cplx(12.0));
  CHECK(F(3) == cplx(42.0));

  // s-pair equal to t-pair: an exact zero.
  SolutionPoint zero{1.0, 2.0, 1.0, 2.0};
  CHECK(evaluate_system(I, zero).norm() == 0.0);
  CHECK(scaled_residual(I, zero) == 0.0);
}

TEST_CASE("evaluate_system equals the row-cubic combination") {
  PhiloxStream g(23, 0, props::kTestPurpose);
  for (int trial = 0; trial < 25; ++trial) {
    ParameterMatrix M = sample_uniform(23, std::uint64_t(trial));
    SolutionPoint x = props::random_point(g);
    Vec4c got = evaluate_system(M, x);
    Vec4c want = oracle_system(M, x);
    CHECK((got - want).norm() <= 1e-11 * (1.0 + want.norm()));
  }
}

TEST_CASE("residual rows are the scaled 3x3 minors") {
  PhiloxStream g(29, 0, props::kTestPurpose);
  for (int trial = 0; trial < 25; ++trial) {
    ParameterMatrix M = sample_uniform(29, std::uint64_t(trial));
    SolutionPoint x = props::random_point(g);
    Vec4c F = evaluate_system(M, x);
    // rows {1,2,3} give f1, rows {1,2,4} give f2
    CHECK(std::abs(F(0) - minor_residual(M, x, x.s1, 2)) < 1e-10 * (1.0 + std::abs(F(0))));
    CHECK(std::abs(F(1) - minor_residual(M, x, x.s2, 2)) < 1e-10 * (1.0 + std::abs(F(1))));
    CHECK(std::abs(F(2) - minor_residual(M, x, x.s1, 3)) < 1e-10 * (1.0 + std::abs(F(2))));
    CHECK(std::abs(F(3) - minor_residual(M, x, x.s2, 3)) < 1e-10 * (1.0 + std::abs(F(3))));
  }
}

TEST_CASE("analytic jacobian matches finite differences") {
  props::PropertyResult r = props::jacobian_matches_fd(100, 17);
  INFO(r.note);
  CHECK(r.checked == 100);
  CHECK(r.violations == 0);
}

TEST_CASE("evaluation scales floor at one and normalize the residual") {
  PhiloxStream g(31, 0, props::kTestPurpose);
  for (int trial = 0; trial < 10; ++trial) {
    ParameterMatrix M = sample_uniform(31, std::uint64_t(trial));
    SolutionPoint x = props::random_point(g);
    Eigen::Vector4d scales = evaluation_scales(M, x);
    Vec4c F = evaluate_system(M, x);
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
      CHECK(scales(i) >= 1.0);
      double component = std::abs(F(i)) / scales(i);
      acc += component * component;
    }
    CHECK(scaled_residual(M, x) == doctest::Approx(std::sqrt(acc)).epsilon(1e-12));
  }

  // Large coordinates blow up the raw residual but the scales grow with it:
  // the scaled residual of a near-solution stays small.
  const ParameterMatrix& B = data::base_matrix();
  SolutionPoint big{50.0, -60.0, 70.0, -80.0};
  CHECK(evaluation_scales(B, big).minCoeff() > 1e3);
}

TEST_CASE("orbit expansion and canonical representative") {
  PhiloxStream g(37, 0, props::kTestPurpose);
  SolutionPoint x = props::random_point(g);

  std::array<SolutionPoint, 4> orb = orbit_expand(x);
  CHECK(distance(orb[0], x) == 0.0);
  CHECK(distance(orb[1], x.swap_t()) == 0.0);
  CHECK(distance(orb[2], x.swap_s()) == 0.0);
  CHECK(distance(orb[3], x.swap_t().swap_s()) == 0.0);

  SolutionPoint rep = canonical_representative(x);
  // idempotent, and identical from every member of the orbit
  CHECK(distance(canonical_representative(rep), rep) == 0.0);
  for (const SolutionPoint& img : orb)
    CHECK(distance(canonical_representative(img), rep) == 0.0);

  // lexicographic minimality over the 8-tuple key
  auto key = [](const SolutionPoint& p) {
    return std::array<double, 8>{p.t1.real(), p.t1.imag(), p.t2.real(), p.t2.imag(),
                                 p.s1.real(), p.s1.imag(), p.s2.real(), p.s2.imag()};
  };
  for (const SolutionPoint& img : orbit_expand(rep)) CHECK(key(rep) <= key(img));
}

TEST_CASE("standard cubic membership quadrics") {
  PhiloxStream g(41, 0, props::kTestPurpose);
  for (int trial = 0; trial < 10; ++trial) {
    cplx a(g.next_gaussian(), g.next_gaussian());
    std::array<cplx, 3> q = standard_cubic_membership(moment_vector(a).v);
    for (const cplx& v : q) CHECK(std::abs(v) < 1e-12 * (1.0 + std::pow(std::abs(a), 4)));
  }
  // (1,2,4,9) fails two of the three quadrics
  std::array<cplx, 3> q = standard_cubic_membership(Vec4c(1, 2, 4, 9));
  CHECK(std::abs(q[0]) == 0.0);       // 2*2 - 1*4
  CHECK(std::abs(q[1]) == 1.0);       // 2*4 - 1*9
  CHECK(std::abs(q[2]) == 2.0);       // 2*9 - 4*4
  CHECK_THROWS_AS(standard_cubic_membership(Vec4c::Zero()), Error);
}

TEST_CASE("secant line spans the two curve points") {
  SolutionPoint x{1.0, 2.0, 0.3, 0.7};
  SecantLine line = secant_line(x);
  CHECK(line.basis0.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(line.basis1.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // each v(t_i) must lie in the span of the basis
  auto in_span = [&](const Vec4c& v) {
    Eigen::Matrix<cplx, 4, 2> B;
    B.col(0) = line.basis0;
    B.col(1) = line.basis1;
    Eigen::Vector2cd coeff = (B.adjoint() * B).ldlt().solve(B.adjoint() * v);
    return (B * coeff - v).norm() / v.norm();
  };
  CHECK(in_span(moment_vector(1.0).v) < 1e-12);
  CHECK(in_span(moment_vector(2.0).v) < 1e-12);
  CHECK(in_span(moment_vector(1.5).v) > 1e-3);  // a third curve point is off the line

  CHECK_THROWS_AS(secant_line(SolutionPoint{1.0, 1.0 + 1e-10, 0.3, 0.7}),
                  DegenerateSecantError);
}

TEST_CASE("first nonzero basis coordinate is rotated real-positive") {
  SolutionPoint x{cplx(0.4, 1.2), cplx(-0.3, -0.9), 0.0, 0.0};
  SecantLine line = secant_line(x);
  for (const Vec4c& b : {line.basis0, line.basis1}) {
    int first = 0;
    while (first < 4 && std::abs(b(first)) < 1e-14) ++first;
    REQUIRE(first < 4);
    CHECK(b(first).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b(first).real() > 0.0);
  }
}

TEST_CASE("raw-matrix overloads agree with the parameter-matrix entry points") {
  PhiloxStream g(43, 0, props::kTestPurpose);
  ParameterMatrix M = sample_uniform(43, 0);
  SolutionPoint x = props::random_point(g);
  CHECK((evaluate_system(M.entries(), x) - evaluate_system(M, x)).norm() == 0.0);
  CHECK((jacobian(M.entries(), x) - jacobian(M, x)).norm() == 0.0);
  CHECK(scaled_residual(M.entries(), x) == scaled_residual(M, x));
}
