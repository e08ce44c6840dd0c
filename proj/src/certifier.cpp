#include "secants/certifier.hpp"

#include "secants/certifier_detail.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace secants {

namespace {

using rat = boost::multiprecision::cpp_rational;

// Exact complex rationals; enough arithmetic for evaluation, elimination and
// the squared-norm comparisons of the strict mode.
struct ratc {
  rat re, im;
  ratc() : re(0), im(0) {}
  ratc(long v) : re(v), im(0) {}  // NOLINT: implicit by design, mirrors cplx
  ratc(rat r, rat i) : re(std::move(r)), im(std::move(i)) {}

  ratc operator-() const { return {-re, -im}; }
  ratc conj() const { return {re, -im}; }
  rat abs2() const { return re * re + im * im; }
  // |z| <= |Re z| + |Im z|: the rational majorant used for tensor bounds.
  rat majorant() const { return abs(re) + abs(im); }

  friend ratc operator+(const ratc& a, const ratc& b) { return {a.re + b.re, a.im + b.im}; }
  friend ratc operator-(const ratc& a, const ratc& b) { return {a.re - b.re, a.im - b.im}; }
  friend ratc operator*(const ratc& a, const ratc& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ratc& operator+=(const ratc& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

ratc ratc_div(const ratc& a, const ratc& b) {
  rat d = b.abs2();
  ratc n = a * b.conj();
  return {n.re / d, n.im / d};
}

rat rat_pow(const rat& x, int n) {
  rat out = 1;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

rat rat_from_decimal(const std::string& text) {
  using boost::multiprecision::cpp_int;
  if (text.empty()) return rat(0);  // empty imaginary part means purely real
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  cpp_int digits = 0;
  long frac = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (seen_point) ++frac;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      eneg = text[pos] == '-';
      ++pos;
    }
    bool edig = false;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      exp10 = exp10 * 10 + (text[pos] - '0');
      edig = true;
    }
    if (!edig) throw IOError("exact decimal parse: malformed exponent in '" + text + "'");
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit || pos != text.size())
    throw IOError("exact decimal parse: malformed number '" + text + "'");
  if (neg) digits = -digits;
  long shift = exp10 - frac;
  if (shift >= 0) return rat(digits * boost::multiprecision::pow(cpp_int(10), unsigned(shift)));
  return rat(digits, boost::multiprecision::pow(cpp_int(10), unsigned(-shift)));
}

template <class C>
struct Mono {
  C coef;
  std::array<int, 4> e;
};

// Monomial expansion of row `row` of the system (0: f1 at s1, 1: f1 at s2,
// 2: f2 at s1, 3: f2 at s2). g(i, j) is the coefficient of s^j in the i-th
// row polynomial of the parameter matrix.
template <class C, class G>
std::vector<Mono<C>> row_monomials(const G& g, int row) {
  const int sv = (row % 2 == 0) ? 2 : 3;
  const bool second = row >= 2;
  std::vector<Mono<C>> out;
  out.reserve(second ? 24 : 16);
  for (int j = 0; j < 4; ++j) {
    std::array<int, 4> base{};
    base[sv] = j;
    if (!second) {
      out.push_back({g(2, j), base});
      auto e = base;
      e[0] = 1;
      out.push_back({-g(1, j), e});
      e = base;
      e[1] = 1;
      out.push_back({-g(1, j), e});
      e = base;
      e[0] = 1;
      e[1] = 1;
      out.push_back({g(0, j), e});
    } else {
      out.push_back({g(3, j), base});
      auto e = base;
      e[0] = 2;
      out.push_back({-g(1, j), e});
      e = base;
      e[0] = 1;
      e[1] = 1;
      out.push_back({-g(1, j), e});
      e = base;
      e[1] = 2;
      out.push_back({-g(1, j), e});
      e = base;
      e[0] = 2;
      e[1] = 1;
      out.push_back({g(0, j), e});
      e = base;
      e[0] = 1;
      e[1] = 2;
      out.push_back({g(0, j), e});
    }
  }
  return out;
}

template <class C>
C eval_monomials(const std::vector<Mono<C>>& monos, const std::array<C, 4>& x) {
  C total{};
  for (const auto& mo : monos) {
    C term = mo.coef;
    for (int v = 0; v < 4; ++v)
      for (int p = 0; p < mo.e[v]; ++p) term = term * x[v];
    total += term;
  }
  return total;
}

template <class C>
C eval_monomials_deriv(const std::vector<Mono<C>>& monos, const std::array<C, 4>& x,
                       int var) {
  C total{};
  for (const auto& mo : monos) {
    if (mo.e[var] == 0) continue;
    C term = mo.coef * C(long(mo.e[var]));
    for (int v = 0; v < 4; ++v) {
      int e = mo.e[v] - (v == var ? 1 : 0);
      for (int p = 0; p < e; ++p) term = term * x[v];
    }
    total += term;
  }
  return total;
}

constexpr long kFactorial[7] = {1, 1, 2, 6, 24, 120, 720};

// B_k = sum over |alpha| = k of (k!/alpha!) |D^alpha F_row(x)|, for k = 2..6.
// Exponents never exceed (2, 2, 3, 3), so the loops cover everything.
template <class Real, class C, class AbsFn>
std::array<Real, 7> row_tensor_majorants(const std::vector<Mono<C>>& monos,
                                         const std::array<C, 4>& x, AbsFn absf) {
  std::array<Real, 7> B{};
  for (int a0 = 0; a0 <= 2; ++a0)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 <= 3; ++a2)
        for (int a3 = 0; a3 <= 3; ++a3) {
          const int k = a0 + a1 + a2 + a3;
          if (k < 2 || k > 6) continue;
          const std::array<int, 4> alpha{a0, a1, a2, a3};
          C val{};
          bool any = false;
          for (const auto& mo : monos) {
            bool applies = true;
            long fall = 1;
            for (int v = 0; v < 4 && applies; ++v) {
              if (mo.e[v] < alpha[v]) {
                applies = false;
                break;
              }
              for (int f = 0; f < alpha[v]; ++f) fall *= mo.e[v] - f;
            }
            if (!applies) continue;
            C term = mo.coef * C(fall);
            for (int v = 0; v < 4; ++v)
              for (int p = 0; p < mo.e[v] - alpha[v]; ++p) term = term * x[v];
            val += term;
            any = true;
          }
          if (!any) continue;
          long w = kFactorial[k];
          for (int v = 0; v < 4; ++v) w /= kFactorial[alpha[v]];
          B[k] += Real(w) * absf(val);
        }
  return B;
}

struct RatMatrixData {
  std::array<std::array<ratc, 4>, 4> m;
  ratc operator()(int i, int j) const { return m[i][j]; }
};

RatMatrixData exact_entries(const ParameterMatrix& M) {
  RatMatrixData g;
  if (M.has_decimals()) {
    const DecimalGrid& d = M.decimals();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        g.m[i][j] = ratc(rat_from_decimal(d[i][j].re), rat_from_decimal(d[i][j].im));
  } else {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cplx e = M.entry(i, j);
        g.m[i][j] = ratc(rat(e.real()), rat(e.imag()));
      }
  }
  return g;
}

// Exact inverse by Gauss-Jordan elimination; returns false on a singular
// matrix. Pivots are chosen by size to keep the rationals from ballooning.
bool rat_invert(std::array<std::array<ratc, 4>, 4> a,
                std::array<std::array<ratc, 4>, 4>& inv) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = ratc(long(i == j));
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    rat best = 0;
    for (int r = col; r < 4; ++r) {
      rat sz = a[r][col].abs2();
      if (sz > best) {
        best = sz;
        pivot = r;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const ratc p = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] = ratc_div(a[col][j], p);
      inv[col][j] = ratc_div(inv[col][j], p);
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const ratc f = a[r][col];
      if (f.abs2() == 0) continue;
      for (int j = 0; j < 4; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return true;
}

// alpha0 = (13 - 3 sqrt 17)/4 from below, as an exact rational. Certifying
// against a lower bound of the true threshold keeps the verdict sound.
const rat& alpha0_lower_bound() {
  static const rat lb = [] {
    rat candidate(std::int64_t(157670780786LL), std::int64_t(1000000000000LL));
    // candidate <= (13 - 3 sqrt 17)/4  <=>  (13 - 4*candidate)^2 >= 153
    rat residue = (rat(13) - rat(4) * candidate) * (rat(13) - rat(4) * candidate);
    if (residue < rat(153)) throw Error("alpha threshold lower bound is not sound");
    return candidate;
  }();
  return lb;
}

bool strict_alpha_verdict(const ParameterMatrix& M, const SolutionPoint& x) {
  const RatMatrixData grid = exact_entries(M);
  const std::array<ratc, 4> xr = {ratc(rat(x.t1.real()), rat(x.t1.imag())),
                                  ratc(rat(x.t2.real()), rat(x.t2.imag())),
                                  ratc(rat(x.s1.real()), rat(x.s1.imag())),
                                  ratc(rat(x.s2.real()), rat(x.s2.imag()))};

  std::array<std::vector<Mono<ratc>>, 4> rows;
  for (int i = 0; i < 4; ++i) rows[i] = row_monomials<ratc>(grid, i);

  std::array<std::array<ratc, 4>, 4> J;
  std::array<ratc, 4> F;
  for (int i = 0; i < 4; ++i) {
    F[i] = eval_monomials(rows[i], xr);
    for (int v = 0; v < 4; ++v) J[i][v] = eval_monomials_deriv(rows[i], xr, v);
  }
  std::array<std::array<ratc, 4>, 4> Jinv;
  if (!rat_invert(J, Jinv))
    throw SingularJacobianError("strict alpha test: exact Jacobian is singular");

  rat beta2 = 0;
  for (int i = 0; i < 4; ++i) {
    ratc step{};
    for (int j = 0; j < 4; ++j) step += Jinv[i][j] * F[j];
    beta2 += step.abs2();
  }
  rat jinv_frob2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) jinv_frob2 += Jinv[i][j].abs2();

  std::array<rat, 7> B2{};
  for (int i = 0; i < 4; ++i) {
    auto Bi = row_tensor_majorants<rat>(rows[i], xr,
                                        [](const ratc& z) { return z.majorant(); });
    for (int k = 2; k <= 6; ++k) B2[k] += Bi[k] * Bi[k];
  }

  const rat a0 = alpha0_lower_bound();
  const rat a0_sq = a0 * a0;
  for (int k = 2; k <= 6; ++k) {
    if (B2[k] == 0) continue;
    // beta^(k-1) * |Jinv| * B_k / k! < alpha0, all squared to stay rational.
    rat lhs = rat_pow(beta2, k - 1) * jinv_frob2 * B2[k];
    rat rhs = rat_pow(a0_sq, k - 1) * rat(kFactorial[k]) * rat(kFactorial[k]);
    if (!(lhs < rhs)) return false;
  }
  return true;
}

SolutionPoint newton_step(const ParameterMatrix& M, const SolutionPoint& x) {
  Mat4c J = jacobian(M, x);
  double scale = J.cwiseAbs().maxCoeff();
  Eigen::PartialPivLU<Mat4c> lu(J);
  double det = std::abs(lu.determinant());
  if (!(scale > 0.0) || !(det > 1e-14 * scale * scale * scale * scale))
    throw SingularJacobianError("certification refinement: Jacobian is singular");
  return SolutionPoint::from_vec(x.vec() - lu.solve(evaluate_system(M, x)));
}

}  // namespace

const char* to_string(RealityFlag f) {
  switch (f) {
    case RealityFlag::CertifiedReal: return "CertifiedReal";
    case RealityFlag::CertifiedNonreal: return "CertifiedNonreal";
    case RealityFlag::Undetermined: return "Undetermined";
  }
  return "?";
}

AlphaCertificate alpha_test(const ParameterMatrix& M, const SolutionPoint& x,
                            bool strict) {
  const Mat4c& m = M.entries();
  Mat4c J = jacobian(m, x);
  double scale = J.cwiseAbs().maxCoeff();
  Eigen::PartialPivLU<Mat4c> lu(J);
  double det = std::abs(lu.determinant());
  if (!(scale > 0.0) || !(det > 1e-14 * scale * scale * scale * scale))
    throw SingularJacobianError("alpha test: Jacobian is singular at the point");
  Mat4c Jinv = lu.inverse();

  AlphaCertificate cert;
  cert.point = x;
  cert.beta = (Jinv * evaluate_system(m, x)).norm();

  const std::array<cplx, 4> xv = {x.t1, x.t2, x.s1, x.s2};
  auto grid = [&m](int i, int j) { return m(i, j); };
  const double jinv_frob = Jinv.norm();
  std::array<double, 7> B2{};
  for (int i = 0; i < 4; ++i) {
    auto Bi = row_tensor_majorants<double>(row_monomials<cplx>(grid, i), xv,
                                           [](const cplx& z) { return std::abs(z); });
    for (int k = 2; k <= 6; ++k) B2[k] += Bi[k] * Bi[k];
  }
  double gamma = 0.0;
  for (int k = 2; k <= 6; ++k) {
    if (B2[k] <= 0.0) continue;
    double cand = std::pow(jinv_frob * std::sqrt(B2[k]) / double(kFactorial[k]),
                           1.0 / double(k - 1));
    gamma = std::max(gamma, cand);
  }
  cert.gamma_bound = 10.0 * gamma;  // rounding headroom in floating-point mode
  cert.alpha = cert.beta * cert.gamma_bound;

  if (strict) {
    cert.strict = true;
    cert.certified = strict_alpha_verdict(M, x);
    // Report an upper bound so downstream double comparisons stay conservative.
    cert.beta *= 1.0 + 1e-12;
  } else {
    cert.certified = cert.alpha < kAlphaThreshold;
  }
  return cert;
}

DistinctnessCheck certify_distinct(const std::vector<AlphaCertificate>& certs) {
  DistinctnessCheck out;
  const int n = int(certs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(certs[i].point, certs[j].point);
      bool ok;
      if (certs[i].strict || certs[j].strict) {
        // Sufficient squared form: d^2 > 8(b_i^2 + b_j^2) implies
        // d > 2(b_i + b_j), avoiding the irrational cross term.
        ok = d * d > 8.0 * (certs[i].beta * certs[i].beta + certs[j].beta * certs[j].beta);
      } else {
        ok = d > 2.0 * (certs[i].beta + certs[j].beta);
      }
      if (!ok) {
        out.first = i;
        out.second = j;
        return out;
      }
    }
  out.distinct = true;
  return out;
}

RealityFlag certify_reality(const ParameterMatrix& M, const AlphaCertificate& cert,
                            const std::vector<AlphaCertificate>& all_certs, int self,
                            int* partner) {
  if (!M.is_real())
    throw Error("certify_reality: instance must be real for conjugation to act");
  if (partner) *partner = -1;
  const SolutionPoint conj_x = cert.point.conj();
  if (distance(cert.point, conj_x) < 2.0 * cert.beta) return RealityFlag::CertifiedReal;

  int hit = -1;
  int hits = 0;
  for (int j = 0; j < int(all_certs.size()); ++j) {
    const double d = distance(conj_x, all_certs[j].point);
    if (d <= 2.0 * (cert.beta + all_certs[j].beta)) {
      ++hits;
      hit = j;
    }
  }
  if (hits == 1 && hit != self) {
    if (partner) *partner = hit;
    return RealityFlag::CertifiedNonreal;
  }
  return RealityFlag::Undetermined;
}

CertificationReport certify_census(const ParameterMatrix& M,
                                   const std::vector<OrbitRecord>& orbits,
                                   bool strict) {
  if (orbits.size() != 10)
    throw Error("certify_census expects exactly ten orbits");
  if (!M.is_real())
    throw Error("certify_census: instance must be real");

  std::vector<SolutionPoint> points(40);
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < 4; ++k) points[4 * i + k] = orbits[i].orbit[k];

  CertificationReport report;
  report.certificates.resize(40);
  for (int i = 0; i < 40; ++i) report.certificates[i] = alpha_test(M, points[i], strict);

  {
    std::vector<int> failing;
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 4; ++k)
        if (!report.certificates[4 * i + k].certified) {
          failing.push_back(i + 1);
          break;
        }
    if (!failing.empty()) {
      std::ostringstream os;
      os << "certification incomplete: alpha test failed for orbit(s)";
      for (int i : failing) os << " " << i;
      throw CertificationIncompleteError(os.str());
    }
  }

  std::array<int, 10> partner_orbit;
  partner_orbit.fill(-1);

  for (int round = 0;; ++round) {
    std::vector<int> undetermined;
    for (int i = 0; i < 10; ++i) {
      int partner = -1;
      const RealityFlag flag =
          certify_reality(M, report.certificates[4 * i], report.certificates, 4 * i, &partner);
      report.reality_flags[i] = flag;
      report.certified_class[i].reset();
      partner_orbit[i] = -1;
      if (flag == RealityFlag::Undetermined) {
        undetermined.push_back(i);
        continue;
      }
      if (flag == RealityFlag::CertifiedReal) {
        report.certified_class[i] = SecantClass::TotallyReal;
        continue;
      }
      const int orbit_of_partner = partner / 4;
      if (orbit_of_partner == i) {
        switch (partner % 4) {
          case 1:  // conjugate zero is the t-swap image: t conjugate, s real
          case 2:  // conjugate zero is the s-swap image: s conjugate, t real
            report.certified_class[i] = SecantClass::PartiallyReal;
            break;
          case 3:
            report.certified_class[i] = SecantClass::MinimallyReal;
            break;
          default:
            undetermined.push_back(i);  // partner==rep contradicts the flag
            break;
        }
      } else {
        report.certified_class[i] = SecantClass::Nonreal;
        partner_orbit[i] = orbit_of_partner;
      }
    }

    if (undetermined.empty()) break;
    if (round == 3) {
      std::ostringstream os;
      os << "certification incomplete: orbit(s) left Undetermined after " << round
         << " refinement rounds:";
      for (int i : undetermined) os << " " << i + 1;
      throw CertificationIncompleteError(os.str());
    }
    for (int i : undetermined) {
      for (int k = 0; k < 4; ++k) {
        SolutionPoint& p = points[4 * i + k];
        p = newton_step(M, newton_step(M, p));
        report.certificates[4 * i + k] = alpha_test(M, p, strict);
        if (!report.certificates[4 * i + k].certified)
          throw CertificationIncompleteError(
              "certification incomplete: refinement broke an alpha certificate");
      }
    }
    ++report.refinement_rounds;
  }

  const DistinctnessCheck dc = certify_distinct(report.certificates);
  report.distinct = dc.distinct;
  if (!dc.distinct) {
    std::ostringstream os;
    os << "certification incomplete: points " << dc.first << " and " << dc.second
       << " not certified distinct";
    throw CertificationIncompleteError(os.str());
  }

  TripleCount t;
  for (int i = 0; i < 10; ++i) {
    switch (*report.certified_class[i]) {
      case SecantClass::TotallyReal: ++t.n_t; break;
      case SecantClass::PartiallyReal: ++t.n_p; break;
      case SecantClass::MinimallyReal: ++t.n_m; break;
      case SecantClass::Nonreal: {
        const int j = partner_orbit[i];
        if (j < 0 || report.certified_class[j] != SecantClass::Nonreal ||
            partner_orbit[j] != i)
          throw CertificationIncompleteError(
              "certification incomplete: nonreal orbits do not pair up under conjugation");
        break;
      }
    }
  }
  report.census_certified = t;
  return report;
}

namespace detail {

boost::multiprecision::cpp_rational decimal_to_rational(const std::string& text) {
  return rat_from_decimal(text);
}

boost::multiprecision::cpp_rational exact_rational(double x) { return rat(x); }

}  // namespace detail

}  // namespace secants
