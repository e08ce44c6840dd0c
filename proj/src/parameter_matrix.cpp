#include "secants/parameter_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <Eigen/LU>

namespace secants {

namespace {

double parse_decimal(const std::string& s) {
  if (s.empty()) return 0.0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == nullptr || *end != '\0') {
    throw IOError("bad decimal literal: '" + s + "'");
  }
  return v;
}

bool all_real(const Mat4c& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

}  // namespace

ParameterMatrix::ParameterMatrix(const Mat4c& m, std::optional<DecimalGrid> d)
    : m_(m), real_(all_real(m)), decimals_(std::move(d)) {
  // |det M| >= thr * ||M||^4 tested on M / max|entry|: the same predicate by
  // homogeneity, but immune to overflow for entries out to the double range.
  double peak = m_.cwiseAbs().maxCoeff();
  if (!(peak > 0.0) || !std::isfinite(peak))
    throw SingularMatrixError("matrix rejected: entries are zero or not finite");
  Mat4c b = m_ / peak;
  double det = std::abs(b.determinant());
  double scale = b.norm();
  if (!(det >= kDetThreshold * scale * scale * scale * scale)) {
    std::ostringstream os;
    os << "matrix rejected as numerically singular: |det| = " << det
       << " < " << kDetThreshold << " * ||M||^4 = "
       << kDetThreshold * scale * scale * scale * scale << " (after peak-entry scaling)";
    throw SingularMatrixError(os.str());
  }
}

ParameterMatrix ParameterMatrix::from_entries(const Mat4c& m) {
  return ParameterMatrix(m, std::nullopt);
}

ParameterMatrix ParameterMatrix::from_decimals(const DecimalGrid& g) {
  Mat4c m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = cplx(parse_decimal(g[i][j].re), parse_decimal(g[i][j].im));
  return ParameterMatrix(m, g);
}

}  // namespace secants
