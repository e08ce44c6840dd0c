#pragma once

#include <array>
#include <optional>
#include <string>

#include "secants/types.hpp"

namespace secants {

// Decimal source text of one complex entry; kept verbatim so exact-rational
// certification can reconstruct the intended value without binary roundoff.
struct DecimalEntry {
  std::string re, im;  // im empty means purely real
};

using DecimalGrid = std::array<std::array<DecimalEntry, 4>, 4>;

// Invertible 4x4 matrix mapping the standard twisted cubic onto the second
// curve of the pair.  Rows are the coefficient vectors of p_1..p_4.
class ParameterMatrix {
 public:
  // |det| must clear kDetThreshold * ||M||_F^4 (scale-invariant test).
  static constexpr double kDetThreshold = 1e-10;

  static ParameterMatrix from_entries(const Mat4c& m);
  static ParameterMatrix from_decimals(const DecimalGrid& g);

  const Mat4c& entries() const { return m_; }
  cplx entry(int i, int j) const { return m_(i, j); }
  bool is_real() const { return real_; }

  bool has_decimals() const { return decimals_.has_value(); }
  const DecimalGrid& decimals() const { return *decimals_; }

  double frobenius_norm() const { return m_.norm(); }

  bool approx_equal(const ParameterMatrix& other, double tol = 0.0) const {
    return (m_ - other.m_).norm() <= tol;
  }

 private:
  ParameterMatrix(const Mat4c& m, std::optional<DecimalGrid> d);

  Mat4c m_;
  bool real_ = false;
  std::optional<DecimalGrid> decimals_;
};

}  // namespace secants
