#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Exact-arithmetic building blocks of the strict certification backend,
// exposed so their conversions can be pinned by known-answer tests.
namespace secants::detail {

// Exact rational value of a decimal literal (optional sign, point, exponent).
// The empty string is 0. Throws IOError on malformed text.
boost::multiprecision::cpp_rational decimal_to_rational(const std::string& text);

// The exact dyadic rational a double holds; no decimal re-rounding involved,
// so exact_rational(0.1) != 1/10 while exact_rational(0.5) == 1/2.
boost::multiprecision::cpp_rational exact_rational(double x);

}  // namespace secants::detail
