#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hh {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, so equality is exact structural
// comparison. No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat& r);

// Accepts "a/b" and plain integer strings (optional leading '-').
// Decimal notation is rejected: throws ParseError.
Rat parse_rational(const std::string& s);

// floor(r) for r >= 0.
Int floor_nonneg(const Rat& r);

}  // namespace hh
