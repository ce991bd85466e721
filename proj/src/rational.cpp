#include "hh/rational.hpp"

#include <cctype>

#include "hh/errors.hpp"

namespace hh {

std::string to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  std::size_t pos = 0;
  if (!s.empty() && s[0] == '-') pos = 1;
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(s, pos, s.size())) {
      throw ParseError("invalid rational: '" + s + "'");
    }
    return Rat(Int(s));
  }
  if (!all_digits(s, pos, slash) || !all_digits(s, slash + 1, s.size())) {
    throw ParseError("invalid rational: '" + s + "'");
  }
  const Int num(s.substr(0, slash));
  const Int den(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: '" + s + "'");
  return Rat(num, den);
}

Int floor_nonneg(const Rat& r) {
  // Nonnegative input, so truncating division is floor.
  return boost::multiprecision::numerator(r) /
         boost::multiprecision::denominator(r);
}

}  // namespace hh
