#pragma once

#include <boost/rational.hpp>
#include <string>

namespace fusion {

// Exact rational arithmetic for spins, conformal weights and the level
// thresholds of the A2 closed form. Never rounded to floating point.
using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fusion
