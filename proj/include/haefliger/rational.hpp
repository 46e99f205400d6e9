#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace haefliger {

/// Exact scalar for invariant values. Values produced by the crossing-change
/// formulas are quarter-integers.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

}  // namespace haefliger
