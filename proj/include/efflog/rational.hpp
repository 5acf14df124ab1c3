#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace efflog {

/// Exact arbitrary-precision rational; probability masses and thresholds
/// must not drift.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(int64_t num, int64_t den) { return Rational(num, den); }

inline std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace efflog
