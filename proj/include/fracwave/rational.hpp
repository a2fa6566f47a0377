#pragma once

// Exact rational arithmetic for the exponent calculators. Critical powers are
// the headline numbers of this project and must not drift, so all formulas on
// rational inputs are evaluated exactly; doubles bridge only where a square
// root is genuinely irrational.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fracwave/common.hpp"

namespace fracwave {

using Rat = boost::multiprecision::cpp_rational;

/// Exact rational value of a double (every finite double is rational).
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("rat_from_double: non-finite input");
  return Rat(x);
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace fracwave
