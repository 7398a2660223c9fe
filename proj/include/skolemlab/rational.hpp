// Exact rational scalars used everywhere in skolemlab. No floating point
// enters the toolchain; rationals serialize as "p/q" strings.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace skolemlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) { return Rat(num, den); }

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r < 0) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace skolemlab
