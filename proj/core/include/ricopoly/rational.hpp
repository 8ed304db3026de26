#pragma once

// Scalar backends: exact rationals (GMP mpq) for identity testing and
// double precision for zero finding and fraction evaluation.

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace ricopoly {

using Rational = mpq_class;

// Accepts integers ("-3"), fractions ("5/24") and decimal literals ("0.25",
// "-1.5e-2"), all parsed exactly.
Rational parse_rational(const std::string& text);

// "p/q" with q > 0, or just "p" for integers.
std::string rational_string(const Rational& r);

// Shortest round-trip decimal.
std::string double_string(double x);

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static std::string str(double x) { return double_string(x); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
  static double to_double(const Rational& r) { return r.get_d(); }
  static std::string str(const Rational& r) { return rational_string(r); }
};

}  // namespace ricopoly
