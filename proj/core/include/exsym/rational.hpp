#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace exsym {

using Rational = mpq_class;

/// Default zero/rank threshold for the floating-point backend.
inline constexpr double kDefaultTolerance = 1e-9;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws Error(Parse) on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

/// Backend traits. Exact comparisons ignore the tolerance argument.
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x, double /*tol*/) { return sgn(x) == 0; }
  static bool is_exact_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct Field<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static bool is_exact_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.get_d(); }
};

template <class T>
double to_double(const T& x) {
  return Field<T>::to_double(x);
}

}  // namespace exsym
