#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace lie4 {

/// Exact rational scalar. The default backend for every verification;
/// doubles are used only for sweeps and the coordinate model. Expression
/// templates are off so arithmetic composes with the generic scalar code.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Parses "p", "-p/q" or "p/q" with q != 0.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::cpp_int(text));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class S>
struct scalar_traits {
  static constexpr bool ordered = false;
};

template <>
struct scalar_traits<double> {
  static constexpr bool ordered = true;
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool ordered = true;
};

template <class S>
bool scalar_is_zero(const S& s) {
  return s == S(0);
}

inline bool scalar_is_zero(double s) { return s == 0.0; }

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double scalar_to_double(double x) { return x; }
inline double scalar_to_double(const Rational& x) { return x.convert_to<double>(); }

inline double scalar_sqrt(double x) {
  if (x < 0) throw std::domain_error("sqrt of negative value");
  return std::sqrt(x);
}

/// Exact square root; only perfect squares of rationals are accepted.
inline Rational scalar_sqrt(const Rational& x) {
  using boost::multiprecision::cpp_int;
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  cpp_int n = numerator(x), d = denominator(x);
  cpp_int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d)
    throw std::domain_error("rational is not a perfect square; exact Hodge star needs a unit-volume frame");
  return Rational(rn, rd);
}

}  // namespace lie4
