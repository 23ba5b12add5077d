#pragma once

#include <stdexcept>
#include <string>

#include "lie4/scalar.hpp"

namespace lie4 {

/// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)), d > 0 a fixed
/// rational. Used by the g_{4,9}(1/2) normalization, whose basis vectors live
/// in Q(sqrt(a4^2 + a5^2)) while every reported invariant is rational.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(int a) : a_(a), b_(0), d_(0) {}
  explicit QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
  QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_ == 0) d_ = 0;
  }

  static QuadExt sqrt_of(const Rational& d) {
    if (d <= 0) throw std::domain_error("QuadExt: radicand must be positive");
    return QuadExt(0, 1, d);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadExt: value is irrational");
    return a_;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Rational d = join(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    Rational d = join(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Rational d = join(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    Rational d = join(x, y);
    Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (n == 0) throw std::domain_error("QuadExt: division by zero");
    // multiply by the conjugate
    QuadExt conj(y.a_, -y.b_, d);
    QuadExt prod = x * conj;
    return QuadExt(prod.a_ / n, prod.b_ / n, d);
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }

  bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_); }

  std::string to_string() const {
    if (b_ == 0) return rational_to_string(a_);
    std::string s = rational_to_string(b_) + "*sqrt(" + rational_to_string(d_) + ")";
    if (a_ == 0) return s;
    return rational_to_string(a_) + " + " + s;
  }

 private:
  static Rational join(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) throw std::domain_error("QuadExt: mixed radicands");
    return x.d_;
  }
  Rational a_, b_, d_;
};

template <>
struct scalar_traits<QuadExt> {
  static constexpr bool ordered = false;
};

inline bool scalar_is_zero(const QuadExt& x) {
  return x.rational_part() == 0 && x.radical_part() == 0;
}

}  // namespace lie4
