#pragma once

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lie4/scalar.hpp"

namespace lie4 {

/// Indeterminates of the coframe ansatz, in the fixed order
/// a1..a6, b1..b6, c1..c6.
constexpr int kPolyVars = 18;

inline std::string poly_var_name(int v) {
  static const char* names[kPolyVars] = {"a1", "a2", "a3", "a4", "a5", "a6",
                                         "b1", "b2", "b3", "b4", "b5", "b6",
                                         "c1", "c2", "c3", "c4", "c5", "c6"};
  return names[v];
}

struct Monomial {
  std::array<uint8_t, kPolyVars> e{};
  auto operator<=>(const Monomial&) const = default;
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

/// Sparse multivariate polynomial with rational coefficients, canonical form
/// (sorted monomials, no zero coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }
  Poly(int c) : Poly(Rational(c)) {}

  static Poly var(int v, int power = 1) {
    Poly p;
    Monomial m;
    m.e[v] = static_cast<uint8_t>(power);
    p.terms_[m] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Monomial{});
    if (it == terms_.end() || terms_.size() != 1)
      throw std::logic_error("Poly: not a constant");
    return it->second;
  }
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
      auto it = terms_.find(m);
      if (it == terms_.end()) {
        terms_[m] = c;
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int i = 0; i < kPolyVars; ++i) m.e[i] = static_cast<uint8_t>(ma.e[i] + mb.e[i]);
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          Rational v = ca * cb;
          if (v != 0) r.terms_[m] = v;
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  friend Poly operator*(const Rational& c, Poly p) {
    if (c == 0) return Poly();
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// True iff this = q * o for some nonzero rational q (and both nonzero).
  bool is_rational_multiple_of(const Poly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    Rational q = it->second / jt->second;
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      if (it->second != q * jt->second) return false;
    }
    return true;
  }

  Rational eval(const std::array<Rational, kPolyVars>& x) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (int i = 0; i < kPolyVars; ++i)
        for (int p = 0; p < m.e[i]; ++p) v *= x[i];
      total += v;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string term;
      Rational ac = c < 0 ? Rational(-c) : c;
      std::string mono;
      for (int i = 0; i < kPolyVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += poly_var_name(i);
        if (m.e[i] > 1) mono += "^" + std::to_string(int(m.e[i]));
      }
      if (mono.empty()) {
        term = rational_to_string(ac);
      } else if (ac == 1) {
        term = mono;
      } else {
        term = rational_to_string(ac) + "*" + mono;
      }
      if (first) {
        out += (c < 0 ? "-" : "") + term;
        first = false;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

/// Rational function num/den over the ansatz indeterminates. No full gcd
/// reduction; zero tests and equality go through cross-multiplication, and
/// monomial/rational content is cancelled to keep sizes bounded.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc var(int v) { return RatFunc(Poly::var(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

  Rational eval(const std::array<Rational, kPolyVars>& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("RatFunc: evaluation hits a pole");
    return num_.eval(x) / d;
  }

  std::string to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    // cancel common monomial content
    Monomial common;
    for (int i = 0; i < kPolyVars; ++i) common.e[i] = 255;
    auto meet = [&](const Poly& p) {
      for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kPolyVars; ++i) common.e[i] = std::min(common.e[i], m.e[i]);
    };
    meet(num_);
    meet(den_);
    if (common != Monomial{}) {
      num_ = shift_down(num_, common);
      den_ = shift_down(den_, common);
    }
    // scale so den has leading coefficient 1
    Rational lead = den_.terms().begin()->second;
    if (lead != 1) {
      Rational inv = 1 / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  static Poly shift_down(const Poly& p, const Monomial& by) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
      Monomial nm;
      for (int i = 0; i < kPolyVars; ++i) nm.e[i] = static_cast<uint8_t>(m.e[i] - by.e[i]);
      Poly t(c);
      for (int i = 0; i < kPolyVars; ++i)
        if (nm.e[i] > 0) t = t * Poly::var(i, nm.e[i]);
      out += t;
    }
    return out;
  }

  Poly num_, den_;
};

/// Substitutes x[v] -> values[v] into p.
inline RatFunc substitute(const Poly& p, const std::array<RatFunc, kPolyVars>& values) {
  RatFunc total(0);
  for (const auto& [m, c] : p.terms()) {
    RatFunc v{Rational(c)};
    for (int i = 0; i < kPolyVars; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= values[i];
    total += v;
  }
  return total;
}

template <>
struct scalar_traits<RatFunc> {
  static constexpr bool ordered = false;
};

inline bool scalar_is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace lie4
