#include <doctest.h>

#include "lie4/polynomial.hpp"
#include "lie4/quad_ext.hpp"

using namespace lie4;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("poly arithmetic keeps canonical form") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = x * x - y * y;
  Poly q = (x - y) * (x + y);
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.degree() == 2);
  Poly z = p + (Rational(-1) * p);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("rational-multiple recognition") {
  Poly x = Poly::var(2), y = Poly::var(5);
  Poly p = Rational(2, 3) * (x * y - Poly(4) * x);
  Poly q = x * y - Poly(4) * x;
  CHECK(p.is_rational_multiple_of(q));
  CHECK(q.is_rational_multiple_of(p));
  Poly r = x * y + Poly(4) * x;
  CHECK_FALSE(p.is_rational_multiple_of(r));
  CHECK_FALSE(p.is_rational_multiple_of(Poly()));
}

TEST_CASE("poly evaluation") {
  Poly p = Poly::var(0, 2) + Rational(1, 2) * Poly::var(1);
  std::array<Rational, kPolyVars> x{};
  x[0] = Rational(3);
  x[1] = Rational(4);
  CHECK(p.eval(x) == Rational(11));
}

TEST_CASE("rational functions normalize constant denominators away") {
  RatFunc f(Poly::var(0) * Poly(6), Poly(3));
  CHECK(f.den() == Poly(1));
  CHECK(f.num() == Poly(2) * Poly::var(0));
}

TEST_CASE("rational function arithmetic and equality") {
  RatFunc x = RatFunc::var(0), y = RatFunc::var(1);
  RatFunc f = (x * x - y * y) / (x - y);
  RatFunc g = x + y;
  CHECK(f == g);  // equality by cross-multiplication
  CHECK((f - g).is_zero());
  CHECK_THROWS_AS(x / RatFunc(0), std::domain_error);
}

TEST_CASE("substitution into a polynomial") {
  Poly p = Poly::var(0) * Poly::var(1) + Poly::var(2);
  std::array<RatFunc, kPolyVars> vals;
  for (int v = 0; v < kPolyVars; ++v) vals[v] = RatFunc::var(v);
  vals[0] = RatFunc::var(2);                       // a1 -> c1-slot variable
  vals[1] = RatFunc(Poly(1), Poly::var(2));        // a2 -> 1/x2
  RatFunc r = substitute(p, vals);
  // x2 * (1/x2) + x2 = 1 + x2
  CHECK(r == RatFunc(Poly(1) + Poly::var(2)));
}

TEST_CASE("quadratic extension arithmetic") {
  QuadExt s5 = QuadExt::sqrt_of(Rational(5));
  CHECK((s5 * s5).as_rational() == Rational(5));
  QuadExt x(Rational(1), Rational(2), Rational(5));  // 1 + 2 sqrt5
  QuadExt y = x * x;                                 // 21 + 4 sqrt5
  CHECK(y.rational_part() == Rational(21));
  CHECK(y.radical_part() == Rational(4));
  QuadExt q = y / x;
  CHECK(q == x);
  CHECK_THROWS_AS(x / QuadExt(0), std::domain_error);
  CHECK_THROWS_AS(x.as_rational(), std::domain_error);
  QuadExt s2 = QuadExt::sqrt_of(Rational(2));
  CHECK_THROWS_AS(s2 + s5, std::domain_error);  // mixed radicands stay out
}
