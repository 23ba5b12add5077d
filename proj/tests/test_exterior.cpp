#include <doctest.h>

#include "lie4/exterior.hpp"
#include "lie4/lie_algebra.hpp"
#include "lie4/models.hpp"

using namespace lie4;
using R = Rational;

TEST_CASE("two-form basis order and index table") {
  CHECK(two_form_index(0, 1) == 0);
  CHECK(two_form_index(0, 2) == 1);
  CHECK(two_form_index(0, 3) == 2);
  CHECK(two_form_index(1, 2) == 3);
  CHECK(two_form_index(1, 3) == 4);
  CHECK(two_form_index(2, 3) == 5);
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = kTwoFormPairs[A];
    CHECK(two_form_index(i, j) == A);
  }
}

TEST_CASE("wedge normalization: (ei^ej)(e_i, e_j) = 1") {
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = kTwoFormPairs[A];
    TwoForm<R> w = wedge(OneForm<R>::basis(i), OneForm<R>::basis(j));
    CHECK(w(basis_vec<R>(i), basis_vec<R>(j)) == R(1));
    CHECK(w(basis_vec<R>(j), basis_vec<R>(i)) == R(-1));
  }
}

TEST_CASE("wedge antisymmetry and basis sign") {
  TwoForm<R> a = TwoForm<R>::basis(2, 0);
  CHECK(a.c[two_form_index(0, 2)] == R(-1));
  TwoForm<R> b = wedge(OneForm<R>::basis(1), OneForm<R>::basis(0));
  CHECK(b.c[0] == R(-1));
}

TEST_CASE("triple wedge matches the 3-form basis order") {
  // e1 ^ e2 ^ e3 = +e123
  ThreeForm<R> t = wedge(wedge(OneForm<R>::basis(0), OneForm<R>::basis(1)), OneForm<R>::basis(2));
  CHECK(t.c[0] == R(1));
  CHECK(t.c[1] == R(0));
  // e2 ^ e1 ^ e4 = -e124
  ThreeForm<R> u = wedge(wedge(OneForm<R>::basis(1), OneForm<R>::basis(0)), OneForm<R>::basis(3));
  CHECK(u.c[1] == R(-1));
}

TEST_CASE("hodge star on the identity metric pairs complementary planes") {
  Mat4<R> g = identity_mat4<R>();
  TwoForm<R> e12 = TwoForm<R>::basis(0, 1);
  TwoForm<R> s = hodge_star(e12, g);
  CHECK(s.c[5] == R(1));  // *e12 = e34
  TwoForm<R> e13 = TwoForm<R>::basis(0, 2);
  s = hodge_star(e13, g);
  CHECK(s.c[4] == R(-1));  // *e13 = -e24
  // * is an involution on 2-forms in dimension 4
  for (int A = 0; A < 6; ++A) {
    TwoForm<R> w;
    w.c[A] = R(1);
    TwoForm<R> ss = hodge_star(hodge_star(w, g), g);
    for (int B = 0; B < 6; ++B) CHECK(ss.c[B] == w.c[B]);
  }
}

TEST_CASE("Omega = e12 + e34 is self-dual") {
  TwoForm<R> omega = TwoForm<R>::basis(0, 1) + TwoForm<R>::basis(2, 3);
  auto [plus, minus] = sd_asd_split(omega, identity_mat4<R>());
  CHECK(minus.is_zero());
  for (int A = 0; A < 6; ++A) CHECK(plus.c[A] == omega.c[A]);
}

TEST_CASE("exterior d squares to zero on 1-forms over a Lie algebra") {
  CoframeDiff<R> cf = to_coframe(sl2_r_algebra<R>());
  for (int k = 0; k < 4; ++k) {
    ThreeForm<R> dd = exterior_d(cf.d[k], cf);
    CHECK(dd.is_zero());
  }
}

TEST_CASE("hodge star requires an SPD metric") {
  Mat4<R> g = identity_mat4<R>();
  g[0][0] = R(-1);
  CHECK_THROWS_AS(hodge_star(TwoForm<R>::basis(0, 1), g), std::invalid_argument);
}
