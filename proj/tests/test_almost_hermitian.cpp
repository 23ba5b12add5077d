#include <doctest.h>

#include "lie4/almost_hermitian.hpp"
#include "lie4/models.hpp"

using namespace lie4;
using R = Rational;

namespace {
AlmostHermitian4<R> family_structure(const R& s, const R& t) {
  return AlmostHermitian4<R>::standard(family_algebra(s, t));
}
}  // namespace

TEST_CASE("standard structure is almost Kahler on the family") {
  auto ah = family_structure(R(1), R(2));
  auto rep = check_structure(ah);
  CHECK(rep.all_zero());
  CHECK(rep.d_omega.is_zero());
}

TEST_CASE("nijenhuis vanishes on the abelian algebra, not on the family") {
  auto ab = AlmostHermitian4<R>::standard(LieAlgebra4<R>::abelian());
  CHECK(nijenhuis(ab.m.alg, ab.J).is_zero);
  auto ah = family_structure(R(0), R(1));
  CHECK_FALSE(nijenhuis(ah.m.alg, ah.J).is_zero);
}

TEST_CASE("family Ricci tensor is J-invariant") {
  auto ah = family_structure(R(3), R(5));
  auto rep = ricci_j_invariance(ah);
  CHECK(rep.is_zero);
  for (const auto& c : rep.conditions) CHECK(c == R(0));
}

TEST_CASE("weyl decomposition reassembles exactly and is trace-free") {
  auto ah = family_structure(R(1), R(3));
  CurvatureData<R> cd = curvature(ah.m);
  auto wb = weyl_decompose(ah);
  CHECK(weyl_reassembles(cd, wb));
  CHECK(weyl_trace_free(wb));
}

TEST_CASE("W2+ and W3+ blocks vanish on the family") {
  auto ah = family_structure(R(2), R(1));
  auto wb = weyl_decompose(ah);
  CHECK(wb.w2_zero);
  CHECK(wb.w3_zero);
  CHECK_FALSE(scalar_is_zero(wb.w1));
}

TEST_CASE("operator criteria for W2+ and W3+ vanish on the family") {
  auto ah = family_structure(R(1), R(1));
  CurvatureData<R> cd = curvature(ah.m);
  CHECK(mat4_is_zero(w2_operator_residual(cd.riem, ah.J)));
  CHECK(riem4_is_zero(w3_operator_residual(cd.riem, ah.J)));
}

TEST_CASE("Gray condition (G2) holds on the family, (G1) and (G3) behave") {
  auto ah = family_structure(R(1), R(2));
  CurvatureData<R> cd = curvature(ah.m);
  auto defects = gray_condition_defects(cd.riem, ah.J);
  CHECK(riem4_is_zero(defects[1]));  // (G2)
  // (G3) follows from J-invariant Ricci + W2+ = 0 here
  CHECK(riem4_is_zero(defects[2]));
}

TEST_CASE("weyl decomposition requires the orthonormal frame") {
  auto ah = family_structure(R(0), R(1));
  ah.m.g[0][0] = R(2);
  CHECK_THROWS_AS(weyl_decompose(ah), std::invalid_argument);
}

TEST_CASE("nijenhuis refuses a non-Lie bracket") {
  LieAlgebra4<R> alg;
  alg.set_bracket(0, 1, 1, R(1));
  alg.set_bracket(0, 2, 2, R(1));
  alg.set_bracket(1, 2, 0, R(1));
  auto ah = AlmostHermitian4<R>::standard(alg);
  CHECK_THROWS_AS(nijenhuis(alg, ah.J), std::invalid_argument);
}
