#include <doctest.h>

#include "lie4/almost_hermitian.hpp"
#include "lie4/curvature.hpp"
#include "lie4/lie_algebra.hpp"
#include "lie4/models.hpp"

using namespace lie4;
using R = Rational;

TEST_CASE("bracket/coframe duality round-trips") {
  LieAlgebra4<R> alg = sl2_r_algebra<R>();
  LieAlgebra4<R> back = from_coframe(to_coframe(alg));
  CHECK(alg == back);
}

TEST_CASE("jacobi defect is zero on the model algebras") {
  CHECK(jacobi_defect(LieAlgebra4<R>::abelian()).is_zero);
  CHECK(jacobi_defect(sl2_r_algebra<R>()).is_zero);
  CHECK(jacobi_defect(heisenberg_r_algebra<R>()).is_zero);
  CHECK(jacobi_defect(r2sol2_algebra<R>()).is_zero);
  CHECK(jacobi_defect(g49_algebra(R(1, 2))).is_zero);
  CHECK(jacobi_defect(family_algebra(R(1), R(2))).is_zero);
}

TEST_CASE("jacobi defect detects a broken bracket") {
  LieAlgebra4<R> alg;
  alg.set_bracket(0, 1, 1, R(1));
  alg.set_bracket(0, 2, 2, R(1));
  alg.set_bracket(1, 2, 0, R(1));  // cyclic sum on (e1,e2,e3) is 2e1
  CHECK_FALSE(jacobi_defect(alg).is_zero);
  CHECK_THROWS_AS(curvature(MetricLieAlgebra<R>{alg, identity_mat4<R>()}), std::invalid_argument);
}

TEST_CASE("solvability profiles") {
  auto ab = solvability_profile(LieAlgebra4<R>::abelian());
  CHECK(ab.is_solvable);
  CHECK(ab.commutator_dim == 0);

  auto sl = solvability_profile(sl2_r_algebra<R>());
  CHECK_FALSE(sl.is_solvable);
  CHECK(sl.commutator_dim == 3);

  auto h = solvability_profile(heisenberg_r_algebra<R>());
  CHECK(h.is_solvable);
  CHECK(h.commutator_dim == 1);

  auto fam = solvability_profile(family_algebra(R(0), R(1)));
  CHECK(fam.is_solvable);
  CHECK(fam.commutator_dim == 3);
  CHECK(fam.commutator_is_heisenberg);
}

TEST_CASE("unimodularity traces") {
  CHECK(unimodularity(sl2_r_algebra<R>()).is_unimodular);
  CHECK(unimodularity(heisenberg_r_algebra<R>()).is_unimodular);
  auto fam = unimodularity(family_algebra(R(0), R(1)));
  CHECK_FALSE(fam.is_unimodular);
  CHECK(fam.ad_traces[3] == R(1));  // trace(ad_{e4}) = (t^2+s^2)/t at (0,1)
}

TEST_CASE("levi-civita is torsion-free and metric-compatible") {
  MetricLieAlgebra<R> m{family_algebra(R(1), R(2)), identity_mat4<R>()};
  Connection<R> gamma = levi_civita(m);
  CHECK(is_torsion_free(m, gamma));
  CHECK(is_metric_compatible(m, gamma));
}

TEST_CASE("abelian algebra is flat") {
  MetricLieAlgebra<R> m{LieAlgebra4<R>::abelian(), identity_mat4<R>()};
  CurvatureData<R> cd = curvature(m);
  CHECK(riem4_is_zero(cd.riem));
  CHECK(cd.scal == R(0));
}

TEST_CASE("curvature symmetries and first Bianchi on a curved example") {
  MetricLieAlgebra<R> m{family_algebra(R(2), R(3)), identity_mat4<R>()};
  CurvatureData<R> cd = curvature(m);
  CHECK(curvature_symmetries_hold(cd.riem));
  CHECK(first_bianchi_holds(cd.riem));
}

TEST_CASE("levi-civita rejects a non-SPD metric") {
  Mat4<R> g = identity_mat4<R>();
  g[2][2] = R(0);
  CHECK_THROWS_AS(levi_civita(MetricLieAlgebra<R>{LieAlgebra4<R>::abelian(), g}),
                  std::invalid_argument);
}

TEST_CASE("perturbing one structure constant breaks the Jacobi identity") {
  LieAlgebra4<R> alg = g49_algebra(R(1, 2));
  alg.set_bracket(0, 1, 1, alg.c(1, 0, 1) + R(1));
  auto d = jacobi_defect(alg);
  CHECK_FALSE(d.is_zero);
  // frozen from the oracle run: the cyclic sum on (e1,e2,e3) picks up +1 e4
  CHECK(d.residual[0][1][2][3] == R(1));
}

TEST_CASE("family requires t != 0") {
  CHECK_THROWS_AS(family_algebra(R(1), R(0)), std::invalid_argument);
}

TEST_CASE("family Ricci diagonal at (0,1)") {
  CurvatureData<R> cd = curvature(MetricLieAlgebra<R>{family_algebra(R(0), R(1)), identity_mat4<R>()});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      R expect = (i == j && i >= 2) ? R(-3, 2) : R(0);
      CHECK(cd.ricci[i][j] == expect);
    }
}
