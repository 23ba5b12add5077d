#include <doctest.h>

#include <map>
#include <random>

#include "lie4/almost_hermitian.hpp"
#include "lie4/classification.hpp"
#include "lie4/curvature.hpp"
#include "lie4/models.hpp"

using namespace lie4;
namespace cls = lie4::classification;
using R = Rational;

namespace {

// Random small rationals with a fixed seed; the suite is deterministic.
struct Rng {
  std::mt19937 gen{20240817};
  R rat(int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return R(num(gen), den(gen));
  }
};

/// A random 4-dimensional Lie algebra that satisfies the Jacobi identity by
/// construction: e4 acts by an arbitrary matrix on the abelian ideal
/// span(e1,e2,e3), plus an optional central Heisenberg-type bracket that is
/// compatible when the action preserves it trivially.
LieAlgebra4<R> random_solvable(Rng& rng) {
  LieAlgebra4<R> alg;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) alg.set_bracket(3, i, j, rng.rat());
  return alg;
}

Mat4<R> random_spd(Rng& rng) {
  Mat4<R> l = zero_mat4<R>();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) l[i][j] = rng.rat(-2, 2);
    l[i][i] = R(1) + (rng.rat(0, 2) * rng.rat(0, 2));
  }
  Mat4<R> g = mat4_mul(l, mat4_transpose(l));
  return g;
}

}  // namespace

TEST_CASE("exact curvature identities on 100 random metric Lie algebras") {
  Rng rng;
  int checked = 0;
  while (checked < 100) {
    LieAlgebra4<R> alg = random_solvable(rng);
    if (!jacobi_defect(alg).is_zero) continue;  // construction guarantees this
    MetricLieAlgebra<R> m{alg, random_spd(rng)};
    Connection<R> gamma = levi_civita(m);
    CHECK(is_torsion_free(m, gamma));
    CHECK(is_metric_compatible(m, gamma));
    CurvatureData<R> cd = curvature(m);
    CHECK(curvature_symmetries_hold(cd.riem));
    CHECK(first_bianchi_holds(cd.riem));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("block and operator routes to W2+/W3+ agree on 50 random branch algebras") {
  Rng rng;
  int checked = 0;
  while (checked < 50) {
    int id = 1 + static_cast<int>(rng.gen() % 17);
    std::map<int, R> vals;
    for (int v : cls::branch(id).free_vars) {
      R x = rng.rat();
      vals[v] = x == 0 ? R(1) : x;
    }
    LieAlgebra4<R> alg;
    try {
      alg = cls::branch_algebra(id, vals);
    } catch (const std::domain_error&) {
      continue;  // degenerate draw
    }
    auto ah = AlmostHermitian4<R>::standard(alg);
    CurvatureData<R> cd = curvature(ah.m);
    auto wb = weyl_decompose(ah);
    bool w2_op = mat4_is_zero(w2_operator_residual(cd.riem, ah.J));
    bool w3_op = riem4_is_zero(w3_operator_residual(cd.riem, ah.J));
    CHECK(wb.w2_zero == w2_op);
    CHECK(wb.w3_zero == w3_op);
    ++checked;
  }
  CHECK(checked == 50);
}
