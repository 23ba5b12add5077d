#pragma once

#include <array>
#include <stdexcept>

#include "lie4/curvature.hpp"
#include "lie4/exterior.hpp"
#include "lie4/lie_algebra.hpp"

namespace lie4 {

/// Almost-Hermitian data on a metric Lie algebra: J acts on vectors,
/// (J x)^i = sum_j J[i][j] x^j, and omega is the fundamental 2-form.
template <class S>
struct AlmostHermitian4 {
  MetricLieAlgebra<S> m;
  Mat4<S> J;
  TwoForm<S> omega;

  /// The paper's standard structure: J e_1 = e_2, J e_3 = e_4,
  /// omega = e12 + e34, identity metric.
  static AlmostHermitian4 standard(const LieAlgebra4<S>& alg) {
    AlmostHermitian4 ah;
    ah.m.alg = alg;
    ah.m.g = identity_mat4<S>();
    ah.J = zero_mat4<S>();
    ah.J[1][0] = S(1);
    ah.J[0][1] = S(-1);
    ah.J[3][2] = S(1);
    ah.J[2][3] = S(-1);
    ah.omega = TwoForm<S>::basis(0, 1) + TwoForm<S>::basis(2, 3);
    return ah;
  }
};

template <class S>
struct StructureReport {
  Mat4<S> j_squared_residual;     // J^2 + Id
  Mat4<S> isometry_residual;      // J^T g J - g
  Mat4<S> compatibility_residual; // omega(e_i,e_j) - g(J e_i, e_j)
  ThreeForm<S> d_omega;
  bool all_zero() const {
    return mat4_is_zero(j_squared_residual) && mat4_is_zero(isometry_residual) &&
           mat4_is_zero(compatibility_residual) && d_omega.is_zero();
  }
};

/// Residual report for the almost Kahler conditions; reports, never throws.
template <class S>
StructureReport<S> check_structure(const AlmostHermitian4<S>& ah) {
  StructureReport<S> rep;
  Mat4<S> j2 = mat4_mul(ah.J, ah.J);
  rep.j_squared_residual = mat4_sub(j2, zero_mat4<S>());
  for (int i = 0; i < 4; ++i) rep.j_squared_residual[i][i] = j2[i][i] + S(1);

  rep.isometry_residual = mat4_sub(mat4_mul(mat4_transpose(ah.J), mat4_mul(ah.m.g, ah.J)), ah.m.g);

  rep.compatibility_residual = zero_mat4<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4<S> jei = mat4_apply(ah.J, basis_vec<S>(i));
      S gij = S(0);
      for (int a = 0; a < 4; ++a) gij = gij + ah.m.g[a][j] * jei[a];
      rep.compatibility_residual[i][j] = ah.omega(basis_vec<S>(i), basis_vec<S>(j)) - gij;
    }

  rep.d_omega = exterior_d(ah.omega, to_coframe(ah.m.alg));
  return rep;
}

template <class S>
struct NijenhuisTensor {
  std::array<std::array<Vec4<S>, 4>, 4> n;  // N(e_i, e_j)
  bool is_zero;
};

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]; vanishes iff J integrable.
template <class S>
NijenhuisTensor<S> nijenhuis(const LieAlgebra4<S>& alg, const Mat4<S>& J) {
  if (!jacobi_defect(alg).is_zero)
    throw std::invalid_argument("nijenhuis: Jacobi identity fails");
  NijenhuisTensor<S> t;
  t.is_zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4<S> ei = basis_vec<S>(i), ej = basis_vec<S>(j);
      Vec4<S> jei = mat4_apply(J, ei), jej = mat4_apply(J, ej);
      Vec4<S> r = alg.bracket(jei, jej) - mat4_apply(J, alg.bracket(jei, ej)) -
                  mat4_apply(J, alg.bracket(ei, jej)) - alg.bracket(ei, ej);
      t.n[i][j] = r;
      if (!vec4_is_zero(r)) t.is_zero = false;
    }
  return t;
}

template <class S>
struct RicciInvarianceReport {
  Mat4<S> residual;            // ricci(J.,J.) - ricci(.,.)
  std::array<S, 6> conditions; // r11-r22, r12, r13-r24, r14+r23, r33-r44, r34
  bool is_zero;
};

template <class S>
RicciInvarianceReport<S> ricci_j_invariance(const Mat4<S>& ricci, const Mat4<S>& J) {
  RicciInvarianceReport<S> rep;
  Mat4<S> pulled = mat4_mul(mat4_transpose(J), mat4_mul(ricci, J));
  rep.residual = mat4_sub(pulled, ricci);
  rep.conditions = {ricci[0][0] - ricci[1][1], ricci[0][1],
                    ricci[0][2] - ricci[1][3], ricci[0][3] + ricci[1][2],
                    ricci[2][2] - ricci[3][3], ricci[2][3]};
  rep.is_zero = mat4_is_zero(rep.residual);
  return rep;
}

template <class S>
RicciInvarianceReport<S> ricci_j_invariance(const AlmostHermitian4<S>& ah) {
  return ricci_j_invariance(curvature(ah.m).ricci, ah.J);
}

/// Self-dual/anti-self-dual 2-form basis (unnormalized, norm^2 = 2):
/// w+_1 = e12+e34, w+_2 = e13-e24, w+_3 = e14+e23,
/// w-_1 = e12-e34, w-_2 = e13+e24, w-_3 = e14-e23.
template <class S>
Mat6<S> sd_basis_matrix() {
  Mat6<S> p = zero_mat6<S>();
  auto setcol = [&](int col, int A, const S& v) { p[A][col] = v; };
  setcol(0, 0, S(1)); setcol(0, 5, S(1));
  setcol(1, 1, S(1)); setcol(1, 4, S(-1));
  setcol(2, 2, S(1)); setcol(2, 3, S(1));
  setcol(3, 0, S(1)); setcol(3, 5, S(-1));
  setcol(4, 1, S(1)); setcol(4, 4, S(1));
  setcol(5, 2, S(1)); setcol(5, 3, S(-1));
  return p;
}

template <class S>
struct WeylBlocks {
  S scal_part;                          // scal/12
  Mat6<S> ricci0_kn;                    // (1/2) KN(ricci_0) as Lambda^2 endomorphism
  Mat6<S> weyl;                         // full Weyl operator in the e^{ij} basis
  std::array<std::array<S, 3>, 3> w_plus;
  std::array<std::array<S, 3>, 3> w_minus;
  S w1;                                 // coefficient on (1/8) Omega x Omega - (1/12) Id
  std::array<S, 2> w2;                  // R*Omega <-> [[Lambda^{0,2}]] off-block
  std::array<std::array<S, 2>, 2> w3;   // traceless block on [[Lambda^{0,2}]]
  bool w2_zero;
  bool w3_zero;
};

/// Decomposes R = (scal/12) Id + KN(ricci_0) + W+ + W- as endomorphisms of
/// Lambda^2 and splits W+ under U(2). Requires the orthonormal frame
/// (identity metric); the paper's bases are always orthonormal.
template <class S>
WeylBlocks<S> weyl_decompose(const AlmostHermitian4<S>& ah) {
  if (!mat4_is_zero(mat4_sub(ah.m.g, identity_mat4<S>())))
    throw std::invalid_argument("weyl_decompose: orthonormal frame required");
  CurvatureData<S> cd = curvature(ah.m);
  WeylBlocks<S> out;

  // curvature operator in the e^{ij} basis
  Mat6<S> op = zero_mat6<S>();
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      auto [i, j] = kTwoFormPairs[A];
      auto [k, l] = kTwoFormPairs[B];
      op[A][B] = cd.riem[i][j][k][l];
    }

  out.scal_part = cd.scal / S(12);

  Mat4<S> ricci0 = cd.ricci;
  S quarter_scal = cd.scal / S(4);
  for (int i = 0; i < 4; ++i) ricci0[i][i] = ricci0[i][i] - quarter_scal;

  // Kulkarni-Nomizu with g = Id, normalized so reassembly holds exactly:
  // (h (x) g)_{ijkl} = h_ik d_jl + h_jl d_ik - h_il d_jk - h_jk d_il, halved.
  out.ricci0_kn = zero_mat6<S>();
  S half = S(1) / S(2);
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      auto [i, j] = kTwoFormPairs[A];
      auto [k, l] = kTwoFormPairs[B];
      auto d = [](int a, int b) { return a == b ? 1 : 0; };
      S v = ricci0[i][k] * S(d(j, l)) + ricci0[j][l] * S(d(i, k)) - ricci0[i][l] * S(d(j, k)) -
            ricci0[j][k] * S(d(i, l));
      out.ricci0_kn[A][B] = half * v;
    }

  out.weyl = zero_mat6<S>();
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      S v = op[A][B] - out.ricci0_kn[A][B];
      if (A == B) v = v - out.scal_part;
      out.weyl[A][B] = v;
    }

  // conjugate into the SD/ASD basis: columns have norm^2 = 2, so P^{-1} = P^T/2
  Mat6<S> p = sd_basis_matrix<S>();
  Mat6<S> wp = zero_mat6<S>();
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      S v = S(0);
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) v = v + p[a][A] * out.weyl[a][b] * p[b][B];
      wp[A][B] = half * v;
    }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      out.w_plus[a][b] = wp[a][b];
      out.w_minus[a][b] = wp[a + 3][b + 3];
    }

  // U(2) splitting of W+ relative to Omega = w+_1:
  // generator of W1+ is diag(1/6, -1/12, -1/12) in this basis.
  out.w1 = S(6) * out.w_plus[0][0];
  out.w2 = {out.w_plus[0][1], out.w_plus[0][2]};
  S htr = half * (out.w_plus[1][1] + out.w_plus[2][2]);
  out.w3 = {{{out.w_plus[1][1] - htr, out.w_plus[1][2]}, {out.w_plus[2][1], out.w_plus[2][2] - htr}}};
  out.w2_zero = scalar_is_zero(out.w2[0]) && scalar_is_zero(out.w2[1]);
  out.w3_zero = true;
  for (const auto& row : out.w3)
    for (const auto& x : row)
      if (!scalar_is_zero(x)) out.w3_zero = false;
  return out;
}

/// Reassembly residual of the Lambda^2 decomposition; zero by construction,
/// kept as an explicit self-check of the normalization.
template <class S>
bool weyl_reassembles(const CurvatureData<S>& cd, const WeylBlocks<S>& wb) {
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B) {
      auto [i, j] = kTwoFormPairs[A];
      auto [k, l] = kTwoFormPairs[B];
      S v = wb.ricci0_kn[A][B] + wb.weyl[A][B];
      if (A == B) v = v + wb.scal_part;
      if (!scalar_is_zero(v - cd.riem[i][j][k][l])) return false;
    }
  return true;
}

/// All partial traces W_{iaja} of the extracted Weyl part vanish.
template <class S>
bool weyl_trace_free(const WeylBlocks<S>& wb) {
  // rebuild the 4-tensor from the Lambda^2 matrix
  auto w4 = [&](int i, int j, int k, int l) -> S {
    if (i == j || k == l) return S(0);
    S sgn = S(1);
    if (i > j) { std::swap(i, j); sgn = -sgn; }
    if (k > l) { std::swap(k, l); sgn = -sgn; }
    return sgn * wb.weyl[two_form_index(i, j)][two_form_index(k, l)];
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      S tr = S(0);
      for (int a = 0; a < 4; ++a) tr = tr + w4(i, a, j, a);
      if (!scalar_is_zero(tr)) return false;
    }
  return true;
}

template <class S>
struct GrayOperators {
  Mat4<S> rho_star;   // rho*(R)(x,y) = sum_i R(x, e_i, J y, J e_i)
  Riemann4<S> l2r;
  Riemann4<S> l3r;
};

namespace detail {

template <class S>
S riem_eval(const Riemann4<S>& r, const Vec4<S>& x, const Vec4<S>& y, const Vec4<S>& z,
            const Vec4<S>& w) {
  S v = S(0);
  for (int i = 0; i < 4; ++i) {
    if (scalar_is_zero(x[i])) continue;
    for (int j = 0; j < 4; ++j) {
      if (scalar_is_zero(y[j])) continue;
      for (int k = 0; k < 4; ++k) {
        if (scalar_is_zero(z[k])) continue;
        for (int l = 0; l < 4; ++l) {
          if (scalar_is_zero(w[l])) continue;
          v = v + x[i] * y[j] * z[k] * w[l] * r[i][j][k][l];
        }
      }
    }
  }
  return v;
}

}  // namespace detail

template <class S>
GrayOperators<S> gray_operators(const Riemann4<S>& r, const Mat4<S>& J) {
  GrayOperators<S> out;
  std::array<Vec4<S>, 4> e, je;
  for (int i = 0; i < 4; ++i) {
    e[i] = basis_vec<S>(i);
    je[i] = mat4_apply(J, e[i]);
  }
  out.rho_star = zero_mat4<S>();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      S v = S(0);
      for (int i = 0; i < 4; ++i) v = v + detail::riem_eval(r, e[x], e[i], je[y], je[i]);
      out.rho_star[x][y] = v;
    }
  S half = S(1) / S(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          out.l3r[i][j][k][l] = detail::riem_eval(r, je[i], je[j], je[k], je[l]);
          out.l2r[i][j][k][l] =
              half * (r[i][j][k][l] + detail::riem_eval(r, je[i], je[j], e[k], e[l]) +
                      detail::riem_eval(r, je[i], e[j], je[k], e[l]) +
                      detail::riem_eval(r, je[i], e[j], e[k], je[l]));
        }
  return out;
}

/// W2+ criterion of the curvature section: rho*(R - L3 R) = 0.
template <class S>
Mat4<S> w2_operator_residual(const Riemann4<S>& r, const Mat4<S>& J) {
  GrayOperators<S> ops = gray_operators(r, J);
  Riemann4<S> diff;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) diff[i][j][k][l] = r[i][j][k][l] - ops.l3r[i][j][k][l];
  return gray_operators(diff, J).rho_star;
}

/// W3+ criterion: (1/4)(I - L2)(I + L3)(R) = 0.
template <class S>
Riemann4<S> w3_operator_residual(const Riemann4<S>& r, const Mat4<S>& J) {
  GrayOperators<S> ops = gray_operators(r, J);
  Riemann4<S> sum;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) sum[i][j][k][l] = r[i][j][k][l] + ops.l3r[i][j][k][l];
  GrayOperators<S> ops2 = gray_operators(sum, J);
  Riemann4<S> out;
  S quarter = S(1) / S(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          out[i][j][k][l] = quarter * (sum[i][j][k][l] - ops2.l2r[i][j][k][l]);
  return out;
}

template <class S>
bool riem4_is_zero(const Riemann4<S>& r) {
  for (const auto& a : r)
    for (const auto& b : a)
      for (const auto& c : b)
        for (const auto& x : c)
          if (!scalar_is_zero(x)) return false;
  return true;
}

template <class S>
S riem4_max_abs(const Riemann4<S>& r) {
  S best = S(0);
  for (const auto& a : r)
    for (const auto& b : a)
      for (const auto& c : b)
        for (const auto& x : c)
          if (scalar_abs(x) > best) best = scalar_abs(x);
  return best;
}

/// Defect tensors of the Gray curvature conditions (G1), (G2), (G3).
template <class S>
std::array<Riemann4<S>, 3> gray_condition_defects(const Riemann4<S>& r, const Mat4<S>& J) {
  std::array<Vec4<S>, 4> e, je;
  for (int i = 0; i < 4; ++i) {
    e[i] = basis_vec<S>(i);
    je[i] = mat4_apply(J, e[i]);
  }
  std::array<Riemann4<S>, 3> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          S rxyzw = r[i][j][k][l];
          out[0][i][j][k][l] = rxyzw - detail::riem_eval(r, e[i], e[j], je[k], je[l]);
          out[1][i][j][k][l] = rxyzw - (detail::riem_eval(r, je[i], je[j], e[k], e[l]) +
                                        detail::riem_eval(r, je[i], e[j], je[k], e[l]) +
                                        detail::riem_eval(r, je[i], e[j], e[k], je[l]));
          out[2][i][j][k][l] = rxyzw - detail::riem_eval(r, je[i], je[j], je[k], je[l]);
        }
  return out;
}

}  // namespace lie4
