#pragma once

#include <stdexcept>

#include "lie4/lie_algebra.hpp"
#include "lie4/linalg.hpp"

namespace lie4 {

/// A 4-dimensional Lie algebra with an inner product on it (equivalently a
/// left-invariant Riemannian metric on the corresponding Lie group).
template <class S>
struct MetricLieAlgebra {
  LieAlgebra4<S> alg;
  Mat4<S> g = identity_mat4<S>();
};

/// Connection coefficients: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k.
template <class S>
using Connection = std::array<std::array<Vec4<S>, 4>, 4>;

/// Koszul formula for left-invariant fields:
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
template <class S>
Connection<S> levi_civita(const MetricLieAlgebra<S>& m) {
  if (!mat4_is_spd(m.g)) throw std::invalid_argument("levi_civita: metric is not SPD");
  Mat4<S> ginv = mat4_inverse(m.g);
  auto ip = [&](const Vec4<S>& x, const Vec4<S>& y) {
    S v = S(0);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) v = v + m.g[a][b] * x[a] * y[b];
    return v;
  };
  Connection<S> gamma;
  S half = S(1) / S(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4<S> rhs;  // rhs[m] = 2 g(nabla_i e_j, e_m)
      for (int k = 0; k < 4; ++k) {
        rhs[k] = ip(m.alg.bracket_basis(i, j), basis_vec<S>(k)) -
                 ip(m.alg.bracket_basis(j, k), basis_vec<S>(i)) +
                 ip(m.alg.bracket_basis(k, i), basis_vec<S>(j));
      }
      for (int k = 0; k < 4; ++k) {
        S acc = S(0);
        for (int l = 0; l < 4; ++l) acc = acc + ginv[k][l] * rhs[l];
        gamma[i][j][k] = half * acc;
      }
    }
  return gamma;
}

template <class S>
using Riemann4 = std::array<std::array<std::array<std::array<S, 4>, 4>, 4>, 4>;

template <class S>
struct CurvatureData {
  Connection<S> gamma;
  /// Fully covariant curvature, sign fixed so that R[i][j][i][j] is the
  /// (unnormalized) sectional curvature of the plane (e_i, e_j):
  /// R_{ijkl} = g(R(e_i,e_j) e_l, e_k) with
  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
  Riemann4<S> riem;
  Mat4<S> ricci;  // ricci(X,Y) = sum_i R(e_i, X, e_i, Y) in an orthonormal frame
  S scal;
};

/// Formal Koszul curvature of the bracket data, without requiring the Jacobi
/// identity. Used to derive conditions on ansatz coefficients that are not
/// yet known to define a Lie algebra; prefer curvature() everywhere else.
template <class S>
CurvatureData<S> curvature_unchecked(const MetricLieAlgebra<S>& m) {
  CurvatureData<S> out;
  out.gamma = levi_civita(m);
  const auto& gamma = out.gamma;

  auto nabla = [&](int i, const Vec4<S>& v) {
    Vec4<S> r = zero_vec4<S>();
    for (int j = 0; j < 4; ++j) {
      if (scalar_is_zero(v[j])) continue;
      for (int k = 0; k < 4; ++k) r[k] = r[k] + v[j] * gamma[i][j][k];
    }
    return r;
  };

  // endo[i][j][k] = R(e_i, e_j) e_k
  std::array<std::array<std::array<Vec4<S>, 4>, 4>, 4> endo;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4<S> bij = m.alg.bracket_basis(i, j);
      for (int k = 0; k < 4; ++k) {
        Vec4<S> term = nabla(i, gamma[j][k]) - nabla(j, gamma[i][k]);
        for (int a = 0; a < 4; ++a) {
          if (scalar_is_zero(bij[a])) continue;
          for (int b = 0; b < 4; ++b) term[b] = term[b] - bij[a] * gamma[a][k][b];
        }
        endo[i][j][k] = term;
      }
    }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          S v = S(0);
          for (int a = 0; a < 4; ++a) v = v + m.g[k][a] * endo[i][j][l][a];
          out.riem[i][j][k][l] = v;
        }

  Mat4<S> ginv = mat4_inverse(m.g);
  out.ricci = zero_mat4<S>();
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      S v = S(0);
      for (int i = 0; i < 4; ++i)
        for (int l = 0; l < 4; ++l) v = v + ginv[i][l] * out.riem[i][j][l][k];
      out.ricci[j][k] = v;
    }
  out.scal = S(0);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) out.scal = out.scal + ginv[j][k] * out.ricci[j][k];
  return out;
}

template <class S>
CurvatureData<S> curvature(const MetricLieAlgebra<S>& m) {
  if (!jacobi_defect(m.alg).is_zero)
    throw std::invalid_argument("curvature: Jacobi identity fails, not a Lie algebra");
  return curvature_unchecked(m);
}

/// Torsion residual nabla_X Y - nabla_Y X - [X,Y] on basis pairs.
template <class S>
bool is_torsion_free(const MetricLieAlgebra<S>& m, const Connection<S>& gamma) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4<S> t = gamma[i][j] - gamma[j][i] - m.alg.bracket_basis(i, j);
      if (!vec4_is_zero(t)) return false;
    }
  return true;
}

/// Metric compatibility: g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0.
template <class S>
bool is_metric_compatible(const MetricLieAlgebra<S>& m, const Connection<S>& gamma) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        S v = S(0);
        for (int a = 0; a < 4; ++a) v = v + gamma[i][j][a] * m.g[a][k] + gamma[i][k][a] * m.g[j][a];
        if (!scalar_is_zero(v)) return false;
      }
  return true;
}

template <class S>
bool curvature_symmetries_hold(const Riemann4<S>& r) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          if (!scalar_is_zero(r[i][j][k][l] + r[j][i][k][l])) return false;
          if (!scalar_is_zero(r[i][j][k][l] + r[i][j][l][k])) return false;
          if (!scalar_is_zero(r[i][j][k][l] - r[k][l][i][j])) return false;
        }
  return true;
}

template <class S>
bool first_bianchi_holds(const Riemann4<S>& r) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          if (!scalar_is_zero(r[i][j][k][l] + r[j][k][i][l] + r[k][i][j][l])) return false;
  return true;
}

}  // namespace lie4
