#pragma once

#include <array>
#include <vector>

#include "lie4/exterior.hpp"
#include "lie4/linalg.hpp"

namespace lie4 {

/// Structure constants c^k_{ij} of a 4-dimensional real Lie algebra,
/// [e_i, e_j] = sum_k c^k_{ij} e_k. Antisymmetry in (i,j) is enforced by
/// storage; the Jacobi identity is checked, not enforced.
template <class S>
class LieAlgebra4 {
 public:
  LieAlgebra4() {
    for (auto& a : c_)
      for (auto& b : a)
        for (auto& x : b) x = S(0);
  }

  static LieAlgebra4 abelian() { return LieAlgebra4(); }

  /// Sets [e_i, e_j] += v e_k (and the antisymmetric counterpart). i != j.
  void set_bracket(int i, int j, int k, const S& v) {
    c_[k][i][j] = v;
    c_[k][j][i] = -v;
  }

  const S& c(int k, int i, int j) const { return c_[k][i][j]; }

  Vec4<S> bracket_basis(int i, int j) const {
    return {c_[0][i][j], c_[1][i][j], c_[2][i][j], c_[3][i][j]};
  }

  Vec4<S> bracket(const Vec4<S>& x, const Vec4<S>& y) const {
    Vec4<S> r = zero_vec4<S>();
    for (int i = 0; i < 4; ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (int j = 0; j < 4; ++j) {
        if (scalar_is_zero(y[j])) continue;
        for (int k = 0; k < 4; ++k) r[k] = r[k] + x[i] * y[j] * c_[k][i][j];
      }
    }
    return r;
  }

  bool operator==(const LieAlgebra4& other) const {
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!scalar_is_zero(c_[k][i][j] - other.c_[k][i][j])) return false;
    return true;
  }

 private:
  std::array<std::array<std::array<S, 4>, 4>, 4> c_;
};

/// The Maurer-Cartan differentials (de^1, ..., de^4) of the dual coframe.
template <class S>
struct CoframeDiff {
  std::array<TwoForm<S>, 4> d;
};

/// Bracket/coframe duality: de^k(X, Y) = -e^k([X, Y]).
template <class S>
CoframeDiff<S> to_coframe(const LieAlgebra4<S>& alg) {
  CoframeDiff<S> cf;
  for (int k = 0; k < 4; ++k)
    for (int A = 0; A < 6; ++A) {
      auto [i, j] = kTwoFormPairs[A];
      cf.d[k].c[A] = -alg.c(k, i, j);
    }
  return cf;
}

template <class S>
LieAlgebra4<S> from_coframe(const CoframeDiff<S>& cf) {
  LieAlgebra4<S> alg;
  for (int k = 0; k < 4; ++k)
    for (int A = 0; A < 6; ++A) {
      auto [i, j] = kTwoFormPairs[A];
      alg.set_bracket(i, j, k, -cf.d[k].c[A]);
    }
  return alg;
}

/// d of a left-invariant 1-form, alpha = sum_k alpha_k e^k.
template <class S>
TwoForm<S> exterior_d(const OneForm<S>& alpha, const CoframeDiff<S>& cf) {
  TwoForm<S> r;
  for (int k = 0; k < 4; ++k) r = r + alpha.c[k] * cf.d[k];
  return r;
}

/// d of a left-invariant 2-form via Leibniz on the coframe basis.
template <class S>
ThreeForm<S> exterior_d(const TwoForm<S>& w, const CoframeDiff<S>& cf) {
  ThreeForm<S> r;
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = kTwoFormPairs[A];
    // d(ei ^ ej) = dei ^ ej - ei ^ dej
    ThreeForm<S> t = wedge(cf.d[i], OneForm<S>::basis(j)) - wedge(OneForm<S>::basis(i), cf.d[j]);
    for (int s = 0; s < 4; ++s) r.c[s] = r.c[s] + w.c[A] * t.c[s];
  }
  return r;
}

template <class S>
Vec4<S> basis_vec(int i) {
  Vec4<S> v = zero_vec4<S>();
  v[i] = S(1);
  return v;
}

template <class S>
struct JacobiDefect {
  /// residual[i][j][k] = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  std::array<std::array<std::array<Vec4<S>, 4>, 4>, 4> residual;
  bool is_zero;
};

template <class S>
JacobiDefect<S> jacobi_defect(const LieAlgebra4<S>& alg) {
  JacobiDefect<S> d;
  d.is_zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Vec4<S> r = alg.bracket(alg.bracket_basis(i, j), basis_vec<S>(k)) +
                    alg.bracket(alg.bracket_basis(j, k), basis_vec<S>(i)) +
                    alg.bracket(alg.bracket_basis(k, i), basis_vec<S>(j));
        d.residual[i][j][k] = r;
        if (!vec4_is_zero(r)) d.is_zero = false;
      }
  return d;
}

template <class S>
S jacobi_defect_norm(const JacobiDefect<S>& d) {
  S best = S(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
          S a = scalar_abs(d.residual[i][j][k][m]);
          if (a > best) best = a;
        }
  return best;
}

template <class S>
struct Unimodularity {
  Vec4<S> ad_traces;  // trace(ad_{e_i})
  bool is_unimodular;
};

template <class S>
Unimodularity<S> unimodularity(const LieAlgebra4<S>& alg) {
  Unimodularity<S> u;
  u.is_unimodular = true;
  for (int i = 0; i < 4; ++i) {
    S tr = S(0);
    for (int k = 0; k < 4; ++k) tr = tr + alg.c(k, i, k);
    u.ad_traces[i] = tr;
    if (!scalar_is_zero(tr)) u.is_unimodular = false;
  }
  return u;
}

namespace detail {

/// Row-reduces a list of 4-vectors in place; returns the independent rows.
template <class S>
std::vector<Vec4<S>> row_basis(std::vector<Vec4<S>> rows) {
  std::vector<Vec4<S>> basis;
  for (auto v : rows) {
    for (const auto& b : basis) {
      int lead = -1;
      for (int i = 0; i < 4; ++i)
        if (!scalar_is_zero(b[i])) {
          lead = i;
          break;
        }
      if (lead >= 0 && !scalar_is_zero(v[lead])) {
        S f = v[lead] / b[lead];
        for (int i = 0; i < 4; ++i) v[i] = v[i] - f * b[i];
      }
    }
    if (!vec4_is_zero(v)) basis.push_back(v);
  }
  return basis;
}

template <class S>
std::vector<Vec4<S>> bracket_span(const LieAlgebra4<S>& alg, const std::vector<Vec4<S>>& a,
                                  const std::vector<Vec4<S>>& b) {
  std::vector<Vec4<S>> products;
  for (const auto& x : a)
    for (const auto& y : b) products.push_back(alg.bracket(x, y));
  return row_basis(std::move(products));
}

}  // namespace detail

template <class S>
struct SolvabilityProfile {
  std::vector<int> derived_dims;  // dims of g, g^1, g^2, ... until stable
  int commutator_dim;
  bool is_solvable;
  bool commutator_is_heisenberg;
};

template <class S>
SolvabilityProfile<S> solvability_profile(const LieAlgebra4<S>& alg) {
  SolvabilityProfile<S> p;
  std::vector<Vec4<S>> cur = {basis_vec<S>(0), basis_vec<S>(1), basis_vec<S>(2), basis_vec<S>(3)};
  p.derived_dims.push_back(4);
  std::vector<Vec4<S>> g1;
  for (int step = 0; step < 6; ++step) {
    auto next = detail::bracket_span(alg, cur, cur);
    if (step == 0) g1 = next;
    p.derived_dims.push_back(static_cast<int>(next.size()));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    if (cur.empty()) break;
  }
  p.commutator_dim = static_cast<int>(g1.size());
  p.is_solvable = p.derived_dims.back() == 0;

  // Heisenberg test: dim g^1 = 3, dim [g^1,g^1] = 1, [g^1,g^1] central in g^1.
  p.commutator_is_heisenberg = false;
  if (p.commutator_dim == 3) {
    auto center_cand = detail::bracket_span(alg, g1, g1);
    if (center_cand.size() == 1) {
      bool central = true;
      for (const auto& x : g1)
        if (!vec4_is_zero(alg.bracket(center_cand[0], x))) central = false;
      p.commutator_is_heisenberg = central;
    }
  }
  return p;
}

}  // namespace lie4
