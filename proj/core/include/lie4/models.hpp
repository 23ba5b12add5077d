#pragma once

#include <array>
#include <stdexcept>

#include "lie4/lie_algebra.hpp"

namespace lie4 {

/// The 18 coefficients of the coframe ansatz:
/// de1 = a1 e12 + a2 e13 + a3 e14 + a4 e23 + a5 e24 + a6 e34,
/// de2 = b1 e12 + ... , de3 = c1 e12 + ... , de4 = 0.
template <class S>
struct ParamFamily {
  std::array<S, 6> a{S(0), S(0), S(0), S(0), S(0), S(0)};
  std::array<S, 6> b{S(0), S(0), S(0), S(0), S(0), S(0)};
  std::array<S, 6> c{S(0), S(0), S(0), S(0), S(0), S(0)};
};

template <class S>
CoframeDiff<S> build_ansatz(const ParamFamily<S>& p) {
  CoframeDiff<S> cf;
  for (int A = 0; A < 6; ++A) {
    cf.d[0].c[A] = p.a[A];
    cf.d[1].c[A] = p.b[A];
    cf.d[2].c[A] = p.c[A];
    cf.d[3].c[A] = S(0);
  }
  return cf;
}

/// The classified two-parameter family (structure equations 16 with
/// a4 = t != 0, a5 = s):
/// de1 = -s(e13 - e24) + ((t^2-s^2)/2t) e14 + t e23,
/// de2 = -(s^2/t) e13 + s(e14 + e23) + ((s^2-t^2)/2t) e24,
/// de3 = ((t^2+s^2)/t) e34, de4 = 0.
template <class S>
ParamFamily<S> family_params(const S& s, const S& t) {
  if (scalar_is_zero(t)) throw std::invalid_argument("family: t must be nonzero");
  ParamFamily<S> p;
  S two = S(2);
  p.a[1] = -s;
  p.a[2] = (t * t - s * s) / (two * t);
  p.a[3] = t;
  p.a[4] = s;
  p.b[1] = -(s * s) / t;
  p.b[2] = s;
  p.b[3] = s;
  p.b[4] = (s * s - t * t) / (two * t);
  p.c[5] = (t * t + s * s) / t;
  return p;
}

template <class S>
CoframeDiff<S> family_coframe(const S& s, const S& t) {
  return build_ansatz(family_params(s, t));
}

template <class S>
LieAlgebra4<S> family_algebra(const S& s, const S& t) {
  return from_coframe(family_coframe(s, t));
}

/// g_{4,9}(alpha): df1 = 0, df2 = (1-alpha) f12, df3 = -f13,
/// df4 = -alpha f14 - f23. The theorem's value is alpha = 1/2.
template <class S>
CoframeDiff<S> g49_coframe(const S& alpha) {
  CoframeDiff<S> cf;
  cf.d[1].c[two_form_index(0, 1)] = S(1) - alpha;
  cf.d[2].c[two_form_index(0, 2)] = S(-1);
  cf.d[3].c[two_form_index(0, 3)] = -alpha;
  cf.d[3].c[two_form_index(1, 2)] = S(-1);
  return cf;
}

template <class S>
LieAlgebra4<S> g49_algebra(const S& alpha) {
  return from_coframe(g49_coframe(alpha));
}

/// R^2 x| sol_2: [e1,e3] = -e1 = [e2,e4], [e2,e3] = e2, [e3,e4] = 2 e4.
template <class S>
LieAlgebra4<S> r2sol2_algebra() {
  LieAlgebra4<S> alg;
  alg.set_bracket(0, 2, 0, S(-1));
  alg.set_bracket(1, 3, 0, S(-1));
  alg.set_bracket(1, 2, 1, S(1));
  alg.set_bracket(2, 3, 3, S(2));
  return alg;
}

/// 3-dimensional Heisenberg plus a line: [e2,e3] = e1.
template <class S>
LieAlgebra4<S> heisenberg_r_algebra() {
  LieAlgebra4<S> alg;
  alg.set_bracket(1, 2, 0, S(1));
  return alg;
}

/// sl(2,R) plus a line: [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1.
template <class S>
LieAlgebra4<S> sl2_r_algebra() {
  LieAlgebra4<S> alg;
  alg.set_bracket(0, 1, 1, S(2));
  alg.set_bracket(0, 2, 2, S(-2));
  alg.set_bracket(1, 2, 0, S(1));
  return alg;
}

}  // namespace lie4
