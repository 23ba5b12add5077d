#pragma once

#include <array>
#include <stdexcept>
#include <utility>

#include "lie4/linalg.hpp"
#include "lie4/scalar.hpp"

namespace lie4 {

/// Global basis order for 2-forms: e12, e13, e14, e23, e24, e34.
/// Every 6-vector in the repository uses this order.
constexpr std::array<std::pair<int, int>, 6> kTwoFormPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int two_form_index(int i, int j) {
  // i < j, zero-based
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  return table[i][j];
}

/// Basis order for 3-forms: e123, e124, e134, e234.
constexpr std::array<std::array<int, 3>, 4> kThreeFormTriples = {
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

template <class S>
struct OneForm {
  Vec4<S> c{S(0), S(0), S(0), S(0)};

  static OneForm basis(int i) {
    OneForm f;
    f.c[i] = S(1);
    return f;
  }
  S operator()(const Vec4<S>& x) const {
    return c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3];
  }
};

template <class S>
struct TwoForm {
  std::array<S, 6> c{S(0), S(0), S(0), S(0), S(0), S(0)};

  static TwoForm basis(int i, int j) {
    TwoForm w;
    if (i < j)
      w.c[two_form_index(i, j)] = S(1);
    else if (j < i)
      w.c[two_form_index(j, i)] = S(-1);
    return w;
  }

  /// Antisymmetric evaluation on vectors.
  S operator()(const Vec4<S>& x, const Vec4<S>& y) const {
    S v = S(0);
    for (int a = 0; a < 6; ++a) {
      auto [i, j] = kTwoFormPairs[a];
      v = v + c[a] * (x[i] * y[j] - x[j] * y[i]);
    }
    return v;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
};

template <class S>
struct ThreeForm {
  std::array<S, 4> c{S(0), S(0), S(0), S(0)};

  bool is_zero() const {
    for (const auto& x : c)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
};

/// Orientation sign relative to e1^e2^e3^e4. Default +1, which makes
/// Omega = e12 + e34 self-dual.
struct Orientation {
  int sign = +1;
};

template <class S>
OneForm<S> operator+(const OneForm<S>& a, const OneForm<S>& b) {
  OneForm<S> r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class S>
OneForm<S> operator*(const S& k, const OneForm<S>& a) {
  OneForm<S> r;
  for (int i = 0; i < 4; ++i) r.c[i] = k * a.c[i];
  return r;
}

template <class S>
TwoForm<S> operator+(const TwoForm<S>& a, const TwoForm<S>& b) {
  TwoForm<S> r;
  for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class S>
TwoForm<S> operator-(const TwoForm<S>& a, const TwoForm<S>& b) {
  TwoForm<S> r;
  for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

template <class S>
TwoForm<S> operator*(const S& k, const TwoForm<S>& a) {
  TwoForm<S> r;
  for (int i = 0; i < 6; ++i) r.c[i] = k * a.c[i];
  return r;
}

template <class S>
ThreeForm<S> operator+(const ThreeForm<S>& a, const ThreeForm<S>& b) {
  ThreeForm<S> r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class S>
ThreeForm<S> operator-(const ThreeForm<S>& a, const ThreeForm<S>& b) {
  ThreeForm<S> r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

/// Exterior product of 1-forms, normalized so (ei^ej)(e_i, e_j) = 1.
template <class S>
TwoForm<S> wedge(const OneForm<S>& a, const OneForm<S>& b) {
  TwoForm<S> w;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kTwoFormPairs[k];
    w.c[k] = a.c[i] * b.c[j] - a.c[j] * b.c[i];
  }
  return w;
}

/// Exterior product of a 2-form with a 1-form.
template <class S>
ThreeForm<S> wedge(const TwoForm<S>& w, const OneForm<S>& a) {
  ThreeForm<S> t;
  // (ei^ej)^ek contributes sign of the permutation sorting (i,j,k)
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = kTwoFormPairs[A];
    for (int k = 0; k < 4; ++k) {
      if (k == i || k == j) continue;
      int idx[3] = {i, j, k};
      int sign = 1;
      // bubble sort, track parity
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2 - p; ++q)
          if (idx[q] > idx[q + 1]) {
            std::swap(idx[q], idx[q + 1]);
            sign = -sign;
          }
      int slot = -1;
      for (int s = 0; s < 4; ++s)
        if (kThreeFormTriples[s][0] == idx[0] && kThreeFormTriples[s][1] == idx[1] &&
            kThreeFormTriples[s][2] == idx[2])
          slot = s;
      t.c[slot] = t.c[slot] + S(sign) * w.c[A] * a.c[k];
    }
  }
  return t;
}

template <class S>
ThreeForm<S> wedge(const OneForm<S>& a, const TwoForm<S>& w) {
  return wedge(w, a);  // 1-form and 2-form commute under wedge
}

/// Hodge star on 2-forms for an SPD metric on the oriented 4-space.
/// For a non-identity metric the exact backend requires det(g) to be a
/// perfect square (otherwise the star leaves the rational field).
template <class S>
TwoForm<S> hodge_star(const TwoForm<S>& w, const Mat4<S>& g, const Orientation& o = {}) {
  if (!mat4_is_spd(g)) throw std::invalid_argument("hodge_star: metric is not SPD");
  Mat4<S> ginv = mat4_inverse(g);
  S vol = scalar_sqrt(mat4_det(g));
  if (o.sign < 0) vol = -vol;

  // raise both indices: w^{ij} = g^{ia} g^{jb} w_{ab}
  Mat4<S> lower = zero_mat4<S>();
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = kTwoFormPairs[A];
    lower[i][j] = w.c[A];
    lower[j][i] = -w.c[A];
  }
  Mat4<S> upper = zero_mat4<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) upper[i][j] = upper[i][j] + ginv[i][a] * ginv[j][b] * lower[a][b];

  auto eps = [](int i, int j, int k, int l) -> int {
    int p[4] = {i, j, k, l};
    int sign = 1;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (p[a] == p[b]) return 0;
        if (p[a] > p[b]) sign = -sign;
      }
    return sign;
  };

  TwoForm<S> r;
  for (int B = 0; B < 6; ++B) {
    auto [k, l] = kTwoFormPairs[B];
    S acc = S(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int e = eps(i, j, k, l);
        if (e != 0) acc = acc + S(e) * upper[i][j];
      }
    r.c[B] = vol * acc / S(2);
  }
  return r;
}

/// Splits w into (self-dual, anti-self-dual) parts via (1 +- *)/2.
template <class S>
std::pair<TwoForm<S>, TwoForm<S>> sd_asd_split(const TwoForm<S>& w, const Mat4<S>& g,
                                               const Orientation& o = {}) {
  TwoForm<S> sw = hodge_star(w, g, o);
  TwoForm<S> plus, minus;
  S half = S(1) / S(2);
  for (int i = 0; i < 6; ++i) {
    plus.c[i] = half * (w.c[i] + sw.c[i]);
    minus.c[i] = half * (w.c[i] - sw.c[i]);
  }
  return {plus, minus};
}

}  // namespace lie4
