#pragma once

#include <array>
#include <stdexcept>

#include "lie4/scalar.hpp"

namespace lie4 {

template <class S>
using Vec4 = std::array<S, 4>;

template <class S>
using Mat4 = std::array<std::array<S, 4>, 4>;

template <class S>
using Mat6 = std::array<std::array<S, 6>, 6>;

template <class S>
Vec4<S> zero_vec4() {
  return {S(0), S(0), S(0), S(0)};
}

template <class S>
Mat4<S> zero_mat4() {
  Mat4<S> m;
  for (auto& row : m) row = zero_vec4<S>();
  return m;
}

template <class S>
Mat4<S> identity_mat4() {
  Mat4<S> m = zero_mat4<S>();
  for (int i = 0; i < 4; ++i) m[i][i] = S(1);
  return m;
}

template <class S>
Mat6<S> zero_mat6() {
  Mat6<S> m;
  for (auto& row : m)
    for (auto& x : row) x = S(0);
  return m;
}

template <class S>
Vec4<S> operator+(const Vec4<S>& a, const Vec4<S>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

template <class S>
Vec4<S> operator-(const Vec4<S>& a, const Vec4<S>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

template <class S>
Vec4<S> operator*(const S& c, const Vec4<S>& v) {
  return {c * v[0], c * v[1], c * v[2], c * v[3]};
}

template <class S>
bool vec4_is_zero(const Vec4<S>& v) {
  for (const auto& x : v)
    if (!scalar_is_zero(x)) return false;
  return true;
}

template <class S>
Mat4<S> mat4_mul(const Mat4<S>& a, const Mat4<S>& b) {
  Mat4<S> r = zero_mat4<S>();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

template <class S>
Mat4<S> mat4_sub(const Mat4<S>& a, const Mat4<S>& b) {
  Mat4<S> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

template <class S>
Mat4<S> mat4_transpose(const Mat4<S>& a) {
  Mat4<S> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
  return r;
}

template <class S>
Vec4<S> mat4_apply(const Mat4<S>& a, const Vec4<S>& v) {
  Vec4<S> r = zero_vec4<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] = r[i] + a[i][j] * v[j];
  return r;
}

template <class S>
bool mat4_is_zero(const Mat4<S>& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!scalar_is_zero(x)) return false;
  return true;
}

template <class S>
bool mat4_equal(const Mat4<S>& a, const Mat4<S>& b) {
  return mat4_is_zero(mat4_sub(a, b));
}

/// Gauss-Jordan inverse over a field scalar. Throws on a singular matrix.
template <class S>
Mat4<S> mat4_inverse(const Mat4<S>& a) {
  Mat4<S> m = a;
  Mat4<S> inv = identity_mat4<S>();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!scalar_is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    S p = m[col][col];
    for (int j = 0; j < 4; ++j) {
      m[col][j] = m[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || scalar_is_zero(m[r][col])) continue;
      S f = m[r][col];
      for (int j = 0; j < 4; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

template <class S>
S mat4_det(const Mat4<S>& a) {
  Mat4<S> m = a;
  S det = S(1);
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!scalar_is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return S(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      S f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  return det;
}

template <class S>
bool mat4_is_symmetric(const Mat4<S>& a) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!scalar_is_zero(a[i][j] - a[j][i])) return false;
  return true;
}

/// Symmetric positive definite test via leading principal minors.
/// Only meaningful for ordered scalars; symbolic backends skip the check.
template <class S>
bool mat4_is_spd(const Mat4<S>& a) {
  if (!mat4_is_symmetric(a)) return false;
  if constexpr (scalar_traits<S>::ordered) {
    for (int k = 1; k <= 4; ++k) {
      // leading k x k minor, cofactor expansion is overkill; reuse elimination
      std::array<std::array<S, 4>, 4> m{};
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = a[i][j];
      S det = S(1);
      bool singular = false;
      for (int col = 0; col < k && !singular; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
          if (!scalar_is_zero(m[r][col])) {
            pivot = r;
            break;
          }
        if (pivot < 0) {
          singular = true;
          break;
        }
        if (pivot != col) {
          std::swap(m[pivot], m[col]);
          det = -det;
        }
        det = det * m[col][col];
        for (int r = col + 1; r < k; ++r) {
          S f = m[r][col] / m[col][col];
          for (int j = col; j < k; ++j) m[r][j] = m[r][j] - f * m[col][j];
        }
      }
      if (singular || !(det > S(0))) return false;
    }
  }
  return true;
}

template <class S>
S mat4_max_abs(const Mat4<S>& a) {
  S best = S(0);
  for (const auto& row : a)
    for (const auto& x : row)
      if (scalar_abs(x) > best) best = scalar_abs(x);
  return best;
}

}  // namespace lie4
