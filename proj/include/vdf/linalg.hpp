#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <algorithm>
#include <type_traits>

#include "vdf/jet.hpp"

namespace vdf {

using cplx = std::complex<double>;

template <class T> struct Vec3;
template <class T> struct Mat3;

template <class S> struct is_tensor : std::false_type {};
template <class T> struct is_tensor<Vec3<T>> : std::true_type {};
template <class T> struct is_tensor<Mat3<T>> : std::true_type {};
template <class S> concept Scalar = !is_tensor<std::remove_cvref_t<S>>::value;

template <class T>
struct Vec3 {
  std::array<T, 3> c{};

  constexpr Vec3() = default;
  constexpr Vec3(T x, T y, T z) : c{x, y, z} {}

  T &operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const T &operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3 &operator+=(const Vec3 &o) { for (int i = 0; i < 3; ++i) (*this)[i] += o[i]; return *this; }
  Vec3 &operator-=(const Vec3 &o) { for (int i = 0; i < 3; ++i) (*this)[i] -= o[i]; return *this; }
  template <Scalar S> Vec3 &operator*=(const S &s) { for (auto &x : c) x = x * s; return *this; }
};

template <class T> Vec3<T> operator+(Vec3<T> a, const Vec3<T> &b) { return a += b; }
template <class T> Vec3<T> operator-(Vec3<T> a, const Vec3<T> &b) { return a -= b; }
template <class T> Vec3<T> operator-(const Vec3<T> &a) { return {-a[0], -a[1], -a[2]}; }
template <class T, Scalar S> Vec3<T> operator*(Vec3<T> a, const S &s) { return a *= s; }
template <class T, Scalar S> Vec3<T> operator*(const S &s, Vec3<T> a) { return a *= s; }
template <class T, Scalar S> Vec3<T> operator/(const Vec3<T> &a, const S &s) {
  return {a[0] / s, a[1] / s, a[2] / s};
}

template <class T, class U> auto dot(const Vec3<T> &a, const Vec3<U> &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
template <class T> Vec3<T> cross(const Vec3<T> &a, const Vec3<T> &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// 3x3 matrix, row-major.
template <class T>
struct Mat3 {
  std::array<T, 9> m{};

  T &operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
  const T &operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r(i, i) = T(1.0);
    return r;
  }

  Mat3 &operator+=(const Mat3 &o) { for (std::size_t i = 0; i < 9; ++i) m[i] += o.m[i]; return *this; }
  Mat3 &operator-=(const Mat3 &o) { for (std::size_t i = 0; i < 9; ++i) m[i] -= o.m[i]; return *this; }
  template <Scalar S> Mat3 &operator*=(const S &s) { for (auto &x : m) x = x * s; return *this; }
};

template <class T> Mat3<T> operator+(Mat3<T> a, const Mat3<T> &b) { return a += b; }
template <class T> Mat3<T> operator-(Mat3<T> a, const Mat3<T> &b) { return a -= b; }
template <class T, Scalar S> Mat3<T> operator*(Mat3<T> a, const S &s) { return a *= s; }
template <class T, Scalar S> Mat3<T> operator*(const S &s, Mat3<T> a) { return a *= s; }

template <class T> Mat3<T> operator*(const Mat3<T> &a, const Mat3<T> &b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T s{};
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

template <class T> Vec3<T> operator*(const Mat3<T> &a, const Vec3<T> &v) {
  Vec3<T> r;
  for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

template <class T> Mat3<T> transpose(const Mat3<T> &a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

template <class T> T trace(const Mat3<T> &a) { return a(0, 0) + a(1, 1) + a(2, 2); }

template <class T> Mat3<T> outer(const Vec3<T> &a, const Vec3<T> &b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

// E(u)_{pq} = ε_{p s q} u_s, so that E(u)·w = u × w.
template <class T> Mat3<T> levi_civita_dual(const Vec3<T> &u) {
  Mat3<T> r;
  r(0, 1) = -u[2]; r(0, 2) = u[1];
  r(1, 0) = u[2];  r(1, 2) = -u[0];
  r(2, 0) = -u[1]; r(2, 1) = u[0];
  return r;
}

// Inverse of levi_civita_dual applied to a general matrix: w_i = ε_{i r p} M_{p r}.
template <class T> Vec3<T> levi_civita_contract(const Mat3<T> &a) {
  return {a(2, 1) - a(1, 2), a(0, 2) - a(2, 0), a(1, 0) - a(0, 1)};
}

template <class T, class U> Mat3<U> cast_mat(const Mat3<T> &a) {
  Mat3<U> r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = U(a.m[i]);
  return r;
}
template <class C> Vec3<C> lift_vec(const Vec3<double> &a) { return {C(a[0]), C(a[1]), C(a[2])}; }
template <class T, class U> Vec3<U> cast_vec(const Vec3<T> &a) { return {U(a[0]), U(a[1]), U(a[2])}; }

using Vec3d = Vec3<double>;
using Vec3c = Vec3<cplx>;
using Mat3d = Mat3<double>;
using Dyadic3C = Mat3<cplx>;

inline double norm(const Vec3d &a) { return std::sqrt(dot(a, a)); }
inline Vec3d real(const Vec3c &a) { return {a[0].real(), a[1].real(), a[2].real()}; }

inline double max_abs(const Dyadic3C &a) {
  double r = 0.0;
  for (const auto &x : a.m) r = std::max(r, std::abs(x));
  return r;
}
inline double frobenius(const Dyadic3C &a) {
  double s = 0.0;
  for (const auto &x : a.m) s += std::norm(x);
  return std::sqrt(s);
}
inline double max_abs(const Vec3d &a) {
  return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

}  // namespace vdf
