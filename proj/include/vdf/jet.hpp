#pragma once

#include <cmath>
#include <complex>

namespace vdf {

// First-order forward-mode jet: value plus derivative along one seeded
// direction. T is double or std::complex<double>.
template <class T>
struct Jet {
  T v{};
  T d{};

  constexpr Jet() = default;
  constexpr Jet(T value) : v(value) {}  // NOLINT: implicit lift of constants
  constexpr Jet(T value, T deriv) : v(value), d(deriv) {}

  static constexpr Jet variable(T value) { return Jet(value, T(1)); }

  Jet &operator+=(const Jet &o) { v += o.v; d += o.d; return *this; }
  Jet &operator-=(const Jet &o) { v -= o.v; d -= o.d; return *this; }
  Jet &operator*=(const Jet &o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Jet &operator/=(const Jet &o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

template <class T> Jet<T> operator+(Jet<T> a, const Jet<T> &b) { return a += b; }
template <class T> Jet<T> operator-(Jet<T> a, const Jet<T> &b) { return a -= b; }
template <class T> Jet<T> operator*(Jet<T> a, const Jet<T> &b) { return a *= b; }
template <class T> Jet<T> operator/(Jet<T> a, const Jet<T> &b) { return a /= b; }
template <class T> Jet<T> operator-(const Jet<T> &a) { return {-a.v, -a.d}; }

// Mixed arithmetic with plain scalars of the underlying type or with double.
#define VDF_JET_SCALAR_OPS(S)                                                       \
  template <class T> Jet<T> operator+(Jet<T> a, S s) { a.v += T(s); return a; }    \
  template <class T> Jet<T> operator+(S s, Jet<T> a) { a.v += T(s); return a; }    \
  template <class T> Jet<T> operator-(Jet<T> a, S s) { a.v -= T(s); return a; }    \
  template <class T> Jet<T> operator-(S s, const Jet<T> &a) { return {T(s) - a.v, -a.d}; } \
  template <class T> Jet<T> operator*(Jet<T> a, S s) { a.v *= T(s); a.d *= T(s); return a; } \
  template <class T> Jet<T> operator*(S s, Jet<T> a) { a.v *= T(s); a.d *= T(s); return a; } \
  template <class T> Jet<T> operator/(Jet<T> a, S s) { a.v /= T(s); a.d /= T(s); return a; } \
  template <class T> Jet<T> operator/(S s, const Jet<T> &a) {                       \
    return {T(s) / a.v, -T(s) * a.d / (a.v * a.v)};                                 \
  }
VDF_JET_SCALAR_OPS(double)
VDF_JET_SCALAR_OPS(std::complex<double>)
#undef VDF_JET_SCALAR_OPS

template <class T> Jet<T> exp(const Jet<T> &a) {
  using std::exp;
  const T e = exp(a.v);
  return {e, e * a.d};
}
template <class T> Jet<T> sin(const Jet<T> &a) {
  using std::cos; using std::sin;
  return {sin(a.v), cos(a.v) * a.d};
}
template <class T> Jet<T> cos(const Jet<T> &a) {
  using std::cos; using std::sin;
  return {cos(a.v), -sin(a.v) * a.d};
}
template <class T> Jet<T> sqrt(const Jet<T> &a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return {s, a.d / (T(2) * s)};
}

inline Jet<double> real(const Jet<std::complex<double>> &a) { return {a.v.real(), a.d.real()}; }
inline Jet<double> imag(const Jet<std::complex<double>> &a) { return {a.v.imag(), a.d.imag()}; }
inline Jet<std::complex<double>> to_complex(const Jet<double> &a) { return {a.v, a.d}; }

// Uniform accessors so templated kernels work with plain scalars too.
inline double value_of(double a) { return a; }
inline std::complex<double> value_of(std::complex<double> a) { return a; }
template <class T> T value_of(const Jet<T> &a) { return a.v; }

inline double real_part(double a) { return a; }
inline double real_part(std::complex<double> a) { return a.real(); }
inline Jet<double> real_part(const Jet<std::complex<double>> &a) { return real(a); }

}  // namespace vdf
