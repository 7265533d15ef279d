#pragma once

#include "latmax/scalar.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>

namespace latmax {

/// Fixed-size coordinate vector; ordering is lexicographic.
template <class T, std::size_t N>
struct Vec {
  std::array<T, N> c{};

  static constexpr std::size_t size() { return N; }
  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  friend bool operator<(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < N; ++i) {
      if (a.c[i] < b.c[i]) return true;
      if (b.c[i] < a.c[i]) return false;
    }
    return false;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Vec operator*(const T& s, const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = s * a.c[i];
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << to_string(v.c[i]);
    return os << ')';
  }
};

template <class T>
using Vec2 = Vec<T, 2>;
template <class T>
using Vec3 = Vec<T, 3>;

template <std::size_t N>
using IntVec = Vec<Integer, N>;
using IntVec2 = IntVec<2>;
using IntVec3 = IntVec<3>;

/// A lattice direction; stored primitive wherever used as a normal or width direction.
template <std::size_t N>
using Direction = IntVec<N>;

template <class T, std::size_t N>
T dot(const Vec<T, N>& a, const Vec<T, N>& b) {
  T s{0};
  for (std::size_t i = 0; i < N; ++i) s += a.c[i] * b.c[i];
  return s;
}

template <class T, std::size_t N>
T dot(const IntVec<N>& a, const Vec<T, N>& b) requires(!std::is_same_v<T, Integer>) {
  T s{0};
  for (std::size_t i = 0; i < N; ++i) s += T(a.c[i]) * b.c[i];
  return s;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

template <class T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(a, cross(b, c));
}

template <class T>
T cross2(const Vec2<T>& a, const Vec2<T>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

/// Sign of the orientation of (b - a, c - a).
template <class T>
int orient2(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c) {
  return sign(cross2(Vec2<T>(b - a), Vec2<T>(c - a)));
}

/// Sign of det(b - a, c - a, d - a).
template <class T>
int orient3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& d) {
  return sign(det3(Vec3<T>(b - a), Vec3<T>(c - a), Vec3<T>(d - a)));
}

template <std::size_t N>
bool is_zero(const IntVec<N>& v) {
  for (auto x : v.c)
    if (x != 0) return false;
  return true;
}

template <std::size_t N>
Integer content(const IntVec<N>& v) {
  Integer g = 0;
  for (auto x : v.c) g = gcd(g, x);
  return g;
}

template <std::size_t N>
IntVec<N> primitive(const IntVec<N>& v) {
  Integer g = content(v);
  if (g == 0) return v;
  IntVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = v[i] / g;
  return r;
}

/// Positive multiple of a rational vector that is a primitive integer vector.
template <std::size_t N>
IntVec<N> primitive(const Vec<Rat, N>& v) {
  BigInt l = 1;
  for (const auto& x : v.c) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(x)));
  std::array<BigInt, N> scaled;
  BigInt g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    scaled[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  IntVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = g == 0 ? 0 : to_machine(BigInt(scaled[i] / g));
  return r;
}

template <class T, std::size_t N>
Vec<T, N> convert(const IntVec<N>& v) {
  Vec<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = T(v[i]);
  return r;
}

template <std::size_t N>
Vec<Rat, N> to_rat(const Vec<Rat, N>& v) { return v; }
template <std::size_t N>
Vec<Rat, N> to_rat(const IntVec<N>& v) { return convert<Rat>(v); }

template <class T, std::size_t N>
bool is_integral(const Vec<T, N>& v) {
  for (const auto& x : v.c)
    if (!is_integral(x)) return false;
  return true;
}

template <class T, std::size_t N>
IntVec<N> to_integer(const Vec<T, N>& v) {
  IntVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = to_integer(v[i]);
  return r;
}

inline IntVec3 unit(std::size_t i) {
  IntVec3 e{};
  e[i] = 1;
  return e;
}

struct IntVecHash {
  template <std::size_t N>
  std::size_t operator()(const IntVec<N>& v) const {
    std::size_t h = 0;
    for (auto x : v.c) h = h * 1000003u ^ std::hash<Integer>{}(x);
    return h;
  }
};

}  // namespace latmax
