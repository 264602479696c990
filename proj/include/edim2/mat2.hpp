#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "edim2/qmod1.hpp"

namespace edim2 {

using Vec2 = std::array<int64_t, 2>;

// 2x2 integer matrix, row-major: [[a,b],[c,d]].
struct Mat2 {
  int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 of(int64_t a, int64_t b, int64_t c, int64_t d) { return {a, b, c, d}; }

  int64_t det() const { return a * d - b * c; }
  int64_t trace() const { return a + d; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Mat2 transpose() const { return {a, c, b, d}; }

  // Inverse of a unimodular matrix (det must be +-1).
  Mat2 inverse() const {
    int64_t dt = det();
    if (dt != 1 && dt != -1) throw std::domain_error("Mat2::inverse: not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
  }

  Vec2 apply(const Vec2& v) const { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; }

  Qvec2 apply(const Qvec2& t) const {
    return {t.x.times(a) + t.y.times(b), t.x.times(c) + t.y.times(d)};
  }

  auto operator<=>(const Mat2&) const = default;
};

inline Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

// Multiplicative order; returns 0 if the order exceeds `cap` (infinite for
// our purposes -- finite-order elements of GL2(Z) have order <= 12).
inline int order_of(const Mat2& m, int cap = 24) {
  Mat2 p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace edim2

template <>
struct std::hash<edim2::Mat2> {
  size_t operator()(const edim2::Mat2& m) const {
    size_t h = std::hash<int64_t>()(m.a);
    h = edim2::hash_combine(h, std::hash<int64_t>()(m.b));
    h = edim2::hash_combine(h, std::hash<int64_t>()(m.c));
    h = edim2::hash_combine(h, std::hash<int64_t>()(m.d));
    return h;
  }
};
