#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace edim2 {

// Residue of a rational number mod 1, kept reduced with 0 <= num < den.
// Zero is 0/1.  Exact torsion arithmetic in Q/Z.
struct Qmod1 {
  int64_t num = 0;
  int64_t den = 1;

  Qmod1() = default;

  static Qmod1 of(int64_t p, int64_t q) {
    if (q == 0) throw std::invalid_argument("Qmod1: zero denominator");
    if (q < 0) { p = -p; q = -q; }
    p %= q;
    if (p < 0) p += q;
    int64_t g = std::gcd(p, q);
    Qmod1 r;
    r.num = p / g;
    r.den = q / g;
    return r;
  }

  bool is_zero() const { return num == 0; }

  // Additive order in Q/Z.
  int64_t order() const { return den; }

  friend Qmod1 operator+(const Qmod1& a, const Qmod1& b) {
    int64_t l = std::lcm(a.den, b.den);
    return of(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  friend Qmod1 operator-(const Qmod1& a, const Qmod1& b) {
    int64_t l = std::lcm(a.den, b.den);
    return of(a.num * (l / a.den) - b.num * (l / b.den), l);
  }
  Qmod1 operator-() const { return of(-num, den); }

  Qmod1 times(int64_t k) const { return of(num * (k % den), den); }

  // Canonical y with d*y == *this (one of |d| choices).
  Qmod1 divided_by(int64_t d) const {
    if (d == 0) throw std::invalid_argument("Qmod1: divide by zero");
    if (d < 0) return (-*this).divided_by(-d);
    return of(num, den * d);
  }

  auto operator<=>(const Qmod1&) const = default;
};

struct Qvec2 {
  Qmod1 x, y;
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend Qvec2 operator+(const Qvec2& a, const Qvec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Qvec2 operator-(const Qvec2& a, const Qvec2& b) { return {a.x - b.x, a.y - b.y}; }
  Qvec2 operator-() const { return {-x, -y}; }
  int64_t order() const { return std::lcm(x.order(), y.order()); }
  auto operator<=>(const Qvec2&) const = default;
};

inline size_t hash_combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace edim2

template <>
struct std::hash<edim2::Qmod1> {
  size_t operator()(const edim2::Qmod1& q) const {
    return edim2::hash_combine(std::hash<int64_t>()(q.num), std::hash<int64_t>()(q.den));
  }
};
