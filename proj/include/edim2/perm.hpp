#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "edim2/qmod1.hpp"

namespace edim2 {

// Permutation of {0..n-1}, stored as the image sequence.
struct Perm {
  std::vector<uint8_t> img;

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = uint8_t(i);
    return p;
  }

  int degree() const { return (int)img.size(); }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  int operator()(int i) const { return img[i]; }

  // (x*y)(i) = x(y(i)): apply y first.
  friend Perm operator*(const Perm& x, const Perm& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.img.resize(x.degree());
    for (int i = 0; i < x.degree(); ++i) r.img[i] = x.img[y.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(degree());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = uint8_t(i);
    return r;
  }

  Perm extended(int n) const {
    Perm r = *this;
    for (int i = degree(); i < n; ++i) r.img.push_back(uint8_t(i));
    return r;
  }

  auto operator<=>(const Perm&) const = default;
};

// Build from disjoint-or-not cycles over {0..n-1}.
inline Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  Perm p = Perm::identity(n);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    Perm c = Perm::identity(n);
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= n) throw std::out_of_range("perm_from_cycles");
      c.img[from] = uint8_t(to);
    }
    p = c * p;
  }
  return p;
}

}  // namespace edim2

template <>
struct std::hash<edim2::Perm> {
  size_t operator()(const edim2::Perm& p) const {
    size_t h = p.img.size();
    for (uint8_t v : p.img) h = edim2::hash_combine(h, v);
    return h;
  }
};
