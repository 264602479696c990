#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "edim2/mat2.hpp"
#include "edim2/perm.hpp"
#include "edim2/qmod1.hpp"

namespace edim2 {

// Monomial transformation of a toric surface: torus translation t composed
// with the lattice automorphism A.  Acts on the torus by x |-> A x + t
// (additive coordinates in (Q/Z)^2), so
//   (t,A)*(s,B) = (t + A s, A B).
struct MonoElt {
  Qvec2 t;
  Mat2 A;

  bool is_identity() const { return t.is_zero() && A.is_identity(); }

  friend MonoElt operator*(const MonoElt& x, const MonoElt& y) {
    return {x.t + x.A.apply(y.t), x.A * y.A};
  }

  MonoElt inverse() const {
    Mat2 ai = A.inverse();
    return {-ai.apply(t), ai};
  }

  auto operator<=>(const MonoElt&) const = default;
};

enum class ElementKind { Permutation, IntMatrix, Monomial };

using GroupElement = std::variant<Perm, Mat2, MonoElt>;

struct KindMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline ElementKind kind_of(const GroupElement& e) {
  return ElementKind(e.index());
}

GroupElement compose(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement identity_like(const GroupElement& x);
bool is_identity(const GroupElement& x);
bool element_less(const GroupElement& a, const GroupElement& b);
size_t element_hash(const GroupElement& e);
std::string element_str(const GroupElement& e);

struct ElementHash {
  size_t operator()(const GroupElement& e) const { return element_hash(e); }
};

}  // namespace edim2
