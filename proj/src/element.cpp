#include "edim2/element.hpp"

#include <sstream>

namespace edim2 {

GroupElement compose(const GroupElement& x, const GroupElement& y) {
  if (x.index() != y.index()) throw KindMismatchError("compose: mixed element kinds");
  return std::visit(
      [&](const auto& a) -> GroupElement {
        using T = std::decay_t<decltype(a)>;
        return a * std::get<T>(y);
      },
      x);
}

GroupElement inverse(const GroupElement& x) {
  return std::visit([](const auto& a) -> GroupElement { return a.inverse(); }, x);
}

GroupElement identity_like(const GroupElement& x) {
  if (std::holds_alternative<Perm>(x))
    return Perm::identity(std::get<Perm>(x).degree());
  if (std::holds_alternative<Mat2>(x)) return Mat2::identity();
  return MonoElt{Qvec2{}, Mat2::identity()};
}

bool is_identity(const GroupElement& x) {
  return std::visit([](const auto& a) { return a.is_identity(); }, x);
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<Perm>(a)) return std::get<Perm>(a) < std::get<Perm>(b);
  if (std::holds_alternative<Mat2>(a)) return std::get<Mat2>(a) < std::get<Mat2>(b);
  return std::get<MonoElt>(a) < std::get<MonoElt>(b);
}

size_t element_hash(const GroupElement& e) {
  size_t h = e.index();
  if (std::holds_alternative<Perm>(e))
    h = hash_combine(h, std::hash<Perm>()(std::get<Perm>(e)));
  else if (std::holds_alternative<Mat2>(e))
    h = hash_combine(h, std::hash<Mat2>()(std::get<Mat2>(e)));
  else {
    const auto& m = std::get<MonoElt>(e);
    h = hash_combine(h, std::hash<Qmod1>()(m.t.x));
    h = hash_combine(h, std::hash<Qmod1>()(m.t.y));
    h = hash_combine(h, std::hash<Mat2>()(m.A));
  }
  return h;
}

std::string element_str(const GroupElement& e) {
  std::ostringstream os;
  if (std::holds_alternative<Perm>(e)) {
    const auto& p = std::get<Perm>(e);
    bool any = false;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
      if (seen[i] || p(i) == i) continue;
      os << '(';
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) os << ' ';
        os << j;
        first = false;
        j = p(j);
      }
      os << ')';
      any = true;
    }
    if (!any) os << "()";
  } else if (std::holds_alternative<Mat2>(e)) {
    const auto& m = std::get<Mat2>(e);
    os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
  } else {
    const auto& m = std::get<MonoElt>(e);
    os << "t=" << m.t.x.num << '/' << m.t.x.den << ',' << m.t.y.num << '/' << m.t.y.den
       << " A=[[" << m.A.a << ',' << m.A.b << "],[" << m.A.c << ',' << m.A.d << "]]";
  }
  return os.str();
}

}  // namespace edim2
