#include "edim2/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace edim2 {

FiniteGroup FiniteGroup::closure(std::vector<GroupElement> generators, int cap) {
  if (generators.empty())
    throw std::invalid_argument("closure: need at least one generator to fix the element kind");
  ElementKind k = kind_of(generators[0]);
  for (const auto& g : generators)
    if (kind_of(g) != k) throw KindMismatchError("closure: mixed element kinds");

  // Permutations of different degrees are unified to the maximum degree.
  if (k == ElementKind::Permutation) {
    int n = 0;
    for (const auto& g : generators) n = std::max(n, std::get<Perm>(g).degree());
    for (auto& g : generators) g = std::get<Perm>(g).extended(n);
  }

  std::unordered_map<GroupElement, int, ElementHash> seen;
  std::vector<GroupElement> out;
  std::deque<GroupElement> todo;
  GroupElement id = identity_like(generators[0]);
  seen.emplace(id, 0);
  out.push_back(id);
  todo.push_back(id);
  while (!todo.empty()) {
    GroupElement cur = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      GroupElement next = compose(cur, g);
      if (seen.emplace(next, (int)out.size()).second) {
        if ((int)out.size() >= cap)
          throw CapExceededError("closure: cap exceeded (group too large or infinite)");
        out.push_back(next);
        todo.push_back(next);
      }
    }
  }
  // right-multiplication by generators suffices: the reachable set is closed
  // under right multiplication and contains 1, hence is the subgroup
  FiniteGroup g;
  g.elems_ = std::move(out);
  g.gens_ = std::move(generators);
  g.kind_ = k;
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_elements(std::vector<GroupElement> elements,
                                       std::vector<GroupElement> generators) {
  if (elements.empty()) throw std::invalid_argument("from_elements: empty");
  FiniteGroup g;
  g.kind_ = kind_of(elements[0]);
  g.elems_ = std::move(elements);
  g.gens_ = std::move(generators);
  g.finalize();
  return g;
}

void FiniteGroup::finalize() {
  std::sort(elems_.begin(), elems_.end(), element_less);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  lookup_.clear();
  lookup_.reserve(elems_.size() * 2);
  for (int i = 0; i < (int)elems_.size(); ++i) lookup_.emplace(elems_[i], i);
  id_index_ = -1;
  for (int i = 0; i < (int)elems_.size(); ++i)
    if (is_identity(elems_[i])) { id_index_ = i; break; }
  if (id_index_ < 0) throw std::invalid_argument("FiniteGroup: identity missing");
  if (gens_.empty())
    for (const auto& e : elems_) gens_.push_back(e);
}

int FiniteGroup::index_of(const GroupElement& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::out_of_range("FiniteGroup::index_of: not a member");
  return it->second;
}

bool FiniteGroup::contains_group(const FiniteGroup& h) const {
  for (const auto& e : h.elements())
    if (!contains(e)) return false;
  return true;
}

bool FiniteGroup::same_elements(const FiniteGroup& h) const {
  return order() == h.order() && contains_group(h);
}

int FiniteGroup::element_order(int i) const {
  GroupElement p = elems_[i];
  int k = 1;
  while (!is_identity(p)) {
    p = compose(p, elems_[i]);
    ++k;
    if (k > order()) throw std::logic_error("element_order: runaway");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
  return true;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> r(order());
  for (int i = 0; i < order(); ++i) r[i] = element_order(i);
  return r;
}

int FiniteGroup::exponent() const {
  int64_t e = 1;
  for (int o : element_orders()) e = std::lcm<int64_t>(e, o);
  return (int)e;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  int n = order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> orbit;
    std::deque<int> todo{i};
    cls[i] = (int)classes.size();
    orbit.push_back(i);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (const auto& g : gens_) {
        GroupElement y = compose(compose(g, elems_[x]), inverse(g));
        int yi = index_of(y);
        if (cls[yi] < 0) {
          cls[yi] = cls[i];
          orbit.push_back(yi);
          todo.push_back(yi);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return classes;
}

int FiniteGroup::centralizer_size(int i) const {
  int c = 0;
  for (int j = 0; j < order(); ++j)
    if (compose(elems_[i], elems_[j]) == compose(elems_[j], elems_[i])) ++c;
  return c;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& generator_indices) const {
  std::vector<GroupElement> gens;
  for (int i : generator_indices) gens.push_back(elems_[i]);
  if (gens.empty()) gens.push_back(elems_[id_index_]);
  return closure(std::move(gens), order() + 1);
}

std::optional<int> abelian_rank(const FiniteGroup& g) {
  if (!g.is_abelian()) return std::nullopt;
  if (g.order() == 1) return 0;
  // rank = max over primes p of log_p #{x : x^p = 1}
  int rank = 0;
  int n = g.order();
  std::vector<int> primes;
  for (int p = 2, m = n; m > 1; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  for (int p : primes) {
    int cnt = 0;
    for (int i = 0; i < g.order(); ++i) {
      GroupElement x = g.element(i);
      GroupElement xp = identity_like(x);
      for (int k = 0; k < p; ++k) xp = compose(xp, x);
      if (is_identity(xp)) ++cnt;
    }
    int r = 0;
    while (cnt > 1) { cnt /= p; ++r; }
    rank = std::max(rank, r);
  }
  return rank;
}

FiniteGroup sylow(const FiniteGroup& g, int p) {
  if (p < 2) throw std::invalid_argument("sylow: p must be prime");
  int target = 1, n = g.order();
  while (n % p == 0) { target *= p; n /= p; }
  if (target == 1) return g.subgroup({g.identity_index()});

  // start with the least element of order p
  int seed = -1;
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == p) { seed = i; break; }
  if (seed < 0) throw std::logic_error("sylow: p divides |G| but no p-element found");
  FiniteGroup pgrp = g.subgroup({seed});

  while (pgrp.order() < target) {
    // least g-element normalizing pgrp whose power lands in pgrp with
    // prime residual order; grows the group by factor p
    bool grown = false;
    for (int i = 0; i < g.order() && !grown; ++i) {
      const GroupElement& x = g.element(i);
      if (pgrp.contains(x)) continue;
      int o = g.element_order(i);
      // p-elements only
      bool ppower = true;
      for (int m = o; m > 1;) {
        if (m % p) { ppower = false; break; }
        m /= p;
      }
      if (!ppower) continue;
      // x must normalize pgrp
      bool normalizes = true;
      GroupElement xi = inverse(x);
      for (const auto& h : pgrp.elements())
        if (!pgrp.contains(compose(compose(x, h), xi))) { normalizes = false; break; }
      if (!normalizes) continue;
      // adjoin the smallest power of x outside pgrp whose p-th power is inside
      GroupElement y = x;
      while (!pgrp.contains(y)) {
        GroupElement yp = y;
        for (int k = 1; k < p; ++k) yp = compose(yp, y);
        if (pgrp.contains(yp)) break;
        y = yp;
      }
      if (pgrp.contains(y)) continue;
      std::vector<GroupElement> gens = pgrp.generators();
      gens.push_back(y);
      pgrp = FiniteGroup::closure(gens, g.order() + 1);
      grown = true;
    }
    if (!grown) throw std::logic_error("sylow: stalled (should not happen)");
  }
  return pgrp;
}

std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g) {
  // normal subgroups are joins of conjugacy-class closures
  auto classes = g.conjugacy_classes();
  std::vector<FiniteGroup> atoms;
  for (const auto& cls : classes) {
    if ((int)cls.size() == 1 && cls[0] == g.identity_index()) continue;
    atoms.push_back(g.subgroup(cls));
  }
  auto key = [](const FiniteGroup& h) {
    size_t s = h.order();
    for (const auto& e : h.elements()) s = hash_combine(s, element_hash(e));
    return s;
  };
  std::vector<FiniteGroup> out{g.subgroup({g.identity_index()})};
  std::set<std::pair<size_t, int>> seen;  // (hash, order) dedupe + verify
  auto add_unique = [&](const FiniteGroup& h) {
    for (const auto& o : out)
      if (o.same_elements(h)) return false;
    out.push_back(h);
    return true;
  };
  (void)key;
  (void)seen;
  bool changed = true;
  while (changed) {
    changed = false;
    size_t cur = out.size();
    for (size_t i = 0; i < cur; ++i)
      for (const auto& atom : atoms) {
        if (out[i].contains_group(atom)) continue;
        std::vector<GroupElement> gens = out[i].generators();
        for (const auto& e : atom.generators()) gens.push_back(e);
        FiniteGroup j = FiniteGroup::closure(gens, g.order() + 1);
        if (add_unique(j)) changed = true;
      }
  }
  std::sort(out.begin(), out.end(),
            [](const FiniteGroup& a, const FiniteGroup& b) { return a.order() < b.order(); });
  return out;
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<int> zi;
  for (int i = 0; i < g.order(); ++i)
    if (g.centralizer_size(i) == g.order()) zi.push_back(i);
  return g.subgroup(zi);
}

FiniteGroup quotient_perm_group(const FiniteGroup& g, const FiniteGroup& n) {
  // cosets of n in g, left-multiplication action
  int m = g.order();
  std::vector<int> coset_of(m, -1);
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) {
    if (coset_of[i] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(i);
    for (const auto& h : n.elements()) coset_of[g.index_of(compose(g.element(i), h))] = c;
  }
  int k = (int)reps.size();
  if (k > 200) throw std::invalid_argument("quotient_perm_group: index too large");
  std::vector<GroupElement> gens;
  for (const auto& x : g.generators()) {
    Perm p;
    p.img.resize(k);
    for (int c = 0; c < k; ++c)
      p.img[coset_of[g.index_of(compose(x, g.element(reps[c])))]] = uint8_t(0);
    // build: image of coset c under left mult by x
    for (int c = 0; c < k; ++c)
      p.img[c] = uint8_t(coset_of[g.index_of(compose(x, g.element(reps[c])))]);
    gens.push_back(p);
  }
  return FiniteGroup::closure(gens, k + 1);
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  if (g.order() == 1) return gens;
  FiniteGroup cur = g.subgroup({g.identity_index()});
  while (cur.order() < g.order()) {
    // deterministic greedy: the element extending the subgroup the most,
    // ties broken by canonical order
    int best = -1;
    int best_size = cur.order();
    for (int i = 0; i < g.order(); ++i) {
      if (cur.contains(g.element(i))) continue;
      std::vector<int> trial = gens;
      trial.push_back(i);
      FiniteGroup ext = g.subgroup(trial);
      if (ext.order() > best_size) {
        best_size = ext.order();
        best = i;
        if (best_size == g.order()) break;
      }
    }
    gens.push_back(best);
    cur = g.subgroup(gens);
  }
  return gens;
}

}  // namespace edim2
