#include "edim2/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace edim2 {

IMat imat_mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("imat_mul: shape mismatch");
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int64_t xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

namespace {

void swap_rows(IMat& m, IMat& u, int i, int j) {
  for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
  for (int k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
}

void swap_cols(IMat& m, IMat& v, int i, int j) {
  for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
  for (int k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
}

void add_row(IMat& m, IMat& u, int dst, int src, int64_t f) {
  for (int k = 0; k < m.cols; ++k) m.at(dst, k) += f * m.at(src, k);
  for (int k = 0; k < u.cols; ++k) u.at(dst, k) += f * u.at(src, k);
}

void add_col(IMat& m, IMat& v, int dst, int src, int64_t f) {
  for (int k = 0; k < m.rows; ++k) m.at(k, dst) += f * m.at(k, src);
  for (int k = 0; k < v.rows; ++k) v.at(k, dst) += f * v.at(k, src);
}

void negate_row(IMat& m, IMat& u, int i) {
  for (int k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
  for (int k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
}

}  // namespace

Snf smith_normal_form(const IMat& input) {
  IMat m = input;
  IMat u = IMat::identity(m.rows);
  IMat v = IMat::identity(m.cols);
  int n = std::min(m.rows, m.cols);

  for (int t = 0; t < n; ++t) {
    // Find a pivot: nonzero entry of minimal absolute value in the
    // remaining block.
    for (;;) {
      int pi = -1, pj = -1;
      int64_t best = 0;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
          int64_t x = std::abs(m.at(i, j));
          if (x != 0 && (pi < 0 || x < best)) { best = x; pi = i; pj = j; }
        }
      if (pi < 0) goto done_block;  // remaining block is zero
      if (pi != t) swap_rows(m, u, t, pi);
      if (pj != t) swap_cols(m, v, t, pj);
      if (m.at(t, t) < 0) negate_row(m, u, t);

      bool clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        int64_t q = m.at(i, t) / m.at(t, t);
        if (q) add_row(m, u, i, t, -q);
        if (m.at(i, t)) clean = false;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        int64_t q = m.at(t, j) / m.at(t, t);
        if (q) add_col(m, v, j, t, -q);
        if (m.at(t, j)) clean = false;
      }
      if (!clean) continue;  // remainders became new smaller pivot candidates

      // Enforce divisibility d_t | rest.
      bool fixed = false;
      for (int i = t + 1; i < m.rows && !fixed; ++i)
        for (int j = t + 1; j < m.cols && !fixed; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(m, u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
done_block:;

  Snf out;
  out.u = std::move(u);
  out.v = std::move(v);
  out.diag.resize(n);
  for (int i = 0; i < n; ++i) out.diag[i] = m.at(i, i);
  return out;
}

TorsionSolution solve_torsion_system(const IMat& m, const std::vector<Qmod1>& b) {
  if ((int)b.size() != m.rows) throw std::invalid_argument("solve_torsion_system: rhs size");
  TorsionSolution sol;
  if (m.cols == 0) {
    for (const auto& q : b)
      if (!q.is_zero()) return sol;
    sol.consistent = true;
    return sol;
  }
  Snf s = smith_normal_form(m);
  // y = V^-1 x, D y = U b.
  std::vector<Qmod1> ub(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Qmod1 acc;
    for (int j = 0; j < m.rows; ++j) acc = acc + b[j].times(s.u.at(i, j));
    ub[i] = acc;
  }
  int n = (int)s.diag.size();
  std::vector<Qmod1> y(m.cols);
  sol.free_dim = 0;
  for (int i = 0; i < m.cols; ++i) {
    int64_t d = i < n ? s.diag[i] : 0;
    if (d == 0) ++sol.free_dim;  // free Q/Z coordinate
  }
  for (int i = 0; i < m.rows; ++i) {
    int64_t d = i < n ? s.diag[i] : 0;
    if (d == 0) {
      if (!ub[i].is_zero()) return sol;  // inconsistent
    } else if (i < m.cols) {
      y[i] = ub[i].divided_by(d);  // divisible group: always solvable
    }
  }
  sol.consistent = true;
  sol.point.assign(m.cols, Qmod1{});
  for (int i = 0; i < m.cols; ++i) {
    Qmod1 acc;
    for (int j = 0; j < m.cols; ++j) acc = acc + y[j].times(s.v.at(i, j));
    sol.point[i] = acc;
  }
  return sol;
}

}  // namespace edim2
