#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edim2/qmod1.hpp"

namespace edim2 {

// Small dense integer matrix (row-major).
struct IMat {
  int rows = 0, cols = 0;
  std::vector<int64_t> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  int64_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  int64_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

IMat imat_mul(const IMat& x, const IMat& y);

// Smith normal form: U*A*V = D with U, V unimodular and D diagonal,
// diag entries returned nonnegative with d1 | d2 | ... .
struct Snf {
  IMat u, v;                  // unimodular row/column transforms
  std::vector<int64_t> diag;  // length min(rows, cols)
};

Snf smith_normal_form(const IMat& m);

// Solution set of M*x = b over (Q/Z)^cols where b has torsion entries.
// Always representable; `consistent` is exact.  When consistent,
// `point` is one solution and `free_dim` counts Q/Z-free coordinates.
struct TorsionSolution {
  bool consistent = false;
  std::vector<Qmod1> point;
  int free_dim = 0;
};

TorsionSolution solve_torsion_system(const IMat& m, const std::vector<Qmod1>& b);

}  // namespace edim2
