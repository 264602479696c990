#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace edim2 {

// Dense linear system A x = b over Z/M (M composite allowed).
// Rows are appended; solve() returns one solution when the system is
// consistent.  Used for cocycle-splitting systems, so M is a product of
// small prime powers.
class ModLinearSystem {
 public:
  ModLinearSystem(int num_vars, int64_t modulus);

  void add_row(const std::vector<int64_t>& coeffs, int64_t rhs);
  int num_vars() const { return nvars_; }
  int64_t modulus() const { return mod_; }

  std::optional<std::vector<int64_t>> solve() const;

 private:
  int nvars_;
  int64_t mod_;
  std::vector<int64_t> rows_;  // flattened (nvars_ + 1 per row, rhs last)
};

}  // namespace edim2
