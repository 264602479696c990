#include "edim2/modsolve.hpp"

#include <stdexcept>

namespace edim2 {

namespace {

int64_t mod_pos(int64_t x, int64_t m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

int64_t pow_mod(int64_t b, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  b = mod_pos(b, m);
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

// Inverse of a unit mod p^a (Euler).
int64_t inv_unit(int64_t x, int64_t pk, int64_t p) {
  int64_t phi = pk - pk / p;
  return pow_mod(x, phi - 1, pk);
}

// Inverse mod m for gcd(x, m) = 1, via extended Euclid.
int64_t inv_mod(int64_t x, int64_t m) {
  int64_t old_r = m, r = mod_pos(x, m), old_s = 0, s = 1;
  while (r) {
    int64_t q = old_r / r;
    old_r -= q * r; std::swap(old_r, r);
    old_s -= q * s; std::swap(old_s, s);
  }
  return mod_pos(old_s, m);
}

// Solve over Z/p^a with valuation pivoting; strict forward elimination so
// every pivot row has zeros at all earlier columns.  Returns one solution.
std::optional<std::vector<int64_t>> solve_prime_power(std::vector<int64_t> rows, int nvars,
                                                      int64_t p, int64_t pk) {
  const int width = nvars + 1;
  const int nrows = int(rows.size() / width);
  auto val = [&](int64_t x) {
    if (x == 0) return 64;
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
  };
  std::vector<int> pivot_row_of_col(nvars, -1);
  std::vector<int64_t> pivot_pow_of_col(nvars, 0);
  int used = 0;
  for (int col = 0; col < nvars && used < nrows; ++col) {
    int best = -1, bestv = 64;
    for (int r = used; r < nrows; ++r) {
      int v = val(mod_pos(rows[size_t(r) * width + col], pk));
      if (v < bestv) { bestv = v; best = r; }
    }
    if (best < 0 || bestv >= 64) continue;  // column zero on remaining rows
    if (best != used)
      for (int j = 0; j <= nvars; ++j)
        std::swap(rows[size_t(best) * width + j], rows[size_t(used) * width + j]);
    int64_t pv = 1;
    for (int i = 0; i < bestv; ++i) pv *= p;
    int64_t piv = mod_pos(rows[size_t(used) * width + col], pk);
    int64_t uinv = inv_unit(piv / pv, pk, p);
    for (int j = 0; j <= nvars; ++j)
      rows[size_t(used) * width + j] = mod_pos(rows[size_t(used) * width + j] * uinv, pk);
    for (int r = used + 1; r < nrows; ++r) {
      int64_t e = mod_pos(rows[size_t(r) * width + col], pk);
      if (e == 0) continue;
      int64_t f = e / pv;  // exact: pivot has minimal valuation
      for (int j = 0; j <= nvars; ++j)
        rows[size_t(r) * width + j] =
            mod_pos(rows[size_t(r) * width + j] - f * rows[size_t(used) * width + j], pk);
    }
    pivot_row_of_col[col] = used;
    pivot_pow_of_col[col] = pv;
    ++used;
  }
  for (int r = used; r < nrows; ++r)
    if (mod_pos(rows[size_t(r) * width + nvars], pk) != 0) return std::nullopt;

  std::vector<int64_t> x(nvars, 0);  // free variables fixed to 0
  for (int col = nvars - 1; col >= 0; --col) {
    int r = pivot_row_of_col[col];
    if (r < 0) continue;
    int64_t rhs = rows[size_t(r) * width + nvars];
    for (int j = col + 1; j < nvars; ++j) {
      int64_t c = rows[size_t(r) * width + j];
      if (c && x[j]) rhs = mod_pos(rhs - c * x[j], pk);
    }
    int64_t pv = pivot_pow_of_col[col];
    if (rhs % pv != 0) return std::nullopt;
    x[col] = mod_pos(rhs / pv, pk);
  }
  return x;
}

}  // namespace

ModLinearSystem::ModLinearSystem(int num_vars, int64_t modulus)
    : nvars_(num_vars), mod_(modulus) {
  if (modulus < 2) throw std::invalid_argument("ModLinearSystem: modulus < 2");
}

void ModLinearSystem::add_row(const std::vector<int64_t>& coeffs, int64_t rhs) {
  if ((int)coeffs.size() != nvars_) throw std::invalid_argument("ModLinearSystem: row width");
  bool allzero = true;
  for (int64_t c : coeffs)
    if (mod_pos(c, mod_)) { allzero = false; break; }
  if (allzero) {
    if (mod_pos(rhs, mod_) != 0) {
      // keep one inconsistent marker row
      rows_.insert(rows_.end(), size_t(nvars_), 0);
      rows_.push_back(mod_pos(rhs, mod_));
    }
    return;
  }
  for (int64_t c : coeffs) rows_.push_back(mod_pos(c, mod_));
  rows_.push_back(mod_pos(rhs, mod_));
}

std::optional<std::vector<int64_t>> ModLinearSystem::solve() const {
  std::vector<std::pair<int64_t, int64_t>> pps;  // (p, p^a)
  int64_t m = mod_;
  for (int64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int64_t pk = 1;
      while (m % p == 0) { pk *= p; m /= p; }
      pps.push_back({p, pk});
    }
  if (m > 1) pps.push_back({m, m});

  std::vector<std::vector<int64_t>> parts;
  for (auto [p, pk] : pps) {
    std::vector<int64_t> r = rows_;
    for (auto& x : r) x = mod_pos(x, pk);
    auto s = solve_prime_power(std::move(r), nvars_, p, pk);
    if (!s) return std::nullopt;
    parts.push_back(std::move(*s));
  }
  std::vector<int64_t> x(nvars_, 0);
  for (int j = 0; j < nvars_; ++j) {
    int64_t acc = 0, accmod = 1;
    for (size_t i = 0; i < pps.size(); ++i) {
      int64_t pk = pps[i].second, r = parts[i][j];
      int64_t t = mod_pos(r - acc, pk);
      acc += accmod * ((t * inv_mod(accmod, pk)) % pk);
      accmod *= pk;
      acc = mod_pos(acc, accmod);
    }
    x[j] = acc;
  }
  return x;
}

}  // namespace edim2
