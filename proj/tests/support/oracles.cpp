#include "support/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oracle {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(std::llabs(a), std::llabs(b)); }

std::int64_t det(const IntMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    std::int64_t term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::int64_t> invariant_factors(IntMatrix a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      std::int64_t q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      std::int64_t q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) dirty = true;
    }
    if (dirty) continue;
    std::size_t bad_row = rows;
    for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          bad_row = i;
          break;
        }
    if (bad_row != rows) {
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad_row][j];
      continue;
    }
    out.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return out;
}

std::vector<std::int64_t> determinantal_factors(const IntMatrix& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        g = gcd64(g, det(m));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

std::size_t rank(IntMatrix a, std::int64_t p) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (p > 0) a[i][c] = mod(a[i][c], p);
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (p > 0) {
        std::int64_t f = mod(a[i][c], p) * inv_mod(a[r][c], p) % p;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
      } else {
        std::int64_t x = a[i][c], y = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * y - a[r][j] * x;
        std::int64_t g = 0;
        for (auto v : a[i]) g = gcd64(g, v);
        if (g > 1)
          for (auto& v : a[i]) v /= g;
      }
    }
    ++r;
  }
  return r;
}

Homology free_homology(const IntMatrix& d_in, const IntMatrix& d_out, std::int64_t p,
                       std::size_t middle) {
  std::size_t rank_out = d_out.empty() ? 0 : rank(d_out, p);
  std::size_t rank_in = d_in.empty() ? 0 : rank(d_in, p);
  Homology h;
  h.free_rank = middle - rank_out - rank_in;
  if (p == 0 && !d_in.empty())
    for (auto f : invariant_factors(d_in))
      if (f != 1) h.torsion.push_back(f);
  return h;
}

}  // namespace oracle
