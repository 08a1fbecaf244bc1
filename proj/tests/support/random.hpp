#pragma once

#include <cstdint>
#include <random>

#include "sitecx/exactalg/matrix.hpp"
#include "support/oracles.hpp"

namespace testing_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

  oracle::IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
    oracle::IntMatrix m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
      for (auto& x : row) x = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

/// Bounded free complex over ℤ with diffs[k]: degree lo+k+1 → lo+k, built
/// from elementary pieces Λ → Λ (×m) and conjugated by unimodular changes of
/// basis, so the homology is known in closed form.
struct RandomComplex {
  int lo = 0;
  std::vector<std::size_t> ranks;
  std::vector<oracle::IntMatrix> diffs;
  std::vector<oracle::Homology> expected;  // per degree
};
RandomComplex random_complex(Rng& rng, int lo, std::size_t length, std::size_t max_rank = 3,
                             bool positive_multipliers = false);

/// Random integer matrix with determinant ±1 and its inverse.
std::pair<oracle::IntMatrix, oracle::IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps);
oracle::IntMatrix multiply(const oracle::IntMatrix& a, const oracle::IntMatrix& b, std::size_t inner,
                           std::size_t cols);

sitecx::Matrix to_matrix(const oracle::IntMatrix& m, std::size_t cols_if_empty = 0);
oracle::IntMatrix to_int_matrix(const sitecx::Matrix& m);

}  // namespace testing_support
