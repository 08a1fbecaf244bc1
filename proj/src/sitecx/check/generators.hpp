#pragma once

#include <cstdint>
#include <random>

#include "sitecx/complex/complex.hpp"
#include "sitecx/resolve/kan.hpp"

namespace sitecx {

/// Seeded source of random test data. All draws go through
/// std::uniform_int_distribution on one mt19937_64 stream.
class Generator {
 public:
  explicit Generator(std::mt19937_64& engine) : engine_(engine) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  /// ±2 over ℤ and ℚ, a residue over 𝔽p.
  Scalar scalar(const Ring& ring);
  Matrix matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  /// Quotient of a random semi-representable presheaf by the subpresheaf
  /// generated by a few random sections.
  ModPresheaf presheaf(const SitePtr& site, const Ring& ring, std::size_t max_summands = 3,
                       std::size_t max_relations = 2);
  /// Random combination of generators of Hom(F, G).
  PresheafMap natural_map(const ModPresheaf& f, const ModPresheaf& g);
  /// Direct sum of random pieces S^n(P) and (P → Q) in degrees lo..lo+length−1.
  Complex complex(const SitePtr& site, const Ring& ring, int lo, int length);
  /// Two-term complex of free modules on the terminal site.
  Complex module_complex(const Ring& ring, std::size_t max_rank = 2);
  /// ⊕ₛ Λ[Hom(cₛ, −)] ⊗ Mₛ for one or two random objects cₛ and random
  /// two-term complexes Mₛ, with maps by postcomposition.
  CoefficientFunctor coefficients(const SitePtr& site, const Ring& ring);

 private:
  std::mt19937_64& engine_;
};

}  // namespace sitecx
