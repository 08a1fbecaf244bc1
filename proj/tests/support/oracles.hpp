#pragma once

#include <cstdint>
#include <vector>

// Independent reference computations on small integer data. Nothing here
// calls into the library; arithmetic is plain int64 with elementary row and
// column operations.

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Nonzero invariant factors by repeated gcd pivoting.
std::vector<std::int64_t> invariant_factors(IntMatrix a);

/// Invariant factors from gcds of k×k minors.
std::vector<std::int64_t> determinantal_factors(const IntMatrix& a);

/// Rank over 𝔽p (p = 0 means ℚ, computed with fraction-free elimination).
std::size_t rank(IntMatrix a, std::int64_t p);

struct Homology {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // non-unit factors, sorted by divisibility
  bool operator==(const Homology&) const = default;
};

/// ker(d_out)/im(d_in) for free modules over ℤ (p = 0) or 𝔽p.
/// d_in: m×k, d_out: n×m, d_out·d_in = 0.
Homology free_homology(const IntMatrix& d_in, const IntMatrix& d_out, std::int64_t p,
                       std::size_t middle);

}  // namespace oracle
