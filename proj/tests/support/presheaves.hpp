#pragma once

#include "sitecx/complex/complex.hpp"
#include "support/random.hpp"

namespace testing_support {

/// Random coefficient: ±2 over ℤ, a residue over 𝔽p.
sitecx::Scalar random_scalar(Rng& rng, const sitecx::Ring& ring);

/// Quotient of a random semi-representable presheaf by the subpresheaf
/// generated by a few random sections.
sitecx::ModPresheaf random_presheaf(Rng& rng, const sitecx::SitePtr& site, const sitecx::Ring& ring,
                                   std::size_t max_summands = 3, std::size_t max_relations = 2);

/// Random combination of generators of Hom(F, G).
sitecx::PresheafMap random_natural_map(Rng& rng, const sitecx::ModPresheaf& f, const sitecx::ModPresheaf& g);

/// Direct sum of random pieces S^n(P) and (P → Q) in degrees lo..lo+length−1.
sitecx::Complex random_presheaf_complex(Rng& rng, const sitecx::SitePtr& site, const sitecx::Ring& ring, int lo,
                                        int length);

}  // namespace testing_support
