#pragma once

#include <map>
#include <optional>
#include <string>

#include "sitecx/complex/homology.hpp"
#include "sitecx/simplicial/simplicial.hpp"

namespace sitecx {

/// Augmented simplicial set-presheaf over y(base), truncated at level N, with
/// each level decomposed as a coproduct of representables.
struct Hypercover {
  AugmentedSimplicialSet augmented;
  ObjectId base = 0;
  std::vector<std::vector<RepresentableSummand>> summands;

  int truncation() const { return augmented.simplicial.truncation(); }
  const SitePtr& site() const { return augmented.target.site(); }
  const SimplicialSet& simplicial() const { return augmented.simplicial; }
};

/// Wraps an augmented object over y(base), computing the decompositions;
/// throws invalid_input when a level is not a coproduct of representables.
Hypercover make_hypercover(AugmentedSimplicialSet x, ObjectId base);

/// Level n is the (n+1)-fold fiber product of ⊔ y(cᵢ) over y(c), for a
/// family of morphisms cᵢ → c.
Hypercover cech_nerve(const SitePtr& site, ObjectId c, const std::vector<MorphismId>& family, int truncation);

/// 1-coskeletal hypercover of a poset site: level 0 is ⊔ y(cᵢ), the pair
/// (i, j) with i ≠ j contributes the listed objects below cᵢ ∧ cⱼ (the meet
/// itself when not listed), and higher levels are compatible tuples.
Hypercover refined_nerve(const SitePtr& site, ObjectId base, const std::vector<ObjectId>& family,
                         const std::map<std::pair<std::size_t, std::size_t>, std::vector<ObjectId>>& refinements,
                         int truncation);

/// Constant augmented object at c (every level y(c), all maps identities).
Hypercover constant_hypercover(const SitePtr& site, ObjectId c, int truncation);

struct HypercoverVerdict {
  bool holds = true;
  std::optional<int> first_failure;
  std::string detail;
};
/// Both conditions for n ≤ N: levels are coproducts of representables and
/// X_n → (cosk_{n−1} sk_{n−1} X)_n is a generalized cover.
HypercoverVerdict verify_hypercover(const AugmentedSimplicialSet& x, int n_max);

struct HypercoverChain {
  Complex complex;                       // Moore complex of Λ(c_•)
  ComplexMorphism augmentation;          // to S^0 Λ(base)
  std::vector<std::vector<ObjectId>> semi_representable;  // summand objects per level
};
HypercoverChain chain_of_hypercover(const Hypercover& x, const Ring& ring);

/// a_τH_0 Λ(c_•) ≅ a_τΛ(c) through the augmentation and a_τH_n = 0 for
/// 1 ≤ n ≤ N−1; one verdict per degree 0..N−1.
Verdicts check_acyclicity(const Hypercover& x, const Ring& ring);

}  // namespace sitecx
