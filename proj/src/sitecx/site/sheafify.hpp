#pragma once

#include "sitecx/site/presheaf.hpp"

namespace sitecx {

/// F⁺(c) = matching families on the minimal covering sieve of c, the
/// colimit over all covering sieves of a finite site.
struct PlusConstruction {
  ModPresheaf presheaf;
  PresheafMap unit;                // F → F⁺
  std::vector<Subquotient> parts;  // F⁺(c) inside ⊕_{f ∈ S(c)} F(dom f)
};

PlusConstruction plus(const ModPresheaf& f);
/// φ⁺ : F⁺ → G⁺.
PresheafMap plus_map(const ModPresheaf& source, const PlusConstruction& source_plus,
                     const PlusConstruction& target_plus, const PresheafMap& phi);

struct Sheafification {
  ModPresheaf sheaf;
  PresheafMap unit;  // F → aF
  PlusConstruction first;
  PlusConstruction second;
};

Sheafification sheafify(const ModPresheaf& f);
/// a(φ) : aF → aG given the two sheafifications.
PresheafMap sheafify_map(const ModPresheaf& source, const Sheafification& source_sheaf,
                         const Sheafification& target_sheaf, const PresheafMap& phi);

/// F(c) → Match(S, F) is an isomorphism for every covering sieve S.
bool is_sheaf(const ModPresheaf& f);
/// a(φ) is objectwise an isomorphism.
bool is_local_isomorphism(const ModPresheaf& source, const ModPresheaf& target, const PresheafMap& phi);

}  // namespace sitecx
