#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

/// Module of presheaf morphisms F → G as a subquotient of
/// ⊕_c G(c)^{gens F(c)}; an element is the column-major concatenation of
/// the component matrices.
Subquotient hom_module(const ModPresheaf& f, const ModPresheaf& g);

/// Converts a hom-module element back to component matrices.
PresheafMap hom_element(const ModPresheaf& f, const ModPresheaf& g, const Matrix& v);

/// The complex of Λ-modules hom(K, K′) with degree-n term
/// ∏_p Hom(K_p, K′_{p+n}) and differential Dφ = d′φ − (−1)^n φd,
/// on the terminal site.
Complex dghom(const Complex& k, const Complex& kp);

}  // namespace sitecx
