#pragma once

#include <optional>

#include "sitecx/complex/complex.hpp"

namespace sitecx {

/// Commuting square  A --u--> X
///                   |i       |f
///                   B --v--> Y
struct LiftingSquare {
  ComplexMorphism i;
  ComplexMorphism f;
  ComplexMorphism u;
  ComplexMorphism v;
};

/// A chain map h: B → X with h∘i = u and f∘h = v, or none. Throws
/// non_commuting_square when f∘u ≠ v∘i.
std::optional<ComplexMorphism> rlp_solve(const LiftingSquare& square);

}  // namespace sitecx
