#pragma once

#include "sitecx/site/presheaf.hpp"

namespace sitecx {

struct Stalk {
  FpModule module;
  /// Germ maps F(c) → F_p for the neighborhoods c of p (empty otherwise).
  std::vector<std::optional<Matrix>> germs;
};

/// Colimit of F over the neighborhoods of p; the value at the minimal
/// neighborhood when there is one.
Stalk stalk(const ModPresheaf& f, const Point& p);
/// Number of elements of the stalk of a set presheaf.
std::size_t stalk_size(const SetPresheaf& f, const Point& p);
/// φ_p : F_p → G_p.
Matrix stalk_map(const ModPresheaf& source, const Stalk& source_stalk, const Stalk& target_stalk,
                 const PresheafMap& phi, const Point& p);

}  // namespace sitecx
