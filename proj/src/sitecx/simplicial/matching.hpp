#pragma once

#include "sitecx/simplicial/simplicial.hpp"

namespace sitecx {

/// (cosk_{n−1} sk_{n−1} X)_n: compatible tuples (y_0, …, y_n) of
/// (n−1)-simplices with d_i y_j = d_{j−1} y_i for i < j, the augmentation
/// serving as d_0 on X_0. Level 0 is the augmentation target.
struct MatchingObject {
  SetPresheaf object;
  SetPresheafMap comparison;  // x ↦ (d_0 x, …, d_n x)
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  // [object][element]
};

MatchingObject matching_object(const AugmentedSimplicialSet& x, int n);

}  // namespace sitecx
