#pragma once

#include "sitecx/complex/complex.hpp"
#include "sitecx/simplicial/simplicial.hpp"

namespace sitecx {

/// Monotone map [m] → [n] as its value list.
using Monotone = std::vector<int>;

/// Surjections [n] ↠ [k] for all k, ordered by k descending, then
/// lexicographically; the identity comes first.
std::vector<Monotone> surjections(int n);

/// Moore complex: X_n in degree n with differential Σ(−1)^i d_i.
Complex moore(const SimplicialModule& x);

struct Normalized {
  Complex complex;              // N_n = ∩_{i<n} ker d_i, differential (−1)^n d_n
  ComplexMorphism inclusion;    // N(X) → moore(X)
  std::vector<SubPresheaf> parts;
};
Normalized normalize(const SimplicialModule& x);

/// Γ(C)_n = ⊕_{σ: [n]↠[k]} C_k for a connective complex, truncated at level N.
SimplicialModule gamma(const Complex& c, int truncation);

}  // namespace sitecx
