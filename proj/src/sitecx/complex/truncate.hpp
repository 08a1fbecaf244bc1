#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

struct Truncation {
  Complex complex;
  ComplexMorphism inclusion;  // τ≥n K → K
};

/// Good truncation τ≥n: K_q for q > n, Z_n K in degree n, zero below.
Truncation truncate(const Complex& k, int n);

}  // namespace sitecx
