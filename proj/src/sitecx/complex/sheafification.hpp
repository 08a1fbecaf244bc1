#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

struct SheafifiedComplex {
  Complex complex;       // a_τK
  ComplexMorphism unit;  // K → a_τK
};

/// Degreewise sheafification with the induced differentials.
SheafifiedComplex sheafify_complex(const Complex& k);

}  // namespace sitecx
