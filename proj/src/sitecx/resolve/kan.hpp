#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

/// A covariant functor from the site category to complexes of Λ-modules.
/// values[c] lives on the terminal site; maps[f] : values[source f] → values[target f].
struct CoefficientFunctor {
  SitePtr site;
  Ring ring = Ring::integers();
  std::vector<Complex> values;
  std::vector<ComplexMorphism> maps;

  void require_functorial() const;
};

/// Left Kan extension γ*K: the coend ∫^c K(c) ⊗ γ(c) taken degreewise and sum-totalized.
Complex kan_extend(const CoefficientFunctor& gamma, const Complex& k);

/// M ⊗ N for finitely presented modules.
FpModule tensor(const FpModule& m, const FpModule& n);

}  // namespace sitecx
