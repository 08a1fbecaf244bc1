#pragma once

#include "sitecx/complex/complex.hpp"
#include "sitecx/site/sheafify.hpp"

namespace sitecx {

struct HomologyPresheaf {
  ModPresheaf presheaf;
  std::vector<Subquotient> parts;  // H_n(c) inside K_n(c)
};

HomologyPresheaf homology(const Complex& k, int n);
/// The module H_n of a complex on a one-object site.
FpModule homology_module(const Complex& k, int n, ObjectId c = 0);
PresheafMap homology_map(const HomologyPresheaf& source, const HomologyPresheaf& target,
                         const PresheafMap& component);

struct HomologySheaf {
  HomologyPresheaf homology;
  Sheafification sheaf;
};
/// a_τ H_n K.
HomologySheaf homology_sheaf(const Complex& k, int n);

struct DegreeVerdict {
  int degree = 0;
  bool holds = true;
  std::string detail;
};

struct Verdicts {
  std::vector<DegreeVerdict> degrees;
  bool all() const;
  std::vector<int> failures() const;
};

/// H_n(f) objectwise iso for n in [lo, hi] (default: union window).
Verdicts is_quasi_iso(const ComplexMorphism& f);
Verdicts is_quasi_iso(const ComplexMorphism& f, int lo, int hi);
/// a_τH_n(f) objectwise iso.
Verdicts is_local_equivalence(const ComplexMorphism& f);
Verdicts is_local_equivalence(const ComplexMorphism& f, int lo, int hi);

/// Z_n K as a presheaf with its inclusion parts.
SubPresheaf cycles(const Complex& k, int n);

}  // namespace sitecx
