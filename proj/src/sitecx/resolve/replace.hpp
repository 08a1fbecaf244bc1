#pragma once

#include <string>

#include "sitecx/complex/complex.hpp"
#include "sitecx/resolve/sr.hpp"

namespace sitecx {

struct CofibrantReplacement {
  Windowed total;                  // QK with its certified homology window
  ComplexMorphism augmentation;    // QK → K
  std::vector<SRResolution> columns;  // resolution of K_n at index n − lo(K)
  /// Semi-representable certificate of QK_n at index n − total.complex.lo().
  std::vector<SemiRepresentable> levels;
};

/// Sum totalization of the columnwise SR-resolutions of K to depth d. In the
/// economical mode generating sets are chosen from the top column down so
/// that each differential carries chosen sections onto chosen sections.
CofibrantReplacement cofibrant_replace(const Complex& k, int depth, Strategy strategy);

struct CofibrationCertificate {
  bool certified = false;
  std::vector<std::string> patterns;  // "bounded-below", "tower"
  std::string refusal;
  int lo = 0;
  std::vector<PresheafMap> retractions;                 // r_n with r_n f_n = id
  std::vector<std::vector<ObjectId>> cokernel_summands;  // objects of coker(f)_n
};

/// Certifies a projective cofibration: each degree splits and the cokernel
/// levels are semi-representable. A refusal names the failing condition.
CofibrationCertificate certify_cofibration(const ComplexMorphism& f);

/// Semi-representable summands of F if a greedy minimal generating set
/// presents it freely.
std::optional<std::vector<ObjectId>> semi_representable_witness(const ModPresheaf& f);

}  // namespace sitecx
