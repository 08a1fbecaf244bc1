#pragma once

#include <limits>

#include "sitecx/complex/complex.hpp"

namespace sitecx {

/// ⊕ᵢ Λ(cᵢ); generators over d are ordered summand-major, then by Hom(d, cᵢ).
struct SemiRepresentable {
  std::vector<ObjectId> objects;
  ModPresheaf presheaf;

  static SemiRepresentable of(const SitePtr& site, const Ring& ring, std::vector<ObjectId> objects);
  /// Offset of summand i among the generators over d.
  std::size_t offset(ObjectId d, std::size_t summand) const;
  /// Rebuilds ⊕Λ(cᵢ) and compares it with the stored presheaf.
  bool regenerates() const;
};

/// A section s ∈ F(object), as generator coordinates.
struct Section {
  ObjectId object;
  Matrix value;
};

enum class Strategy { paper_exact, economical };
const char* to_string(Strategy s);

/// Generating sections of F containing `seeds`: objects are visited with
/// larger slices first, and at each object the quotient by the image of the
/// sections chosen so far contributes its pruned generators. Sorted by
/// (object, seed order, then added order).
std::vector<Section> generating_set(const ModPresheaf& f, const std::vector<Section>& seeds);

struct SRStep {
  SemiRepresentable cover;
  std::vector<Section> sections;  // one per summand
  PresheafMap epi;                // cover → F
  SubPresheaf kernel;             // ker(epi) inside cover
};

/// Paper-exact mode uses every nonzero section over every object (finite
/// values only); economical mode uses generating_set(f, seeds).
SRStep sr_step(const ModPresheaf& f, Strategy strategy, const std::vector<Section>& seeds = {},
               std::size_t enumeration_limit = 4096);

/// Map of covers E(F) → E(G) sending the summand of s to the summand of φ(s)
/// (or to zero); requires every nonzero φ(s) to index a summand of G's step.
PresheafMap sr_step_map(const ModPresheaf& f, const ModPresheaf& g, const PresheafMap& phi, const SRStep& sf,
                        const SRStep& sg);

struct SRResolution {
  std::vector<SRStep> steps;
  Complex complex;              // P_k in degree k
  ComplexMorphism augmentation; // → S^0 F
  bool exact = false;           // a kernel vanished
  int valid_hi = 0;             // homology certified in degrees ≤ valid_hi
};
SRResolution sr_resolution(const ModPresheaf& f, int depth, Strategy strategy);

}  // namespace sitecx
