#pragma once

#include <vector>

#include "sitecx/site/presheaf.hpp"

namespace sitecx {

SetPresheafMap compose(const SetPresheafMap& g, const SetPresheafMap& f);
SetPresheafMap identity_map(const SetPresheaf& p);
bool maps_equal(const SetPresheafMap& a, const SetPresheafMap& b);
/// The linear extension Λ[f] as matrices on the basis of elements.
PresheafMap linearize(const SetPresheafMap& f, const Ring& ring);

/// Simplicial set-presheaf truncated at level N. faces[n][i] = d_i: X_n → X_{n−1}
/// (faces[0] is empty), degeneracies[n][i] = s_i: X_n → X_{n+1} for n < N.
struct SimplicialSet {
  std::vector<SetPresheaf> levels;
  std::vector<std::vector<SetPresheafMap>> faces;
  std::vector<std::vector<SetPresheafMap>> degeneracies;

  int truncation() const { return static_cast<int>(levels.size()) - 1; }
  const SitePtr& site() const { return levels.front().site(); }
  /// Naturality of every map and all simplicial identities up to N.
  void require_valid() const;

  static SimplicialSet constant(const SetPresheaf& p, int n);
};

/// Levels 0..n with the maps among them.
SimplicialSet truncated(const SimplicialSet& x, int n);

/// Simplicial set-presheaf with an augmentation ε: X_0 → target that
/// coequalizes d_0, d_1.
struct AugmentedSimplicialSet {
  SimplicialSet simplicial;
  SetPresheaf target;
  SetPresheafMap augmentation;

  void require_valid() const;
};

/// Simplicial module presheaf truncated at level N, same indexing as
/// SimplicialSet.
struct SimplicialModule {
  std::vector<ModPresheaf> levels;
  std::vector<std::vector<PresheafMap>> faces;
  std::vector<std::vector<PresheafMap>> degeneracies;

  int truncation() const { return static_cast<int>(levels.size()) - 1; }
  const SitePtr& site() const { return levels.front().site(); }
  const Ring& ring() const { return levels.front().ring(); }
  void require_valid() const;

  static SimplicialModule constant(const ModPresheaf& m, int n);
  static SimplicialModule zero(SitePtr site, const Ring& ring, int n);
};

SimplicialModule linearize(const SimplicialSet& x, const Ring& ring);
SimplicialModule direct_sum(const SimplicialModule& a, const SimplicialModule& b);

}  // namespace sitecx
