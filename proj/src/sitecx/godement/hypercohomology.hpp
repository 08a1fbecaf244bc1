#pragma once

#include <optional>
#include <string>

#include "sitecx/godement/godement.hpp"
#include "sitecx/hypercover/hypercover.hpp"

namespace sitecx {

enum class HypercohomologyMethod { godement, cech_colimit };
const char* to_string(HypercohomologyMethod m);

struct CechStage {
  std::vector<MorphismId> family;
  FpModule value;
};

struct HypercohomologyResult {
  FpModule module;
  /// False when the Čech sequence did not stabilize; the module is then a
  /// lower bound rather than an answer.
  bool stabilized = true;
  std::string note;
  std::vector<CechStage> stages;  // Čech-colimit only
};

/// ℍⁿ(c, a_τK) = H_{−n}. The Godement method uses god K with cosimplicial
/// depth `depth` (default: the smallest depth certifying degree −n). The
/// Čech-colimit method runs the refinement-ordered Čech nerves of c on a_τK.
HypercohomologyResult hypercohomology(ObjectId c, const Complex& k, int n, HypercohomologyMethod method,
                                      std::optional<int> depth = std::nullopt);

/// ℍⁿ(c, K) for every object c and n in [n_lo, n_hi], sharing one
/// resolution (Godement) or one nerve per object (Čech-colimit).
struct HypercohomologyTable {
  HypercohomologyMethod method;
  int n_lo = 0, n_hi = -1;
  std::vector<std::vector<HypercohomologyResult>> entries;  // [object][n − n_lo]
};
HypercohomologyTable hypercohomology_table(const Complex& k, int n_lo, int n_hi, HypercohomologyMethod method,
                                           std::optional<int> depth = std::nullopt);

/// Covering families of c used by the Čech-colimit method, coarsest first.
std::vector<std::vector<MorphismId>> cech_refinement_sequence(const SitePtr& site, ObjectId c);

struct FibrantCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct FibrantReport {
  std::vector<FibrantCheck> checks;
  bool passed() const;
};

/// (i) god K satisfies descent for each hypercover, (ii) K → god K is a local
/// equivalence on the valid window, (iii) god of `surjection` is degreewise
/// surjective and its kernel's resolution satisfies descent, (iv) the sum
/// totalization of the resolutions of the levels of K satisfies descent.
FibrantReport verify_fibrant_replacement(const Complex& k, const std::vector<Hypercover>& hypercovers, int depth,
                                         const std::optional<ComplexMorphism>& surjection = std::nullopt);

}  // namespace sitecx
