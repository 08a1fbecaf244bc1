#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sitecx/exactalg/linalg.hpp"

namespace sitecx {

struct ModuleInvariants {
  std::size_t free_rank = 0;
  std::vector<Scalar> torsion;  // non-units, canonical, each dividing the next

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

/// Diagonal presentation ⊕ Λ/(dᵢ) ⊕ Λ^f of a module together with the
/// coordinate changes to and from the original generators.
struct PrunedForm {
  std::vector<Scalar> torsion;  // first torsion.size() coordinates
  std::size_t free_rank = 0;    // remaining coordinates
  Matrix to;                    // pruned × generators
  Matrix from;                  // generators × pruned
  std::size_t size() const { return torsion.size() + free_rank; }
};

/// Finitely presented module Λ^g / (column span of relations).
class FpModule {
 public:
  FpModule() : FpModule(Ring::integers(), 0) {}
  FpModule(Ring ring, std::size_t generators);
  FpModule(Ring ring, std::size_t generators, Matrix relations);

  static FpModule free(const Ring& ring, std::size_t rank) { return FpModule(ring, rank); }
  /// Λ/(d₁) ⊕ … ⊕ Λ/(d_k).
  static FpModule cyclic_sum(const Ring& ring, const std::vector<Scalar>& orders);

  const Ring& ring() const { return ring_; }
  std::size_t generators() const { return generators_; }
  const Matrix& relations() const { return relations_; }
  bool has_relations() const { return !relations_.is_zero(); }

  const ModuleInvariants& invariants() const;
  const PrunedForm& pruned() const;
  bool is_zero() const { return invariants().is_zero(); }
  bool is_finite() const;

  /// True when every column of v lies in the relation span.
  bool is_zero_element(const Matrix& v) const;
  /// Canonical pruned coordinates of the element v, reduced modulo the
  /// torsion orders; equal elements give equal coordinates.
  Matrix canonical_coordinates(const Matrix& v) const;
  /// All elements as generator-coordinate columns; requires a finite module.
  std::vector<Matrix> elements(std::size_t limit) const;

  std::string to_string() const;

 private:
  struct Cache;
  Ring ring_;
  std::size_t generators_;
  Matrix relations_;
  std::shared_ptr<Cache> cache_;
};

FpModule direct_sum(const std::vector<FpModule>& parts);

/// Checks that `map` (target gens × source gens) carries relations into
/// relations.
bool is_well_defined(const FpModule& source, const FpModule& target, const Matrix& map);
void require_well_defined(const FpModule& source, const FpModule& target, const Matrix& map,
                          const std::string& what);
bool is_zero_map(const FpModule& target, const Matrix& map);
bool maps_equal(const FpModule& target, const Matrix& a, const Matrix& b);

/// A module L/N for lattices N ⊆ L ⊆ Λ^g, where Λ^g is the generator lattice
/// of an ambient presentation. The presentation is simplified by eliminating
/// generators killed by unit relations.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Ring& ring, std::size_t ambient, const Matrix& lattice, const Matrix& divisor);

  const FpModule& module() const { return module_; }
  /// Ambient coordinates of the module generators (g × k).
  const Matrix& inclusion() const { return inclusion_; }
  /// Module coordinates of ambient vectors that lie in L.
  Matrix to_module(const Matrix& v) const;
  bool contains(const Matrix& v) const;
  std::size_t ambient() const { return ambient_; }

 private:
  FpModule module_;
  Matrix inclusion_;
  Matrix basis_;
  Matrix projection_;
  std::shared_ptr<LinearSolver> basis_solver_;
  std::size_t ambient_ = 0;
};

/// Generators (ambient coordinates) of {x : map·x ∈ relations(target)}.
Matrix preimage_lattice(const FpModule& target, const Matrix& map, std::size_t source_generators);

Subquotient kernel(const FpModule& source, const FpModule& target, const Matrix& map);
Subquotient cokernel(const FpModule& source, const FpModule& target, const Matrix& map);
/// The submodule image(map) of target, as a subquotient of target.
Subquotient image(const FpModule& source, const FpModule& target, const Matrix& map);
/// ker(d_out) / im(d_in) in the middle module.
Subquotient homology_of_pair(const FpModule& a, const FpModule& b, const FpModule& c,
                             const Matrix& d_in, const Matrix& d_out);
/// Same, returning the module only.
FpModule homology_module(const FpModule& a, const FpModule& b, const FpModule& c,
                         const Matrix& d_in, const Matrix& d_out);

/// Matrix of the map induced between subquotients by an ambient map.
Matrix induced_map(const Subquotient& source, const Subquotient& target, const Matrix& ambient_map);

bool is_injective(const FpModule& source, const FpModule& target, const Matrix& map);
bool is_surjective(const FpModule& source, const FpModule& target, const Matrix& map);
bool is_isomorphism(const FpModule& source, const FpModule& target, const Matrix& map);

bool modules_isomorphic(const FpModule& a, const FpModule& b);

}  // namespace sitecx
