#pragma once

#include <string>
#include <vector>

#include "sitecx/exactalg/module.hpp"
#include "sitecx/site/site.hpp"

namespace sitecx {

/// Finite-set-valued presheaf: a set {0..n-1} per object and, for each
/// morphism f: d → c, the restriction F(c) → F(d) as an index table.
class SetPresheaf {
 public:
  SetPresheaf() = default;
  SetPresheaf(SitePtr site, std::vector<std::size_t> sizes,
              std::vector<std::vector<std::size_t>> restrictions);

  static SetPresheaf empty(SitePtr site);
  /// y(c): value at d is Hom(d, c), elements indexed in category order.
  static SetPresheaf representable(SitePtr site, ObjectId c);

  const SitePtr& site() const { return site_; }
  std::size_t size(ObjectId c) const { return sizes_.at(c); }
  std::size_t restrict(MorphismId f, std::size_t x) const { return restrictions_.at(f).at(x); }
  const std::vector<std::size_t>& restriction(MorphismId f) const { return restrictions_.at(f); }

  void require_functorial() const;

 private:
  SitePtr site_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::size_t>> restrictions_;
};

/// Natural transformation of set presheaves, one index table per object.
struct SetPresheafMap {
  SetPresheaf source;
  SetPresheaf target;
  std::vector<std::vector<std::size_t>> components;

  void require_natural() const;
};

/// Disjoint union of representables y(c₀) ⊔ … with each summand given by a
/// generating element.
struct RepresentableSummand {
  ObjectId object;
  std::size_t element;  // element of the presheaf over `object`
};

/// Decomposes P as a coproduct of representables when possible.
std::optional<std::vector<RepresentableSummand>> representable_decomposition(const SetPresheaf& p);

/// Locally surjective test: for each section s of the target over c, the
/// sieve of morphisms h with h*s in the image must cover c.
bool is_generalized_cover(const SetPresheafMap& f);

/// Presheaf of finitely presented Λ-modules. For f: d → c the matrix
/// map(f) has shape gens(F(d)) × gens(F(c)).
class ModPresheaf {
 public:
  ModPresheaf() = default;
  ModPresheaf(SitePtr site, Ring ring, std::vector<FpModule> values, std::vector<Matrix> maps);

  static ModPresheaf zero(SitePtr site, const Ring& ring);
  static ModPresheaf constant(SitePtr site, const FpModule& m);
  /// Λ(c) = Λ[Hom(-, c)], generators indexed as in SetPresheaf::representable.
  static ModPresheaf representable(SitePtr site, const Ring& ring, ObjectId c);
  static ModPresheaf linearize(const SetPresheaf& p, const Ring& ring);

  const SitePtr& site() const { return site_; }
  const Ring& ring() const { return ring_; }
  const FpModule& value(ObjectId c) const { return values_.at(c); }
  const std::vector<FpModule>& values() const { return values_; }
  const Matrix& map(MorphismId f) const { return maps_.at(f); }
  const std::vector<Matrix>& maps() const { return maps_; }
  std::size_t generators(ObjectId c) const { return values_.at(c).generators(); }

  bool is_zero() const;
  /// Checks identities and composites; throws non_functorial.
  void require_functorial() const;

 private:
  SitePtr site_;
  Ring ring_ = Ring::integers();
  std::vector<FpModule> values_;
  std::vector<Matrix> maps_;
};

/// Morphism of module presheaves: per-object matrices on generators.
struct PresheafMap {
  std::vector<Matrix> components;

  static PresheafMap zero(const ModPresheaf& source, const ModPresheaf& target);
  static PresheafMap identity(const ModPresheaf& p);
};

void require_natural(const ModPresheaf& source, const ModPresheaf& target, const PresheafMap& f,
                     const std::string& what);
PresheafMap compose(const ModPresheaf& target, const PresheafMap& g, const PresheafMap& f);
bool maps_equal(const ModPresheaf& target, const PresheafMap& a, const PresheafMap& b);
bool is_zero_map(const ModPresheaf& target, const PresheafMap& f);

ModPresheaf direct_sum(const std::vector<ModPresheaf>& parts);
bool is_objectwise_iso(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f);
bool is_objectwise_surjective(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f);
bool is_objectwise_injective(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f);
bool presheaves_isomorphic_objectwise(const ModPresheaf& a, const ModPresheaf& b);

/// Kernel, cokernel and image presheaves with their structure maps.
struct SubPresheaf {
  ModPresheaf presheaf;
  std::vector<Subquotient> parts;  // per object, inside the ambient value
};
SubPresheaf kernel(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f);
SubPresheaf cokernel(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f);
/// Objectwise subquotients of one presheaf assembled into a presheaf, with
/// restriction maps induced from `ambient`.
ModPresheaf assemble(const ModPresheaf& ambient, const std::vector<Subquotient>& parts);
/// The map into/out of assembled subquotients induced by ambient maps.
PresheafMap induced(const std::vector<Subquotient>& source, const std::vector<Subquotient>& target,
                    const PresheafMap& ambient);

}  // namespace sitecx
