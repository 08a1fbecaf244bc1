#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sitecx {

using ObjectId = std::size_t;
using MorphismId = std::size_t;

struct MorphismSpec {
  std::string name;
  std::string source;
  std::string target;
};

struct PointSpec {
  std::string name;
  std::vector<std::string> neighborhoods;
};

/// Raw site description as it arrives from JSON or a builder. Nothing is
/// assumed valid; see validate_site.
struct SiteSpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  /// compose[g][f] names g∘f, or is empty when the pair is not composable.
  std::vector<std::vector<std::optional<std::string>>> compose;
  /// Covering families per object, each a list of morphism names.
  std::map<std::string, std::vector<std::vector<std::string>>> covers;
  std::optional<std::vector<PointSpec>> points;
};

struct Morphism {
  std::string name;
  ObjectId source;
  ObjectId target;
};

/// A finite category with a total composition table. Construction only
/// resolves names; the category axioms are checked by `violations`.
class FinCategory {
 public:
  FinCategory() = default;
  explicit FinCategory(const SiteSpec& spec);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(ObjectId c) const { return objects_.at(c); }
  const Morphism& morphism(MorphismId f) const { return morphisms_.at(f); }
  ObjectId object(const std::string& name) const;
  MorphismId morphism_id(const std::string& name) const;
  bool has_object(const std::string& name) const { return object_index_.count(name) > 0; }

  /// g∘f; throws not_composable when the table has no entry.
  MorphismId compose(MorphismId g, MorphismId f) const;
  MorphismId identity(ObjectId c) const;
  bool is_identity(MorphismId f) const { return identity(morphisms_[f].source) == f; }

  const std::vector<MorphismId>& into(ObjectId c) const { return into_.at(c); }
  const std::vector<MorphismId>& out_of(ObjectId c) const { return out_of_.at(c); }
  std::vector<MorphismId> hom(ObjectId a, ObjectId b) const;
  bool is_poset() const;

  /// Axiom violations (identities, composition table, associativity).
  std::vector<std::string> violations() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::string, ObjectId> object_index_;
  std::map<std::string, MorphismId> morphism_index_;
  std::vector<std::vector<long>> compose_;
  std::vector<long> identity_;
  std::vector<std::vector<MorphismId>> into_, out_of_;
};

}  // namespace sitecx
