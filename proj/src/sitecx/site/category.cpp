#include "sitecx/site/category.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

FinCategory::FinCategory(const SiteSpec& spec) : objects_(spec.objects) {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    require(object_index_.emplace(objects_[i], i).second, ErrorCode::invalid_input,
            "objects: duplicate object '" + objects_[i] + "'");
  into_.resize(objects_.size());
  out_of_.resize(objects_.size());
  for (const auto& m : spec.morphisms) {
    require(object_index_.count(m.source) && object_index_.count(m.target),
            ErrorCode::invalid_input, "morphisms: '" + m.name + "' references an unknown object");
    MorphismId id = morphisms_.size();
    require(morphism_index_.emplace(m.name, id).second, ErrorCode::invalid_input,
            "morphisms: duplicate morphism '" + m.name + "'");
    morphisms_.push_back({m.name, object_index_[m.source], object_index_[m.target]});
    into_[morphisms_.back().target].push_back(id);
    out_of_[morphisms_.back().source].push_back(id);
  }
  std::size_t n = morphisms_.size();
  require(spec.compose.size() == n, ErrorCode::invalid_input,
          "compose: expected " + std::to_string(n) + " rows");
  compose_.assign(n, std::vector<long>(n, -1));
  for (std::size_t g = 0; g < n; ++g) {
    require(spec.compose[g].size() == n, ErrorCode::invalid_input,
            "compose[" + std::to_string(g) + "]: expected " + std::to_string(n) + " entries");
    for (std::size_t f = 0; f < n; ++f) {
      const auto& entry = spec.compose[g][f];
      if (!entry) continue;
      auto it = morphism_index_.find(*entry);
      require(it != morphism_index_.end(), ErrorCode::invalid_input,
              "compose[" + std::to_string(g) + "][" + std::to_string(f) +
                  "]: unknown morphism '" + *entry + "'");
      compose_[g][f] = static_cast<long>(it->second);
    }
  }
  identity_.assign(objects_.size(), -1);
  for (ObjectId c = 0; c < objects_.size(); ++c) {
    for (MorphismId e : out_of_[c]) {
      if (morphisms_[e].target != c) continue;
      bool ok = true;
      for (MorphismId f : into_[c]) ok = ok && compose_[e][f] == static_cast<long>(f);
      for (MorphismId g : out_of_[c]) ok = ok && compose_[g][e] == static_cast<long>(g);
      if (ok) {
        identity_[c] = static_cast<long>(e);
        break;
      }
    }
  }
}

ObjectId FinCategory::object(const std::string& name) const {
  auto it = object_index_.find(name);
  require(it != object_index_.end(), ErrorCode::unknown_object, "unknown object '" + name + "'");
  return it->second;
}

MorphismId FinCategory::morphism_id(const std::string& name) const {
  auto it = morphism_index_.find(name);
  require(it != morphism_index_.end(), ErrorCode::invalid_input, "unknown morphism '" + name + "'");
  return it->second;
}

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
  long h = compose_.at(g).at(f);
  require(h >= 0, ErrorCode::not_composable,
          "morphisms '" + morphisms_[g].name + "' and '" + morphisms_[f].name +
              "' are not composable");
  return static_cast<MorphismId>(h);
}

MorphismId FinCategory::identity(ObjectId c) const {
  require(identity_.at(c) >= 0, ErrorCode::invalid_site,
          "object '" + objects_[c] + "' has no identity");
  return static_cast<MorphismId>(identity_[c]);
}

std::vector<MorphismId> FinCategory::hom(ObjectId a, ObjectId b) const {
  std::vector<MorphismId> out;
  for (MorphismId f : out_of_.at(a))
    if (morphisms_[f].target == b) out.push_back(f);
  return out;
}

bool FinCategory::is_poset() const {
  for (ObjectId a = 0; a < objects_.size(); ++a)
    for (ObjectId b = 0; b < objects_.size(); ++b) {
      std::size_t ab = hom(a, b).size();
      if (ab > 1) return false;
      if (a != b && ab == 1 && !hom(b, a).empty()) return false;
    }
  return true;
}

std::vector<std::string> FinCategory::violations() const {
  std::vector<std::string> out;
  for (ObjectId c = 0; c < objects_.size(); ++c)
    if (identity_[c] < 0) out.push_back("identity: object '" + objects_[c] + "' has no identity morphism");
  std::size_t n = morphisms_.size();
  for (MorphismId g = 0; g < n; ++g)
    for (MorphismId f = 0; f < n; ++f) {
      bool composable = morphisms_[f].target == morphisms_[g].source;
      long h = compose_[g][f];
      std::string pair = "'" + morphisms_[g].name + "' after '" + morphisms_[f].name + "'";
      if (composable && h < 0) {
        out.push_back("composition: missing entry for " + pair);
      } else if (!composable && h >= 0) {
        out.push_back("composition: entry for non-composable " + pair);
      } else if (h >= 0 && (morphisms_[h].source != morphisms_[f].source ||
                            morphisms_[h].target != morphisms_[g].target)) {
        out.push_back("composition: " + pair + " has the wrong source or target");
      }
    }
  if (!out.empty()) return out;
  for (MorphismId h = 0; h < n; ++h)
    for (MorphismId g : out_of_[morphisms_[h].target])
      for (MorphismId f : into_[morphisms_[h].source])
        if (compose_[compose_[g][h]][f] != compose_[g][compose_[h][f]])
          out.push_back("associativity: fails for '" + morphisms_[g].name + "', '" +
                        morphisms_[h].name + "', '" + morphisms_[f].name + "'");
  return out;
}

}  // namespace sitecx
