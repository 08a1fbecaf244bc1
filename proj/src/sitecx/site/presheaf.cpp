#include "sitecx/site/presheaf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sitecx/error.hpp"

namespace sitecx {

SetPresheaf::SetPresheaf(SitePtr site, std::vector<std::size_t> sizes,
                         std::vector<std::vector<std::size_t>> restrictions)
    : site_(std::move(site)), sizes_(std::move(sizes)), restrictions_(std::move(restrictions)) {
  const FinCategory& cat = site_->category();
  require(sizes_.size() == cat.object_count() && restrictions_.size() == cat.morphism_count(),
          ErrorCode::invalid_input, "set presheaf shape does not match its site");
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    require(restrictions_[f].size() == sizes_[m.target], ErrorCode::invalid_input,
            "restriction along '" + m.name + "' has the wrong domain size");
    for (std::size_t y : restrictions_[f])
      require(y < sizes_[m.source], ErrorCode::invalid_input,
              "restriction along '" + m.name + "' leaves its codomain");
  }
}

SetPresheaf SetPresheaf::empty(SitePtr site) {
  const FinCategory& cat = site->category();
  return SetPresheaf(site, std::vector<std::size_t>(cat.object_count(), 0),
                     std::vector<std::vector<std::size_t>>(cat.morphism_count()));
}

SetPresheaf SetPresheaf::representable(SitePtr site, ObjectId c) {
  const FinCategory& cat = site->category();
  std::vector<std::vector<MorphismId>> homs(cat.object_count());
  std::vector<std::size_t> sizes(cat.object_count());
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    homs[d] = cat.hom(d, c);
    sizes[d] = homs[d].size();
  }
  std::vector<std::vector<std::size_t>> restr(cat.morphism_count());
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    for (MorphismId h : homs[m.target]) {
      MorphismId hf = cat.compose(h, f);
      auto it = std::find(homs[m.source].begin(), homs[m.source].end(), hf);
      restr[f].push_back(static_cast<std::size_t>(it - homs[m.source].begin()));
    }
  }
  return SetPresheaf(site, sizes, restr);
}

void SetPresheaf::require_functorial() const {
  const FinCategory& cat = site_->category();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    MorphismId id = cat.identity(c);
    for (std::size_t x = 0; x < sizes_[c]; ++x)
      require(restrictions_[id][x] == x, ErrorCode::non_functorial,
              "identity of '" + cat.object_name(c) + "' does not act as the identity");
  }
  for (MorphismId g = 0; g < cat.morphism_count(); ++g)
    for (MorphismId f : cat.into(cat.morphism(g).source)) {
      MorphismId gf = cat.compose(g, f);
      for (std::size_t x = 0; x < sizes_[cat.morphism(g).target]; ++x)
        require(restrictions_[gf][x] == restrictions_[f][restrictions_[g][x]], ErrorCode::non_functorial,
                "restriction along '" + cat.morphism(gf).name + "' is not the composite");
    }
}

void SetPresheafMap::require_natural() const {
  const FinCategory& cat = source.site()->category();
  require(components.size() == cat.object_count(), ErrorCode::invalid_input,
          "set presheaf map needs one component per object");
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    require(components[c].size() == source.size(c), ErrorCode::invalid_input,
            "component at '" + cat.object_name(c) + "' has the wrong size");
    for (std::size_t y : components[c])
      require(y < target.size(c), ErrorCode::invalid_input, "component leaves its target");
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    for (std::size_t x = 0; x < source.size(m.target); ++x)
      require(components[m.source][source.restrict(f, x)] == target.restrict(f, components[m.target][x]),
              ErrorCode::non_functorial, "set presheaf map is not natural along '" + m.name + "'");
  }
}

std::optional<std::vector<RepresentableSummand>> representable_decomposition(const SetPresheaf& p) {
  const FinCategory& cat = p.site()->category();
  using Element = std::pair<ObjectId, std::size_t>;
  auto image = [&](Element e) {
    std::set<Element> out;
    for (MorphismId h : cat.into(e.first)) out.insert({cat.morphism(h).source, p.restrict(h, e.second)});
    return out;
  };
  std::vector<Element> all;
  std::map<Element, std::set<Element>> images;
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (std::size_t x = 0; x < p.size(c); ++x) {
      all.push_back({c, x});
      images[{c, x}] = image({c, x});
    }
  std::set<Element> covered;
  std::vector<RepresentableSummand> out;
  for (const Element& e : all) {
    if (covered.count(e)) continue;
    bool maximal = true;
    for (const Element& other : all)
      if (images[other].count(e) && !images[e].count(other)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    // The Yoneda map h ↦ h*e must be injective.
    std::set<Element> seen;
    for (MorphismId h : cat.into(e.first))
      if (!seen.insert({cat.morphism(h).source, p.restrict(h, e.second)}).second) return std::nullopt;
    for (const Element& x : images[e])
      if (!covered.insert(x).second) return std::nullopt;
    out.push_back({e.first, e.second});
  }
  if (covered.size() != all.size()) return std::nullopt;
  return out;
}

bool is_generalized_cover(const SetPresheafMap& f) {
  const Site& site = *f.target.site();
  const FinCategory& cat = site.category();
  std::vector<std::vector<bool>> in_image(cat.object_count());
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    in_image[d].assign(f.target.size(d), false);
    for (std::size_t y : f.components[d]) in_image[d][y] = true;
  }
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (std::size_t s = 0; s < f.target.size(c); ++s) {
      Sieve r{c, std::vector<bool>(cat.morphism_count(), false)};
      for (MorphismId h : cat.into(c))
        r.members[h] = in_image[cat.morphism(h).source][f.target.restrict(h, s)];
      if (!site.is_covering(r)) return false;
    }
  return true;
}

ModPresheaf::ModPresheaf(SitePtr site, Ring ring, std::vector<FpModule> values, std::vector<Matrix> maps)
    : site_(std::move(site)), ring_(ring), values_(std::move(values)), maps_(std::move(maps)) {
  const FinCategory& cat = site_->category();
  require(values_.size() == cat.object_count(), ErrorCode::invalid_input,
          "presheaf needs one value per object");
  require(maps_.size() == cat.morphism_count(), ErrorCode::invalid_input,
          "presheaf needs one matrix per morphism");
  for (const auto& v : values_) require_same_ring(ring_, v.ring());
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    maps_[f] = normalized(ring_, maps_[f]);
    require_well_defined(values_[m.target], values_[m.source], maps_[f],
                         "restriction along '" + m.name + "'");
  }
}

ModPresheaf ModPresheaf::zero(SitePtr site, const Ring& ring) {
  const FinCategory& cat = site->category();
  std::vector<Matrix> maps(cat.morphism_count());
  return ModPresheaf(site, ring, std::vector<FpModule>(cat.object_count(), FpModule(ring, 0)), maps);
}

ModPresheaf ModPresheaf::constant(SitePtr site, const FpModule& m) {
  const FinCategory& cat = site->category();
  std::vector<Matrix> maps(cat.morphism_count(), Matrix::identity(m.generators()));
  return ModPresheaf(site, m.ring(), std::vector<FpModule>(cat.object_count(), m), maps);
}

ModPresheaf ModPresheaf::representable(SitePtr site, const Ring& ring, ObjectId c) {
  return linearize(SetPresheaf::representable(site, c), ring);
}

ModPresheaf ModPresheaf::linearize(const SetPresheaf& p, const Ring& ring) {
  const FinCategory& cat = p.site()->category();
  std::vector<FpModule> values;
  for (ObjectId c = 0; c < cat.object_count(); ++c) values.emplace_back(ring, p.size(c));
  std::vector<Matrix> maps;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    Matrix a(p.size(m.source), p.size(m.target));
    for (std::size_t x = 0; x < p.size(m.target); ++x) a(p.restrict(f, x), x) = 1;
    maps.push_back(a);
  }
  return ModPresheaf(p.site(), ring, values, maps);
}

bool ModPresheaf::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

void ModPresheaf::require_functorial() const {
  const FinCategory& cat = site_->category();
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    require(sitecx::maps_equal(values_[c], maps_[cat.identity(c)], Matrix::identity(values_[c].generators())),
            ErrorCode::non_functorial,
            "identity of '" + cat.object_name(c) + "' does not act as the identity");
  for (MorphismId g = 0; g < cat.morphism_count(); ++g)
    for (MorphismId f : cat.into(cat.morphism(g).source)) {
      MorphismId gf = cat.compose(g, f);
      require(sitecx::maps_equal(values_[cat.morphism(f).source], maps_[gf],
                                 multiply(ring_, maps_[f], maps_[g])),
              ErrorCode::non_functorial,
              "restriction along '" + cat.morphism(gf).name + "' is not the composite of '" +
                  cat.morphism(g).name + "' and '" + cat.morphism(f).name + "'");
    }
}

PresheafMap PresheafMap::zero(const ModPresheaf& source, const ModPresheaf& target) {
  PresheafMap out;
  for (ObjectId c = 0; c < source.site()->object_count(); ++c)
    out.components.emplace_back(target.generators(c), source.generators(c));
  return out;
}

PresheafMap PresheafMap::identity(const ModPresheaf& p) {
  PresheafMap out;
  for (ObjectId c = 0; c < p.site()->object_count(); ++c)
    out.components.push_back(Matrix::identity(p.generators(c)));
  return out;
}

void require_natural(const ModPresheaf& source, const ModPresheaf& target, const PresheafMap& f,
                     const std::string& what) {
  const FinCategory& cat = source.site()->category();
  require(f.components.size() == cat.object_count(), ErrorCode::invalid_input,
          what + ": expected one component per object");
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    require_well_defined(source.value(c), target.value(c), f.components[c],
                         what + " at '" + cat.object_name(c) + "'");
  const Ring& ring = source.ring();
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    const auto& m = cat.morphism(g);
    Matrix lhs = multiply(ring, target.map(g), f.components[m.target]);
    Matrix rhs = multiply(ring, f.components[m.source], source.map(g));
    require(maps_equal(target.value(m.source), lhs, rhs), ErrorCode::non_commuting_square,
            what + ": not natural along '" + m.name + "'");
  }
}

PresheafMap compose(const ModPresheaf& target, const PresheafMap& g, const PresheafMap& f) {
  PresheafMap out;
  for (std::size_t c = 0; c < f.components.size(); ++c)
    out.components.push_back(multiply(target.ring(), g.components[c], f.components[c]));
  return out;
}

bool maps_equal(const ModPresheaf& target, const PresheafMap& a, const PresheafMap& b) {
  for (std::size_t c = 0; c < a.components.size(); ++c)
    if (!maps_equal(target.value(c), a.components[c], b.components[c])) return false;
  return true;
}

bool is_zero_map(const ModPresheaf& target, const PresheafMap& f) {
  for (std::size_t c = 0; c < f.components.size(); ++c)
    if (!is_zero_map(target.value(c), f.components[c])) return false;
  return true;
}

ModPresheaf direct_sum(const std::vector<ModPresheaf>& parts) {
  require(!parts.empty(), ErrorCode::internal, "direct sum of no presheaves");
  const SitePtr& site = parts.front().site();
  const FinCategory& cat = site->category();
  std::vector<FpModule> values;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<FpModule> vs;
    for (const auto& p : parts) vs.push_back(p.value(c));
    values.push_back(direct_sum(vs));
  }
  std::vector<Matrix> maps;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(f));
    maps.push_back(block_diagonal(blocks));
  }
  return ModPresheaf(site, parts.front().ring(), values, maps);
}

bool is_objectwise_iso(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f) {
  for (ObjectId c = 0; c < s.site()->object_count(); ++c)
    if (!is_isomorphism(s.value(c), t.value(c), f.components[c])) return false;
  return true;
}

bool is_objectwise_surjective(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f) {
  for (ObjectId c = 0; c < s.site()->object_count(); ++c)
    if (!is_surjective(s.value(c), t.value(c), f.components[c])) return false;
  return true;
}

bool is_objectwise_injective(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f) {
  for (ObjectId c = 0; c < s.site()->object_count(); ++c)
    if (!is_injective(s.value(c), t.value(c), f.components[c])) return false;
  return true;
}

bool presheaves_isomorphic_objectwise(const ModPresheaf& a, const ModPresheaf& b) {
  for (ObjectId c = 0; c < a.site()->object_count(); ++c)
    if (!modules_isomorphic(a.value(c), b.value(c))) return false;
  return true;
}

ModPresheaf assemble(const ModPresheaf& ambient, const std::vector<Subquotient>& parts) {
  const FinCategory& cat = ambient.site()->category();
  std::vector<FpModule> values;
  for (const auto& p : parts) values.push_back(p.module());
  std::vector<Matrix> maps;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto& m = cat.morphism(f);
    maps.push_back(induced_map(parts[m.target], parts[m.source], ambient.map(f)));
  }
  return ModPresheaf(ambient.site(), ambient.ring(), values, maps);
}

PresheafMap induced(const std::vector<Subquotient>& source, const std::vector<Subquotient>& target,
                    const PresheafMap& ambient) {
  PresheafMap out;
  for (std::size_t c = 0; c < source.size(); ++c)
    out.components.push_back(induced_map(source[c], target[c], ambient.components[c]));
  return out;
}

SubPresheaf kernel(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f) {
  SubPresheaf out;
  for (ObjectId c = 0; c < s.site()->object_count(); ++c)
    out.parts.push_back(kernel(s.value(c), t.value(c), f.components[c]));
  out.presheaf = assemble(s, out.parts);
  return out;
}

SubPresheaf cokernel(const ModPresheaf& s, const ModPresheaf& t, const PresheafMap& f) {
  SubPresheaf out;
  for (ObjectId c = 0; c < s.site()->object_count(); ++c)
    out.parts.push_back(cokernel(s.value(c), t.value(c), f.components[c]));
  out.presheaf = assemble(t, out.parts);
  return out;
}

}  // namespace sitecx
