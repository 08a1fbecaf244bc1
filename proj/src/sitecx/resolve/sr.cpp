#include "sitecx/resolve/sr.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "sitecx/error.hpp"

namespace sitecx {

const char* to_string(Strategy s) { return s == Strategy::paper_exact ? "paper-exact" : "economical"; }

SemiRepresentable SemiRepresentable::of(const SitePtr& site, const Ring& ring, std::vector<ObjectId> objects) {
  SemiRepresentable out;
  out.objects = std::move(objects);
  std::vector<ModPresheaf> parts;
  for (ObjectId c : out.objects) parts.push_back(ModPresheaf::representable(site, ring, c));
  out.presheaf = parts.empty() ? ModPresheaf::zero(site, ring) : direct_sum(parts);
  return out;
}

std::size_t SemiRepresentable::offset(ObjectId d, std::size_t summand) const {
  const FinCategory& cat = presheaf.site()->category();
  std::size_t o = 0;
  for (std::size_t i = 0; i < summand; ++i) o += cat.hom(d, objects[i]).size();
  return o;
}

bool SemiRepresentable::regenerates() const {
  SemiRepresentable fresh = of(presheaf.site(), presheaf.ring(), objects);
  const FinCategory& cat = presheaf.site()->category();
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    if (fresh.presheaf.generators(c) != presheaf.generators(c) || presheaf.value(c).has_relations()) return false;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f)
    if (!(fresh.presheaf.map(f) == presheaf.map(f))) return false;
  return true;
}

namespace {

// Objects with larger slices first, so sections restrict downward.
std::vector<ObjectId> visiting_order(const FinCategory& cat) {
  std::vector<ObjectId> order(cat.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ObjectId a, ObjectId b) { return cat.into(a).size() > cat.into(b).size(); });
  return order;
}

// Columns F(g)·s over d for all sections and all g: d → object.
Matrix image_at(const ModPresheaf& f, const std::vector<Section>& sections, ObjectId d) {
  const FinCategory& cat = f.site()->category();
  Matrix out(f.generators(d), 0);
  for (const auto& s : sections)
    for (MorphismId g : cat.hom(d, s.object)) out = hstack(out, multiply(f.ring(), f.map(g), s.value));
  return out;
}

}  // namespace

std::vector<Section> generating_set(const ModPresheaf& f, const std::vector<Section>& seeds) {
  const FinCategory& cat = f.site()->category();
  const Ring& ring = f.ring();
  std::vector<Section> chosen = seeds;
  for (ObjectId c : visiting_order(cat)) {
    const FpModule& m = f.value(c);
    Matrix img = image_at(f, chosen, c);
    Subquotient q = cokernel(FpModule(ring, img.cols()), m, img);
    const PrunedForm& p = q.module().pruned();
    Matrix lifts = multiply(ring, q.inclusion(), p.from);
    for (std::size_t j = 0; j < lifts.cols(); ++j) chosen.push_back({c, col_range(lifts, j, j + 1)});
  }
  std::stable_sort(chosen.begin() + static_cast<long>(seeds.size()), chosen.end(),
                   [](const Section& a, const Section& b) { return a.object < b.object; });
  return chosen;
}

namespace {

SRStep finish_step(const ModPresheaf& f, std::vector<Section> sections) {
  const FinCategory& cat = f.site()->category();
  SRStep step;
  std::vector<ObjectId> objects;
  for (const auto& s : sections) objects.push_back(s.object);
  step.cover = SemiRepresentable::of(f.site(), f.ring(), objects);
  step.sections = std::move(sections);
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    Matrix m = image_at(f, step.sections, d);
    if (m.cols() == 0) m = Matrix(f.generators(d), 0);
    step.epi.components.push_back(m);
  }
  require_natural(step.cover.presheaf, f, step.epi, "cover map");
  for (ObjectId d = 0; d < cat.object_count(); ++d)
    require(is_surjective(step.cover.presheaf.value(d), f.value(d), step.epi.components[d]), ErrorCode::internal,
            "cover map is not surjective at '" + cat.object_name(d) + "'");
  step.kernel = kernel(step.cover.presheaf, f, step.epi);
  return step;
}

}  // namespace

SRStep sr_step(const ModPresheaf& f, Strategy strategy, const std::vector<Section>& seeds,
               std::size_t enumeration_limit) {
  if (strategy == Strategy::economical) return finish_step(f, generating_set(f, seeds));
  const FinCategory& cat = f.site()->category();
  std::vector<Section> sections;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    const FpModule& m = f.value(c);
    for (const auto& e : m.elements(enumeration_limit))
      if (!m.is_zero_element(e)) sections.push_back({c, e});
  }
  return finish_step(f, sections);
}

PresheafMap sr_step_map(const ModPresheaf& f, const ModPresheaf& g, const PresheafMap& phi, const SRStep& sf,
                        const SRStep& sg) {
  const FinCategory& cat = f.site()->category();
  const Ring& ring = f.ring();
  PresheafMap out = PresheafMap::zero(sf.cover.presheaf, sg.cover.presheaf);
  for (std::size_t i = 0; i < sf.sections.size(); ++i) {
    const Section& s = sf.sections[i];
    Matrix t = multiply(ring, phi.components[s.object], s.value);
    const FpModule& gm = g.value(s.object);
    if (gm.is_zero_element(t)) continue;
    Matrix key = gm.canonical_coordinates(t);
    std::size_t j = 0;
    for (; j < sg.sections.size(); ++j)
      if (sg.sections[j].object == s.object && gm.canonical_coordinates(sg.sections[j].value) == key) break;
    require(j < sg.sections.size(), ErrorCode::internal, "image section has no summand in the target cover");
    for (ObjectId d = 0; d < cat.object_count(); ++d) {
      std::size_t n = cat.hom(d, s.object).size();
      std::size_t src = sf.cover.offset(d, i), dst = sg.cover.offset(d, j);
      for (std::size_t k = 0; k < n; ++k) out.components[d](dst + k, src + k) = 1;
    }
  }
  return out;
}

SRResolution sr_resolution(const ModPresheaf& f, int depth, Strategy strategy) {
  require(depth >= 1, ErrorCode::invalid_input, "resolution depth must be at least 1");
  const FinCategory& cat = f.site()->category();
  SRResolution r;
  ModPresheaf current = f;
  for (int k = 0; k < depth; ++k) {
    if (current.is_zero()) {
      r.exact = true;
      break;
    }
    r.steps.push_back(sr_step(current, strategy));
    current = r.steps.back().kernel.presheaf;
  }
  if (!r.exact && current.is_zero()) r.exact = true;
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs;
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    levels.push_back(r.steps[k].cover.presheaf);
    if (k == 0) continue;
    PresheafMap d;
    for (ObjectId c = 0; c < cat.object_count(); ++c)
      d.components.push_back(multiply(f.ring(), r.steps[k - 1].kernel.parts[c].inclusion(), r.steps[k].epi.components[c]));
    diffs.push_back(d);
  }
  r.complex = levels.empty() ? Complex::zero(f.site(), f.ring()) : Complex(f.site(), f.ring(), 0, levels, diffs);
  Complex s0 = Complex::concentrated(f, 0);
  r.augmentation = levels.empty() ? ComplexMorphism::zero(r.complex, s0)
                                  : ComplexMorphism(r.complex, s0, 0, {r.steps[0].epi});
  r.augmentation.require_chain_map();
  r.valid_hi = r.exact ? INT_MAX : depth - 2;
  return r;
}

}  // namespace sitecx
