#include "sitecx/site/sheafify.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

namespace {

struct Matching {
  FpModule ambient;
  std::vector<MorphismId> members;
  std::vector<std::size_t> offsets;
  Subquotient part;
};

Matching matching_families(const ModPresheaf& f, ObjectId c, const std::vector<MorphismId>& sieve) {
  const FinCategory& cat = f.site()->category();
  const Ring& ring = f.ring();
  Matching out;
  out.members = sieve;
  std::vector<FpModule> parts;
  std::size_t total = 0;
  std::vector<long> position(cat.morphism_count(), -1);
  for (std::size_t i = 0; i < sieve.size(); ++i) {
    position[sieve[i]] = static_cast<long>(i);
    out.offsets.push_back(total);
    parts.push_back(f.value(cat.morphism(sieve[i]).source));
    total += parts.back().generators();
  }
  out.ambient = parts.empty() ? FpModule(ring, 0) : direct_sum(parts);

  // x_f restricted along h must equal x_{f∘h}.
  std::vector<FpModule> targets;
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < sieve.size(); ++i) {
    ObjectId d = cat.morphism(sieve[i]).source;
    for (MorphismId h : cat.into(d)) {
      if (cat.is_identity(h)) continue;
      ObjectId e = cat.morphism(h).source;
      long j = position[cat.compose(sieve[i], h)];
      require(j >= 0, ErrorCode::internal, "sieve not closed under precomposition");
      Matrix row(f.generators(e), total);
      paste(row, f.map(h), 0, out.offsets[i]);
      paste(row, negate(ring, Matrix::identity(f.generators(e))), 0, out.offsets[static_cast<std::size_t>(j)]);
      rows.push_back(row);
      targets.push_back(f.value(e));
    }
  }
  (void)c;
  if (rows.empty()) {
    out.part = Subquotient(ring, total, Matrix::identity(total), out.ambient.relations());
  } else {
    FpModule target = direct_sum(targets);
    out.part = kernel(out.ambient, target, vstack(rows, total));
  }
  return out;
}

Matrix unit_matrix(const ModPresheaf& f, const Matching& m) {
  const FinCategory& cat = f.site()->category();
  std::vector<Matrix> blocks;
  for (MorphismId g : m.members) blocks.push_back(f.map(g));
  ObjectId c = m.members.empty() ? 0 : cat.morphism(m.members.front()).target;
  std::size_t cols = m.members.empty() ? 0 : f.generators(c);
  return vstack(blocks, cols);
}

}  // namespace

PlusConstruction plus(const ModPresheaf& f) {
  const Site& site = *f.site();
  const FinCategory& cat = site.category();
  const Ring& ring = f.ring();
  std::vector<Matching> matchings;
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    matchings.push_back(matching_families(f, c, site.minimal_cover(c)));

  PlusConstruction out;
  std::vector<FpModule> values;
  for (auto& m : matchings) {
    out.parts.push_back(m.part);
    values.push_back(m.part.module());
  }
  std::vector<Matrix> maps;
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    ObjectId d = cat.morphism(g).source, c = cat.morphism(g).target;
    const Matching& mc = matchings[c];
    const Matching& md = matchings[d];
    Matrix amb(md.ambient.generators(), mc.ambient.generators());
    for (std::size_t j = 0; j < md.members.size(); ++j) {
      MorphismId gh = cat.compose(g, md.members[j]);
      for (std::size_t i = 0; i < mc.members.size(); ++i)
        if (mc.members[i] == gh) {
          paste(amb, Matrix::identity(f.generators(cat.morphism(gh).source)), md.offsets[j], mc.offsets[i]);
          break;
        }
    }
    maps.push_back(induced_map(mc.part, md.part, amb));
  }
  out.presheaf = ModPresheaf(f.site(), ring, values, maps);
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    Matrix u = matchings[c].members.empty() ? Matrix(0, f.generators(c)) : unit_matrix(f, matchings[c]);
    out.unit.components.push_back(matchings[c].part.to_module(u));
  }
  return out;
}

PresheafMap plus_map(const ModPresheaf& source, const PlusConstruction& source_plus,
                     const PlusConstruction& target_plus, const PresheafMap& phi) {
  const Site& site = *source.site();
  const FinCategory& cat = site.category();
  PresheafMap out;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<Matrix> blocks;
    for (MorphismId g : site.minimal_cover(c)) blocks.push_back(phi.components[cat.morphism(g).source]);
    Matrix amb = block_diagonal(blocks);
    out.components.push_back(induced_map(source_plus.parts[c], target_plus.parts[c], amb));
  }
  return out;
}

Sheafification sheafify(const ModPresheaf& f) {
  Sheafification out;
  out.first = plus(f);
  out.second = plus(out.first.presheaf);
  out.sheaf = out.second.presheaf;
  out.unit = compose(out.sheaf, out.second.unit, out.first.unit);
  return out;
}

PresheafMap sheafify_map(const ModPresheaf& source, const Sheafification& source_sheaf,
                         const Sheafification& target_sheaf, const PresheafMap& phi) {
  PresheafMap once = plus_map(source, source_sheaf.first, target_sheaf.first, phi);
  return plus_map(source_sheaf.first.presheaf, source_sheaf.second, target_sheaf.second, once);
}

bool is_sheaf(const ModPresheaf& f) {
  const Site& site = *f.site();
  const FinCategory& cat = site.category();
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (const Sieve& s : site.covering_sieves(c)) {
      std::vector<MorphismId> members;
      for (MorphismId g = 0; g < s.members.size(); ++g)
        if (s.members[g]) members.push_back(g);
      Matching m = matching_families(f, c, members);
      Matrix u = members.empty() ? Matrix(0, f.generators(c)) : unit_matrix(f, m);
      if (!is_isomorphism(f.value(c), m.part.module(), m.part.to_module(u))) return false;
    }
  return true;
}

bool is_local_isomorphism(const ModPresheaf& source, const ModPresheaf& target, const PresheafMap& phi) {
  Sheafification s = sheafify(source);
  Sheafification t = sheafify(target);
  return is_objectwise_iso(s.sheaf, t.sheaf, sheafify_map(source, s, t, phi));
}

}  // namespace sitecx
