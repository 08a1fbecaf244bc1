#include "sitecx/hypercover/hypercover.hpp"

#include <algorithm>
#include <functional>

#include "sitecx/error.hpp"
#include "sitecx/simplicial/dold_kan.hpp"
#include "sitecx/simplicial/matching.hpp"

namespace sitecx {

namespace {

// Builds a truncated simplicial set-presheaf whose elements over d are
// labels; restriction, faces and degeneracies act on labels.
template <typename Label>
struct LabelledBuilder {
  SitePtr site;
  int top;
  std::function<std::vector<Label>(int, ObjectId)> enumerate;
  std::function<Label(const Label&, MorphismId)> restrict;
  std::function<Label(int, int, const Label&)> face;
  std::function<Label(int, int, const Label&)> degeneracy;

  std::vector<std::vector<std::vector<Label>>> labels;           // [n][d]
  std::vector<std::vector<std::map<Label, std::size_t>>> index;  // [n][d]

  SimplicialSet build() {
    const FinCategory& cat = site->category();
    std::size_t objects = cat.object_count();
    labels.assign(static_cast<std::size_t>(top + 1), {});
    index.assign(static_cast<std::size_t>(top + 1), {});
    SimplicialSet x;
    for (int n = 0; n <= top; ++n) {
      auto& ln = labels[static_cast<std::size_t>(n)];
      auto& in = index[static_cast<std::size_t>(n)];
      std::vector<std::size_t> sizes;
      for (ObjectId d = 0; d < objects; ++d) {
        ln.push_back(enumerate(n, d));
        in.emplace_back();
        for (std::size_t e = 0; e < ln[d].size(); ++e) in[d][ln[d][e]] = e;
        sizes.push_back(ln[d].size());
      }
      std::vector<std::vector<std::size_t>> restrictions;
      for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
        const auto& m = cat.morphism(g);
        std::vector<std::size_t> r;
        for (const auto& l : ln[m.target]) r.push_back(lookup(n, m.source, restrict(l, g)));
        restrictions.push_back(r);
      }
      x.levels.emplace_back(site, sizes, restrictions);
    }
    for (int n = 0; n <= top; ++n) {
      x.faces.emplace_back();
      if (n > 0)
        for (int i = 0; i <= n; ++i) x.faces.back().push_back(level_map(x, n, n - 1, [&](const Label& l) { return face(n, i, l); }));
      x.degeneracies.emplace_back();
      if (n < top)
        for (int i = 0; i <= n; ++i)
          x.degeneracies.back().push_back(level_map(x, n, n + 1, [&](const Label& l) { return degeneracy(n, i, l); }));
    }
    return x;
  }

  std::size_t lookup(int n, ObjectId d, const Label& l) const {
    const auto& in = index[static_cast<std::size_t>(n)][d];
    auto it = in.find(l);
    require(it != in.end(), ErrorCode::internal, "nerve label missing from its level");
    return it->second;
  }

  SetPresheafMap level_map(const SimplicialSet& x, int from, int to, const std::function<Label(const Label&)>& f) const {
    SetPresheafMap m{x.levels[static_cast<std::size_t>(from)], x.levels[static_cast<std::size_t>(to)], {}};
    for (ObjectId d = 0; d < site->object_count(); ++d) {
      std::vector<std::size_t> comp;
      for (const auto& l : labels[static_cast<std::size_t>(from)][d]) comp.push_back(lookup(to, d, f(l)));
      m.components.push_back(comp);
    }
    return m;
  }
};

// Index of the element f of y(c)(d) = Hom(d, c).
std::size_t hom_index(const FinCategory& cat, ObjectId d, ObjectId c, MorphismId f) {
  auto hs = cat.hom(d, c);
  auto it = std::find(hs.begin(), hs.end(), f);
  require(it != hs.end(), ErrorCode::internal, "morphism not in hom-set");
  return static_cast<std::size_t>(it - hs.begin());
}

}  // namespace

Hypercover make_hypercover(AugmentedSimplicialSet x, ObjectId base) {
  x.require_valid();
  Hypercover h;
  h.base = base;
  for (const auto& level : x.simplicial.levels) {
    auto dec = representable_decomposition(level);
    require(dec.has_value(), ErrorCode::invalid_input, "hypercover level is not a coproduct of representables");
    h.summands.push_back(*dec);
  }
  h.augmented = std::move(x);
  return h;
}

Hypercover cech_nerve(const SitePtr& site, ObjectId c, const std::vector<MorphismId>& family, int truncation) {
  const FinCategory& cat = site->category();
  require(c < cat.object_count(), ErrorCode::unknown_object, "unknown base object");
  for (MorphismId u : family)
    require(cat.morphism(u).target == c, ErrorCode::invalid_input, "covering family has mixed targets");

  // label: ((i_0, f_0), …, (i_n, f_n)) with u_{i_k} f_k all equal
  using Label = std::vector<std::pair<std::size_t, MorphismId>>;
  LabelledBuilder<Label> b;
  b.site = site;
  b.top = truncation;
  b.enumerate = [&](int n, ObjectId d) {
    std::vector<Label> out;
    Label cur;
    std::function<void()> extend = [&]() {
      if (static_cast<int>(cur.size()) == n + 1) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = 0; i < family.size(); ++i)
        for (MorphismId f : cat.hom(d, cat.morphism(family[i]).source)) {
          if (!cur.empty() && cat.compose(family[i], f) != cat.compose(family[cur[0].first], cur[0].second)) continue;
          cur.push_back({i, f});
          extend();
          cur.pop_back();
        }
    };
    extend();
    return out;
  };
  b.restrict = [&](const Label& l, MorphismId g) {
    Label out;
    for (auto [i, f] : l) out.push_back({i, cat.compose(f, g)});
    return out;
  };
  b.face = [](int, int i, const Label& l) {
    Label out = l;
    out.erase(out.begin() + i);
    return out;
  };
  b.degeneracy = [](int, int i, const Label& l) {
    Label out = l;
    out.insert(out.begin() + i, l[static_cast<std::size_t>(i)]);
    return out;
  };
  SimplicialSet x = b.build();
  SetPresheaf target = SetPresheaf::representable(site, c);
  SetPresheafMap aug{x.levels[0], target, {}};
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    std::vector<std::size_t> comp;
    for (const auto& l : b.labels[0][d]) comp.push_back(hom_index(cat, d, c, cat.compose(family[l[0].first], l[0].second)));
    aug.components.push_back(comp);
  }
  try {
    return make_hypercover({x, target, aug}, c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_input)
      fail(ErrorCode::missing_fiber_product, "iterated fiber products of the family are not coproducts of representables");
    throw;
  }
}

Hypercover refined_nerve(const SitePtr& site, ObjectId base, const std::vector<ObjectId>& family,
                         const std::map<std::pair<std::size_t, std::size_t>, std::vector<ObjectId>>& refinements,
                         int truncation) {
  const FinCategory& cat = site->category();
  require(cat.is_poset(), ErrorCode::invalid_input, "refined nerves need a poset site");
  auto le = [&](ObjectId a, ObjectId b) { return !cat.hom(a, b).empty(); };
  for (ObjectId ci : family) require(le(ci, base), ErrorCode::invalid_input, "family member is not below the base");

  // Edge summands per ordered pair.
  std::size_t k = family.size();
  std::vector<std::vector<std::vector<ObjectId>>> edges(k, std::vector<std::vector<ObjectId>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        edges[i][j] = {family[i]};
        continue;
      }
      auto key = std::make_pair(std::min(i, j), std::max(i, j));
      auto it = refinements.find(key);
      if (it != refinements.end()) {
        for (ObjectId r : it->second)
          require(le(r, family[i]) && le(r, family[j]), ErrorCode::invalid_input, "refinement is not below the overlap");
        edges[i][j] = it->second;
        continue;
      }
      // the meet, if any object lies below both
      std::vector<ObjectId> below;
      for (ObjectId d = 0; d < cat.object_count(); ++d)
        if (le(d, family[i]) && le(d, family[j])) below.push_back(d);
      if (below.empty()) continue;
      std::vector<ObjectId> maximal;
      for (ObjectId d : below) {
        bool top = true;
        for (ObjectId e : below)
          if (e != d && le(d, e)) top = false;
        if (top) maximal.push_back(d);
      }
      require(maximal.size() == 1, ErrorCode::missing_fiber_product,
              "objects '" + cat.object_name(family[i]) + "' and '" + cat.object_name(family[j]) + "' have no meet");
      edges[i][j] = maximal;
    }

  // label: vertices v_0..v_n followed by edge choices e_{ab}, a < b, row-major
  using Label = std::vector<std::size_t>;
  auto edge_pos = [](int n, int a, int bb) {
    // position of e_{a,b} after the n+1 vertices
    int pos = n + 1;
    for (int x = 0; x < a; ++x) pos += n - x;
    return static_cast<std::size_t>(pos + (bb - a - 1));
  };
  LabelledBuilder<Label> b;
  b.site = site;
  b.top = truncation;
  b.enumerate = [&](int n, ObjectId d) {
    std::vector<Label> out;
    std::vector<std::size_t> v;
    std::function<void()> vertices = [&]() {
      if (static_cast<int>(v.size()) == n + 1) {
        // choose edges
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a <= n; ++a)
          for (int bb = a + 1; bb <= n; ++bb) pairs.push_back({a, bb});
        Label cur = v;
        std::function<void(std::size_t)> choose = [&](std::size_t p) {
          if (p == pairs.size()) {
            out.push_back(cur);
            return;
          }
          auto [a, bb] = pairs[p];
          const auto& opts = edges[v[static_cast<std::size_t>(a)]][v[static_cast<std::size_t>(bb)]];
          for (std::size_t e = 0; e < opts.size(); ++e) {
            if (!le(d, opts[e])) continue;
            cur.push_back(e);
            choose(p + 1);
            cur.pop_back();
          }
        };
        choose(0);
        return;
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (!le(d, family[i])) continue;
        v.push_back(i);
        vertices();
        v.pop_back();
      }
    };
    vertices();
    return out;
  };
  b.restrict = [](const Label& l, MorphismId) { return l; };
  b.face = [&](int n, int i, const Label& l) {
    Label out;
    for (int a = 0; a <= n; ++a)
      if (a != i) out.push_back(l[static_cast<std::size_t>(a)]);
    for (int a = 0; a <= n; ++a)
      for (int bb = a + 1; bb <= n; ++bb)
        if (a != i && bb != i) out.push_back(l[edge_pos(n, a, bb)]);
    return out;
  };
  b.degeneracy = [&](int n, int i, const Label& l) {
    // vertex i is doubled; old index of new vertex a
    auto old = [&](int a) { return a <= i ? a : a - 1; };
    Label out;
    for (int a = 0; a <= n + 1; ++a) out.push_back(l[static_cast<std::size_t>(old(a))]);
    for (int a = 0; a <= n + 1; ++a)
      for (int bb = a + 1; bb <= n + 1; ++bb) {
        int oa = old(a), ob = old(bb);
        out.push_back(oa == ob ? 0 : l[edge_pos(n, oa, ob)]);
      }
    return out;
  };
  SimplicialSet x = b.build();
  SetPresheaf target = SetPresheaf::representable(site, base);
  SetPresheafMap aug{x.levels[0], target, {}};
  for (ObjectId d = 0; d < cat.object_count(); ++d)
    aug.components.emplace_back(b.labels[0][d].size(), 0);
  return make_hypercover({x, target, aug}, base);
}

Hypercover constant_hypercover(const SitePtr& site, ObjectId c, int truncation) {
  SetPresheaf y = SetPresheaf::representable(site, c);
  return make_hypercover({SimplicialSet::constant(y, truncation), y, identity_map(y)}, c);
}

HypercoverVerdict verify_hypercover(const AugmentedSimplicialSet& x, int n_max) {
  HypercoverVerdict v;
  auto failed = [&](int n, const std::string& why) {
    v.holds = false;
    v.first_failure = n;
    v.detail = why;
    return v;
  };
  if (n_max > x.simplicial.truncation())
    return failed(x.simplicial.truncation() + 1, "hypercover is truncated below the requested level");
  for (int n = 0; n <= n_max; ++n) {
    try {
      AugmentedSimplicialSet t{truncated(x.simplicial, n), x.target, x.augmentation};
      t.require_valid();
    } catch (const Error& e) {
      return failed(n, "level " + std::to_string(n) + ": " + e.what());
    }
    if (!representable_decomposition(x.simplicial.levels[static_cast<std::size_t>(n)]))
      return failed(n, "level " + std::to_string(n) + " is not a coproduct of representables");
    MatchingObject m = matching_object(x, n);
    if (!is_generalized_cover(m.comparison))
      return failed(n, "comparison map at level " + std::to_string(n) + " is not a generalized cover");
  }
  return v;
}

HypercoverChain chain_of_hypercover(const Hypercover& x, const Ring& ring) {
  HypercoverChain out;
  out.complex = moore(linearize(x.simplicial(), ring));
  ModPresheaf lam = ModPresheaf::linearize(x.augmented.target, ring);
  Complex s0 = Complex::concentrated(lam, 0);
  out.augmentation = ComplexMorphism(out.complex, s0, 0, {linearize(x.augmented.augmentation, ring)});
  out.augmentation.require_chain_map();
  for (const auto& level : x.summands) {
    std::vector<ObjectId> objs;
    for (const auto& s : level) objs.push_back(s.object);
    out.semi_representable.push_back(objs);
  }
  return out;
}

Verdicts check_acyclicity(const Hypercover& x, const Ring& ring) {
  HypercoverChain ch = chain_of_hypercover(x, ring);
  return is_local_equivalence(ch.augmentation, 0, x.truncation() - 1);
}

}  // namespace sitecx
