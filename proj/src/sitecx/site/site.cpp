#include "sitecx/site/site.hpp"

#include <algorithm>
#include <deque>

#include "sitecx/error.hpp"

namespace sitecx {

bool Sieve::subset_of(const Sieve& other) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] && !other.members[i]) return false;
  return true;
}

std::size_t Sieve::size() const { return static_cast<std::size_t>(std::count(members.begin(), members.end(), true)); }

namespace {

Sieve generated(const FinCategory& cat, ObjectId c, const std::vector<MorphismId>& family) {
  Sieve s{c, std::vector<bool>(cat.morphism_count(), false)};
  for (MorphismId f : family)
    for (MorphismId h : cat.into(cat.morphism(f).source)) s.members[cat.compose(f, h)] = true;
  return s;
}

Sieve pulled_back(const FinCategory& cat, const Sieve& s, MorphismId f) {
  ObjectId d = cat.morphism(f).source;
  Sieve out{d, std::vector<bool>(cat.morphism_count(), false)};
  for (MorphismId h : cat.into(d))
    if (s.members[cat.compose(f, h)]) out.members[h] = true;
  return out;
}

}  // namespace

SiteReport validate_site(const SiteSpec& spec) {
  SiteReport report;
  auto flag = [&](std::string v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };
  FinCategory cat;
  try {
    cat = FinCategory(spec);
  } catch (const Error& e) {
    flag(std::string("schema: ") + e.what());
    return report;
  }
  for (auto& v : cat.violations()) flag(v);
  bool families_ok = true;
  for (const auto& [obj, families] : spec.covers) {
    if (!cat.has_object(obj)) {
      flag("cover: covers listed for unknown object '" + obj + "'");
      families_ok = false;
      continue;
    }
    for (const auto& family : families)
      for (const auto& name : family) {
        MorphismId f;
        try {
          f = cat.morphism_id(name);
        } catch (const Error&) {
          flag("cover: family of '" + obj + "' names unknown morphism '" + name + "'");
          families_ok = false;
          continue;
        }
        if (cat.object_name(cat.morphism(f).target) != obj) {
          flag("cover: morphism '" + name + "' in a family of '" + obj + "' does not target it");
          families_ok = false;
        }
      }
  }
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    auto it = spec.covers.find(cat.object_name(c));
    if (it == spec.covers.end() || it->second.empty())
      flag("cover: object '" + cat.object_name(c) + "' has no covering family");
  }
  if (spec.points)
    for (const auto& p : *spec.points)
      for (const auto& n : p.neighborhoods)
        if (!cat.has_object(n)) flag("points: point '" + p.name + "' lies in unknown object '" + n + "'");
  if (!report.valid || !families_ok) return report;

  std::vector<std::vector<Sieve>> declared(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (const auto& family : spec.covers.at(cat.object_name(c))) {
      std::vector<MorphismId> ids;
      for (const auto& name : family) ids.push_back(cat.morphism_id(name));
      declared[c].push_back(generated(cat, c, ids));
    }
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (std::size_t k = 0; k < declared[c].size(); ++k)
      for (MorphismId f : cat.into(c)) {
        Sieve pb = pulled_back(cat, declared[c][k], f);
        ObjectId d = cat.morphism(f).source;
        bool ok = std::any_of(declared[d].begin(), declared[d].end(),
                              [&](const Sieve& s) { return s.subset_of(pb); });
        if (!ok)
          flag("stability: pullback of covering family #" + std::to_string(k) + " of '" +
               cat.object_name(c) + "' along '" + cat.morphism(f).name +
               "' contains no covering family of '" + cat.object_name(d) + "'");
      }
  return report;
}

SitePtr Site::create(SiteSpec spec, std::string name) {
  SiteReport report = validate_site(spec);
  if (!report.valid) {
    std::string msg = "invalid site";
    for (const auto& v : report.violations) msg += "; " + v;
    fail(ErrorCode::invalid_site, msg);
  }
  std::shared_ptr<Site> site(new Site());
  site->name_ = std::move(name);
  site->category_ = FinCategory(spec);
  site->spec_ = std::move(spec);
  const FinCategory& cat = site->category_;
  site->covers_.resize(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    for (const auto& family : site->spec_.covers.at(cat.object_name(c))) {
      std::vector<MorphismId> ids;
      for (const auto& n : family) ids.push_back(cat.morphism_id(n));
      site->covers_[c].push_back(ids);
    }
  site->build_sieves();
  site->build_topology();
  site->build_points();
  return site;
}

Sieve Site::maximal_sieve(ObjectId c) const {
  Sieve s{c, std::vector<bool>(category_.morphism_count(), false)};
  for (MorphismId f : category_.into(c)) s.members[f] = true;
  return s;
}

Sieve Site::generated_sieve(ObjectId c, const std::vector<MorphismId>& family) const {
  return generated(category_, c, family);
}

Sieve Site::pullback(const Sieve& s, MorphismId f) const { return pulled_back(category_, s, f); }

void Site::build_sieves() {
  sieves_.resize(object_count());
  for (ObjectId c = 0; c < object_count(); ++c) {
    std::set<Sieve> seen;
    std::deque<Sieve> queue;
    Sieve empty{c, std::vector<bool>(category_.morphism_count(), false)};
    seen.insert(empty);
    queue.push_back(empty);
    while (!queue.empty()) {
      Sieve s = queue.front();
      queue.pop_front();
      for (MorphismId f : category_.into(c)) {
        if (s.members[f]) continue;
        Sieve t = generated_sieve(c, {f});
        for (std::size_t i = 0; i < t.members.size(); ++i) t.members[i] = t.members[i] || s.members[i];
        if (seen.insert(t).second) queue.push_back(t);
      }
    }
    sieves_[c].assign(seen.begin(), seen.end());
  }
}

void Site::build_topology() {
  std::size_t n = object_count();
  topology_.assign(n, {});
  for (ObjectId c = 0; c < n; ++c) {
    topology_[c].insert(maximal_sieve(c));
    for (const auto& family : covers_[c]) topology_[c].insert(generated_sieve(c, family));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (ObjectId c = 0; c < n; ++c) {
      std::vector<Sieve> current(topology_[c].begin(), topology_[c].end());
      for (const auto& s : current)
        for (MorphismId f : category_.into(c)) {
          Sieve pb = pullback(s, f);
          if (topology_[pb.target].insert(pb).second) changed = true;
        }
    }
    for (ObjectId c = 0; c < n; ++c)
      for (const auto& r : sieves_[c]) {
        if (topology_[c].count(r)) continue;
        for (const auto& s : topology_[c]) {
          bool local = true;
          for (MorphismId f : category_.into(c))
            if (s.members[f] && !topology_[category_.morphism(f).source].count(pullback(r, f))) {
              local = false;
              break;
            }
          if (local) {
            topology_[c].insert(r);
            changed = true;
            break;
          }
        }
      }
  }
  minimal_.resize(n);
  minimal_list_.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    Sieve m = maximal_sieve(c);
    for (const auto& s : topology_[c])
      for (std::size_t i = 0; i < m.members.size(); ++i) m.members[i] = m.members[i] && s.members[i];
    require(topology_[c].count(m) > 0, ErrorCode::internal,
            "covering sieves of '" + object_name(c) + "' are not closed under intersection");
    minimal_[c] = m;
    for (MorphismId f = 0; f < m.members.size(); ++f)
      if (m.members[f]) minimal_list_[c].push_back(f);
  }
}

void Site::build_points() {
  auto minimal_of = [&](const std::vector<ObjectId>& nbhds) -> std::optional<ObjectId> {
    for (ObjectId u : nbhds) {
      bool below_all = true;
      for (ObjectId v : nbhds) below_all = below_all && !category_.hom(u, v).empty();
      if (below_all) return u;
    }
    return std::nullopt;
  };
  if (spec_.points) {
    for (const auto& p : *spec_.points) {
      Point pt{p.name, {}, std::nullopt};
      for (const auto& n : p.neighborhoods) pt.neighborhoods.push_back(category_.object(n));
      std::sort(pt.neighborhoods.begin(), pt.neighborhoods.end());
      pt.minimal = minimal_of(pt.neighborhoods);
      points_.push_back(std::move(pt));
    }
    return;
  }
  if (!category_.is_poset()) return;
  for (ObjectId c = 0; c < object_count(); ++c) {
    if (minimal_[c] != maximal_sieve(c)) continue;
    Point pt{object_name(c), {}, c};
    for (ObjectId d = 0; d < object_count(); ++d)
      if (!category_.hom(c, d).empty()) pt.neighborhoods.push_back(d);
    points_.push_back(std::move(pt));
  }
}

const Point& Site::point(const std::string& name) const {
  for (const auto& p : points_)
    if (p.name == name) return p;
  fail(ErrorCode::missing_points, "point '" + name + "' is not declared for this site");
}

std::vector<std::size_t> Site::points_of(ObjectId c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (std::binary_search(points_[i].neighborhoods.begin(), points_[i].neighborhoods.end(), c))
      out.push_back(i);
  return out;
}

SiteSpec finite_space_spec(const std::vector<std::string>& points, const std::vector<OpenSpec>& opens,
                           bool include_empty) {
  std::vector<OpenSpec> all;
  if (include_empty) all.push_back({"empty", {}});
  for (const auto& o : opens) all.push_back(o);
  std::vector<std::set<std::string>> sets;
  for (const auto& o : all) {
    for (const auto& p : o.points)
      require(std::find(points.begin(), points.end(), p) != points.end(), ErrorCode::invalid_input,
              "open '" + o.name + "' contains unknown point '" + p + "'");
    sets.emplace_back(o.points.begin(), o.points.end());
  }
  auto includes = [&](std::size_t u, std::size_t v) {
    return std::includes(sets[v].begin(), sets[v].end(), sets[u].begin(), sets[u].end());
  };
  auto arrow = [&](std::size_t u, std::size_t v) {
    return u == v ? "id_" + all[u].name : all[u].name + "->" + all[v].name;
  };

  SiteSpec spec;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& o : all) spec.objects.push_back(o.name);
  for (std::size_t u = 0; u < all.size(); ++u)
    for (std::size_t v = 0; v < all.size(); ++v)
      if (includes(u, v)) {
        require(u == v || sets[u] != sets[v], ErrorCode::invalid_input,
                "opens '" + all[u].name + "' and '" + all[v].name + "' coincide");
        arrows.emplace_back(u, v);
        spec.morphisms.push_back({arrow(u, v), all[u].name, all[v].name});
      }
  spec.compose.assign(arrows.size(), std::vector<std::optional<std::string>>(arrows.size()));
  for (std::size_t g = 0; g < arrows.size(); ++g)
    for (std::size_t f = 0; f < arrows.size(); ++f)
      if (arrows[f].second == arrows[g].first) spec.compose[g][f] = arrow(arrows[f].first, arrows[g].second);

  std::vector<std::size_t> minimal_open(points.size(), all.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t u = 0; u < all.size(); ++u) {
      if (!sets[u].count(points[p])) continue;
      bool smallest = true;
      for (std::size_t v = 0; v < all.size(); ++v)
        if (sets[v].count(points[p]) && !includes(u, v)) smallest = false;
      if (smallest) minimal_open[p] = u;
    }
    require(minimal_open[p] < all.size(), ErrorCode::invalid_input,
            "point '" + points[p] + "' has no smallest open neighborhood");
  }

  for (std::size_t u = 0; u < all.size(); ++u) {
    auto& families = spec.covers[all[u].name];
    families.push_back({arrow(u, u)});
    if (sets[u].empty()) {
      families.push_back({});
      continue;
    }
    std::set<std::size_t> mins;
    for (std::size_t p = 0; p < points.size(); ++p)
      if (sets[u].count(points[p])) mins.insert(minimal_open[p]);
    if (!(mins.size() == 1 && *mins.begin() == u)) {
      std::vector<std::string> family;
      for (std::size_t m : mins) family.push_back(arrow(m, u));
      families.push_back(family);
    }
    std::vector<std::size_t> maximal;
    for (std::size_t v = 0; v < all.size(); ++v) {
      if (v == u || !includes(v, u) || sets[v].empty()) continue;
      bool is_max = true;
      for (std::size_t w = 0; w < all.size(); ++w)
        if (w != u && w != v && includes(v, w) && includes(w, u) && sets[w] != sets[v]) is_max = false;
      if (is_max) maximal.push_back(v);
    }
    std::set<std::string> covered;
    for (std::size_t v : maximal) covered.insert(sets[v].begin(), sets[v].end());
    if (!maximal.empty() && covered == sets[u]) {
      std::vector<std::string> family;
      for (std::size_t v : maximal) family.push_back(arrow(v, u));
      if (family != families.back()) families.push_back(family);
    }
  }
  spec.points.emplace();
  for (std::size_t p = 0; p < points.size(); ++p) {
    PointSpec ps{points[p], {}};
    for (std::size_t u = 0; u < all.size(); ++u)
      if (sets[u].count(points[p])) ps.neighborhoods.push_back(all[u].name);
    spec.points->push_back(ps);
  }
  return spec;
}

SitePtr terminal_site() {
  static const SitePtr site = [] {
    SiteSpec spec;
    spec.objects = {"*"};
    spec.morphisms = {{"id_*", "*", "*"}};
    spec.compose = {{std::optional<std::string>("id_*")}};
    spec.covers["*"] = {{"id_*"}};
    return Site::create(spec, "terminal");
  }();
  return site;
}

SitePtr pseudocircle_site(bool include_empty) {
  SiteSpec spec = finite_space_spec({"a", "b", "x", "y"},
                                    {{"a", {"a"}},
                                     {"b", {"b"}},
                                     {"ab", {"a", "b"}},
                                     {"Ux", {"a", "b", "x"}},
                                     {"Uy", {"a", "b", "y"}},
                                     {"X", {"a", "b", "x", "y"}}},
                                    include_empty);
  return Site::create(spec, "pseudocircle");
}

SitePtr arrow_site() {
  SiteSpec spec;
  spec.objects = {"u", "v"};
  spec.morphisms = {{"id_u", "u", "u"}, {"id_v", "v", "v"}, {"u->v", "u", "v"}};
  using S = std::optional<std::string>;
  spec.compose = {{S("id_u"), S(), S()}, {S(), S("id_v"), S("u->v")}, {S("u->v"), S(), S()}};
  spec.covers["u"] = {{"id_u"}};
  spec.covers["v"] = {{"id_v"}};
  return Site::create(spec, "arrow");
}

}  // namespace sitecx
