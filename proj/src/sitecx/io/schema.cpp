#include "sitecx/io/schema.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sitecx/complex/homology.hpp"
#include "sitecx/error.hpp"

namespace sitecx::io {

void Node::error(const std::string& message) const {
  fail(ErrorCode::invalid_input, origin_ + ": " + (path_.empty() ? "/" : path_) + ": " + message);
}

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
  if (!value_->is_object()) error("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) error("missing field '" + key + "'");
  return Node(*it, origin_, path_ + "/" + key);
}

std::optional<Node> Node::find(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

Node Node::at(std::size_t index) const {
  const auto& a = array();
  if (index >= a.size()) error("index " + std::to_string(index) + " out of range");
  return Node(a[index], origin_, path_ + "/" + std::to_string(index));
}

std::size_t Node::size() const { return array().size(); }

const Json::object_t& Node::object() const {
  if (!value_->is_object()) error("expected an object");
  return value_->get_ref<const Json::object_t&>();
}

const Json::array_t& Node::array() const {
  if (!value_->is_array()) error("expected an array");
  return value_->get_ref<const Json::array_t&>();
}

std::string Node::string() const {
  if (!value_->is_string()) error("expected a string");
  return value_->get<std::string>();
}

long Node::integer() const {
  if (value_->is_number_integer()) return value_->get<long>();
  if (value_->is_string()) {
    const auto s = value_->get<std::string>();
    std::size_t used = 0;
    try {
      long v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  error("expected an integer");
}

std::size_t Node::count() const {
  long v = integer();
  if (v < 0) error("expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

bool Node::boolean() const {
  if (!value_->is_boolean()) error("expected true or false");
  return value_->get<bool>();
}

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::invalid_input, origin + ": not valid JSON (byte " + std::to_string(e.byte) + ")");
  }
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <typename F>
auto in_context(const Node& node, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_input && std::string(e.what()).find(": /") != std::string::npos) throw;
    node.error(e.what());
  }
}

std::vector<std::string> strings(const Node& node) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(node.at(i).string());
  return out;
}

ObjectId object_of(const Node& node, const SitePtr& site) {
  std::string name = node.string();
  if (!site->category().has_object(name)) node.error("unknown object '" + name + "'");
  return site->object(name);
}

MorphismId morphism_of(const Node& node, const SitePtr& site) {
  std::string name = node.string();
  return in_context(node, [&] { return site->category().morphism_id(name); });
}

void require_keys(const Node& node, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : node.object())
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      node.at(key).error("unexpected field '" + key + "'");
}

}  // namespace

Ring make_ring(const std::string& tag, unsigned long p) {
  if (tag == "Z") return Ring::integers();
  if (tag == "Q") return Ring::rationals();
  if (tag == "Fp") {
    require(is_prime(p), ErrorCode::invalid_input, "Fp needs a prime p, got " + std::to_string(p));
    return Ring::prime_field(p);
  }
  fail(ErrorCode::invalid_input, "unknown ring '" + tag + "' (expected Z, Q or Fp)");
}

std::optional<Ring> parse_ring_tag(const Node& node) {
  auto tag = node.find("ring");
  if (!tag) {
    if (node.has("p")) node.at("p").error("'p' given without a ring");
    return std::nullopt;
  }
  std::string t = tag->string();
  if (t == "Fp") {
    Node p = node.at("p");
    long v = p.integer();
    if (v < 2 || !is_prime(static_cast<unsigned long>(v))) p.error("expected a prime");
    return Ring::prime_field(static_cast<unsigned long>(v));
  }
  if (node.has("p")) node.at("p").error("'p' only applies to ring Fp");
  if (t == "Z") return Ring::integers();
  if (t == "Q") return Ring::rationals();
  tag->error("expected \"Z\", \"Q\" or \"Fp\"");
}

SiteSpec parse_site_spec(const Node& node) {
  if (auto space = node.find("space")) {
    require_keys(*space, {"points", "opens", "include_empty"});
    std::vector<std::string> points = strings(space->at("points"));
    std::vector<OpenSpec> opens;
    Node list = space->at("opens");
    for (std::size_t i = 0; i < list.size(); ++i) {
      Node o = list.at(i);
      require_keys(o, {"name", "points"});
      opens.push_back({o.at("name").string(), strings(o.at("points"))});
    }
    bool empty = space->has("include_empty") && space->at("include_empty").boolean();
    return in_context(*space, [&] { return finite_space_spec(points, opens, empty); });
  }
  require_keys(node, {"name", "objects", "morphisms", "compose", "covers", "points"});
  SiteSpec spec;
  spec.objects = strings(node.at("objects"));
  Node morphisms = node.at("morphisms");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    Node m = morphisms.at(i);
    require_keys(m, {"id", "src", "dst"});
    spec.morphisms.push_back({m.at("id").string(), m.at("src").string(), m.at("dst").string()});
  }
  Node compose = node.at("compose");
  if (compose.size() != spec.morphisms.size())
    compose.error("expected one row per morphism (" + std::to_string(spec.morphisms.size()) + ")");
  for (std::size_t g = 0; g < compose.size(); ++g) {
    Node row = compose.at(g);
    if (row.size() != spec.morphisms.size())
      row.error("expected one entry per morphism (" + std::to_string(spec.morphisms.size()) + ")");
    std::vector<std::optional<std::string>> out;
    for (std::size_t f = 0; f < row.size(); ++f) {
      Node e = row.at(f);
      out.push_back(e.value().is_null() ? std::nullopt : std::optional<std::string>(e.string()));
    }
    spec.compose.push_back(std::move(out));
  }
  Node covers = node.at("covers");
  for (const auto& [obj, _] : covers.object()) {
    Node families = covers.at(obj);
    std::vector<std::vector<std::string>> list;
    for (std::size_t i = 0; i < families.size(); ++i) list.push_back(strings(families.at(i)));
    spec.covers[obj] = std::move(list);
  }
  if (auto points = node.find("points")) {
    std::vector<PointSpec> list;
    for (std::size_t i = 0; i < points->size(); ++i) {
      Node p = points->at(i);
      require_keys(p, {"name", "neighborhoods"});
      list.push_back({p.at("name").string(), strings(p.at("neighborhoods"))});
    }
    spec.points = std::move(list);
  }
  return spec;
}

std::string site_name(const Node& node) { return node.has("name") ? node.at("name").string() : ""; }

SitePtr parse_site(const Node& node) {
  SiteSpec spec = parse_site_spec(node);
  return in_context(node, [&] { return Site::create(spec, site_name(node)); });
}

Scalar parse_scalar(const Node& node, const Ring& ring) {
  const Json& v = node.value();
  if (v.is_number_integer()) return in_context(node, [&] { return ring.normalize(Scalar(v.get<long>())); });
  if (v.is_string()) return in_context(node, [&] { return ring.parse(v.get<std::string>()); });
  node.error("expected a decimal string");
}

Matrix parse_matrix(const Node& node, const Ring& ring, std::size_t rows, std::optional<std::size_t> cols) {
  const auto& a = node.array();
  if (a.empty() && (!cols || *cols == 0)) return Matrix(rows, 0);
  if (a.size() != rows) node.error("expected " + std::to_string(rows) + " rows, got " + std::to_string(a.size()));
  std::size_t width = cols ? *cols : node.at(0).size();
  Matrix m(rows, width);
  for (std::size_t i = 0; i < rows; ++i) {
    Node row = node.at(i);
    if (row.size() != width)
      row.error("expected " + std::to_string(width) + " entries, got " + std::to_string(row.size()));
    for (std::size_t j = 0; j < width; ++j) m(i, j) = parse_scalar(row.at(j), ring);
  }
  return m;
}

FpModule parse_module(const Node& node, const Ring& ring) {
  require_keys(node, {"generators", "relations"});
  std::size_t g = node.at("generators").count();
  if (auto rel = node.find("relations")) return FpModule(ring, g, parse_matrix(*rel, ring, g, std::nullopt));
  return FpModule::free(ring, g);
}

ModPresheaf parse_presheaf(const Node& node, const SitePtr& site, const Ring& ring) {
  const FinCategory& cat = site->category();
  if (auto c = node.find("constant")) {
    require_keys(node, {"constant"});
    return ModPresheaf::constant(site, parse_module(*c, ring));
  }
  if (auto r = node.find("representable")) {
    require_keys(node, {"representable"});
    return ModPresheaf::representable(site, ring, object_of(*r, site));
  }
  if (auto s = node.find("sum")) {
    require_keys(node, {"sum"});
    std::vector<ModPresheaf> parts;
    for (std::size_t i = 0; i < s->size(); ++i) parts.push_back(parse_presheaf(s->at(i), site, ring));
    if (parts.empty()) return ModPresheaf::zero(site, ring);
    return direct_sum(parts);
  }
  if (!node.has("values")) node.error("expected one of 'constant', 'representable', 'sum' or 'values'");
  require_keys(node, {"values", "maps"});
  std::vector<FpModule> values(cat.object_count(), FpModule::free(ring, 0));
  Node vals = node.at("values");
  for (const auto& [name, _] : vals.object()) {
    Node v = vals.at(name);
    if (!cat.has_object(name)) v.error("unknown object '" + name + "'");
    values[site->object(name)] = parse_module(v, ring);
  }
  std::vector<std::optional<Matrix>> maps(cat.morphism_count());
  if (auto ms = node.find("maps")) {
    for (const auto& [name, _] : ms->object()) {
      Node m = ms->at(name);
      MorphismId f = in_context(m, [&] { return cat.morphism_id(name); });
      const Morphism& mor = cat.morphism(f);
      maps[f] = parse_matrix(m, ring, values[mor.source].generators(), values[mor.target].generators());
    }
  }
  std::vector<Matrix> out;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const Morphism& mor = cat.morphism(f);
    std::size_t rows = values[mor.source].generators(), cols = values[mor.target].generators();
    if (maps[f]) {
      out.push_back(*maps[f]);
    } else if (cat.is_identity(f)) {
      out.push_back(Matrix::identity(rows));
    } else if (rows == 0 || cols == 0) {
      out.push_back(Matrix(rows, cols));
    } else {
      node.at("maps").error("missing restriction for morphism '" + mor.name + "'");
    }
  }
  return in_context(node, [&] {
    ModPresheaf p(site, ring, values, out);
    p.require_functorial();
    return p;
  });
}

Complex parse_complex(const Node& node, const SitePtr& site, std::optional<Ring> ring) {
  require_keys(node, {"ring", "p", "lo", "levels", "differentials"});
  std::optional<Ring> declared = parse_ring_tag(node);
  Ring r = ring ? *ring : declared ? *declared : Ring::integers();
  int lo = static_cast<int>(node.at("lo").integer());
  Node levels = node.at("levels");
  std::vector<ModPresheaf> ls;
  for (std::size_t i = 0; i < levels.size(); ++i) ls.push_back(parse_presheaf(levels.at(i), site, r));
  std::vector<PresheafMap> diffs;
  std::size_t expected = ls.empty() ? 0 : ls.size() - 1;
  if (node.has("differentials") || expected > 0) {
    Node ds = node.at("differentials");
    if (ds.size() != expected)
      ds.error("expected " + std::to_string(expected) + " differentials, one per adjacent pair of levels");
    for (std::size_t k = 0; k < expected; ++k) {
      Node d = ds.at(k);
      PresheafMap m;
      for (ObjectId c = 0; c < site->object_count(); ++c)
        m.components.push_back(Matrix(ls[k].generators(c), ls[k + 1].generators(c)));
      for (const auto& [name, _] : d.object()) {
        Node entry = d.at(name);
        if (!site->category().has_object(name)) entry.error("unknown object '" + name + "'");
        ObjectId c = site->object(name);
        m.components[c] = parse_matrix(entry, r, ls[k].generators(c), ls[k + 1].generators(c));
      }
      diffs.push_back(std::move(m));
    }
  }
  if (ls.empty()) return Complex::zero(site, r);
  return in_context(node, [&] { return Complex(site, r, lo, ls, diffs); });
}

namespace {

SetPresheaf parse_set_presheaf(const Node& node, const SitePtr& site) {
  require_keys(node, {"sizes", "restrictions"});
  const FinCategory& cat = site->category();
  std::vector<std::size_t> sizes(cat.object_count(), 0);
  Node s = node.at("sizes");
  for (const auto& [name, _] : s.object()) {
    Node v = s.at(name);
    if (!cat.has_object(name)) v.error("unknown object '" + name + "'");
    sizes[site->object(name)] = v.count();
  }
  std::vector<std::vector<std::size_t>> restrictions(cat.morphism_count());
  std::vector<bool> given(cat.morphism_count(), false);
  if (auto rs = node.find("restrictions")) {
    for (const auto& [name, _] : rs->object()) {
      Node r = rs->at(name);
      MorphismId f = in_context(r, [&] { return cat.morphism_id(name); });
      for (std::size_t i = 0; i < r.size(); ++i) restrictions[f].push_back(r.at(i).count());
      given[f] = true;
    }
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    if (given[f]) continue;
    const Morphism& m = cat.morphism(f);
    if (cat.is_identity(f)) {
      for (std::size_t x = 0; x < sizes[m.target]; ++x) restrictions[f].push_back(x);
    } else if (sizes[m.target] > 0) {
      node.at("restrictions").error("missing restriction for morphism '" + m.name + "'");
    }
  }
  return in_context(node, [&] {
    SetPresheaf p(site, sizes, restrictions);
    p.require_functorial();
    return p;
  });
}

SetPresheafMap parse_set_map(const Node& node, const SetPresheaf& source, const SetPresheaf& target) {
  const SitePtr& site = source.site();
  std::vector<std::vector<std::size_t>> comps(site->object_count());
  for (const auto& [name, _] : node.object()) {
    Node v = node.at(name);
    if (!site->category().has_object(name)) v.error("unknown object '" + name + "'");
    auto& c = comps[site->object(name)];
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(v.at(i).count());
  }
  for (ObjectId c = 0; c < site->object_count(); ++c) {
    if (comps[c].size() != source.size(c))
      node.error("component at '" + site->object_name(c) + "' needs " + std::to_string(source.size(c)) + " entries");
    for (auto y : comps[c])
      if (y >= target.size(c)) node.error("component at '" + site->object_name(c) + "' leaves the target");
  }
  return SetPresheafMap{source, target, comps};
}

}  // namespace

Hypercover parse_hypercover(const Node& node, const SitePtr& site) {
  std::string kind = node.at("kind").string();
  ObjectId base = object_of(node.at("base"), site);
  Hypercover h;
  if (kind == "cech") {
    require_keys(node, {"kind", "base", "family", "truncation"});
    int n = static_cast<int>(node.at("truncation").count());
    Node fam = node.at("family");
    std::vector<MorphismId> family;
    for (std::size_t i = 0; i < fam.size(); ++i) family.push_back(morphism_of(fam.at(i), site));
    h = in_context(node, [&] { return cech_nerve(site, base, family, n); });
  } else if (kind == "refined") {
    require_keys(node, {"kind", "base", "family", "refinements", "truncation"});
    int n = static_cast<int>(node.at("truncation").count());
    Node fam = node.at("family");
    std::vector<ObjectId> family;
    for (std::size_t i = 0; i < fam.size(); ++i) family.push_back(object_of(fam.at(i), site));
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ObjectId>> refinements;
    if (auto refs = node.find("refinements")) {
      for (std::size_t i = 0; i < refs->size(); ++i) {
        Node r = refs->at(i);
        require_keys(r, {"pair", "objects"});
        Node pair = r.at("pair");
        if (pair.size() != 2) pair.error("expected two family indices");
        std::size_t a = pair.at(0).count(), b = pair.at(1).count();
        if (a >= family.size() || b >= family.size()) pair.error("index outside the family");
        std::vector<ObjectId> objs;
        Node os = r.at("objects");
        for (std::size_t j = 0; j < os.size(); ++j) objs.push_back(object_of(os.at(j), site));
        refinements[{std::min(a, b), std::max(a, b)}] = objs;
      }
    }
    h = in_context(node, [&] { return refined_nerve(site, base, family, refinements, n); });
  } else if (kind == "explicit") {
    require_keys(node, {"kind", "base", "levels", "faces", "degeneracies", "augmentation"});
    AugmentedSimplicialSet x;
    Node levels = node.at("levels");
    if (levels.size() == 0) levels.error("expected at least one level");
    for (std::size_t i = 0; i < levels.size(); ++i)
      x.simplicial.levels.push_back(parse_set_presheaf(levels.at(i), site));
    const auto& ls = x.simplicial.levels;
    Node faces = node.at("faces"), degens = node.at("degeneracies");
    if (faces.size() != ls.size()) faces.error("expected one list per level (empty for level 0)");
    if (degens.size() + 1 != ls.size()) degens.error("expected one list per level below the top");
    for (std::size_t n = 0; n < ls.size(); ++n) {
      Node fs = faces.at(n);
      std::size_t expected = n == 0 ? 0 : n + 1;
      if (fs.size() != expected) fs.error("level " + std::to_string(n) + " has " + std::to_string(expected) + " faces");
      std::vector<SetPresheafMap> out;
      for (std::size_t i = 0; i < expected; ++i) out.push_back(parse_set_map(fs.at(i), ls[n], ls[n - 1]));
      x.simplicial.faces.push_back(std::move(out));
    }
    for (std::size_t n = 0; n + 1 < ls.size(); ++n) {
      Node ds = degens.at(n);
      if (ds.size() != n + 1) ds.error("level " + std::to_string(n) + " has " + std::to_string(n + 1) + " degeneracies");
      std::vector<SetPresheafMap> out;
      for (std::size_t i = 0; i <= n; ++i) out.push_back(parse_set_map(ds.at(i), ls[n], ls[n + 1]));
      x.simplicial.degeneracies.push_back(std::move(out));
    }
    x.target = SetPresheaf::representable(site, base);
    x.augmentation = parse_set_map(node.at("augmentation"), ls[0], x.target);
    h = in_context(node, [&] { return make_hypercover(x, base); });
  } else {
    node.at("kind").error("expected \"cech\", \"refined\" or \"explicit\"");
  }
  HypercoverVerdict v = verify_hypercover(h.augmented, h.truncation());
  if (!v.holds) node.error("not a hypercover: " + v.detail);
  return h;
}

namespace {

Complex parse_module_complex(const Node& node, const Ring& ring) {
  require_keys(node, {"lo", "levels", "differentials"});
  int lo = node.has("lo") ? static_cast<int>(node.at("lo").integer()) : 0;
  Node levels = node.at("levels");
  std::vector<FpModule> ls;
  for (std::size_t i = 0; i < levels.size(); ++i) ls.push_back(parse_module(levels.at(i), ring));
  std::vector<Matrix> ds;
  if (ls.size() > 1) {
    Node d = node.at("differentials");
    if (d.size() + 1 != ls.size()) d.error("expected " + std::to_string(ls.size() - 1) + " differentials");
    for (std::size_t k = 0; k + 1 < ls.size(); ++k)
      ds.push_back(parse_matrix(d.at(k), ring, ls[k].generators(), ls[k + 1].generators()));
  }
  if (ls.empty()) return Complex::zero(terminal_site(), ring);
  return in_context(node, [&] { return Complex::of_modules(ring, lo, ls, ds); });
}

}  // namespace

CoefficientFunctor parse_coefficients(const Node& node, const SitePtr& site, std::optional<Ring> ring) {
  require_keys(node, {"ring", "p", "values", "maps"});
  std::optional<Ring> declared = parse_ring_tag(node);
  Ring r = ring ? *ring : declared ? *declared : Ring::integers();
  const FinCategory& cat = site->category();
  CoefficientFunctor g{site, r, std::vector<Complex>(cat.object_count(), Complex::zero(terminal_site(), r)), {}};
  Node vals = node.at("values");
  for (const auto& [name, _] : vals.object()) {
    Node v = vals.at(name);
    if (!cat.has_object(name)) v.error("unknown object '" + name + "'");
    g.values[site->object(name)] = parse_module_complex(v, r);
  }
  std::vector<std::optional<ComplexMorphism>> maps(cat.morphism_count());
  if (auto ms = node.find("maps")) {
    for (const auto& [name, _] : ms->object()) {
      Node m = ms->at(name);
      require_keys(m, {"lo", "components"});
      MorphismId f = in_context(m, [&] { return cat.morphism_id(name); });
      const Complex& s = g.values[cat.morphism(f).source];
      const Complex& t = g.values[cat.morphism(f).target];
      int lo = static_cast<int>(m.at("lo").integer());
      Node comps = m.at("components");
      std::vector<PresheafMap> cs;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        int n = lo + static_cast<int>(i);
        cs.push_back(PresheafMap{{parse_matrix(comps.at(i), r, t.level(n).generators(0), s.level(n).generators(0))}});
      }
      maps[f] = in_context(m, [&] {
        ComplexMorphism cm(s, t, lo, cs);
        cm.require_chain_map();
        return cm;
      });
    }
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const Morphism& mor = cat.morphism(f);
    if (maps[f]) {
      g.maps.push_back(*maps[f]);
    } else if (cat.is_identity(f)) {
      g.maps.push_back(ComplexMorphism::identity(g.values[mor.source]));
    } else if (g.values[mor.source].is_zero() || g.values[mor.target].is_zero()) {
      g.maps.push_back(ComplexMorphism::zero(g.values[mor.source], g.values[mor.target]));
    } else {
      node.at("maps").error("missing map for morphism '" + mor.name + "'");
    }
  }
  in_context(node, [&] {
    g.require_functorial();
    return 0;
  });
  return g;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Ring::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SiteSpec& spec) {
  Json out;
  out["objects"] = spec.objects;
  out["morphisms"] = Json::array();
  for (const auto& m : spec.morphisms) out["morphisms"].push_back({{"id", m.name}, {"src", m.source}, {"dst", m.target}});
  out["compose"] = Json::array();
  for (const auto& row : spec.compose) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e ? Json(*e) : Json(nullptr));
    out["compose"].push_back(std::move(r));
  }
  out["covers"] = Json::object();
  for (const auto& [obj, families] : spec.covers) out["covers"][obj] = families;
  if (spec.points) {
    out["points"] = Json::array();
    for (const auto& p : *spec.points) out["points"].push_back({{"name", p.name}, {"neighborhoods", p.neighborhoods}});
  }
  return out;
}

Json to_json(const FpModule& m) {
  Json out = {{"generators", m.generators()}};
  if (m.relations().cols() > 0) out["relations"] = to_json(m.relations());
  return out;
}

Json to_json(const ModPresheaf& p) {
  const FinCategory& cat = p.site()->category();
  Json values = Json::object(), maps = Json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c)
    if (p.generators(c) > 0) values[cat.object_name(c)] = to_json(p.value(c));
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const Morphism& m = cat.morphism(f);
    if (cat.is_identity(f) || p.generators(m.source) == 0 || p.generators(m.target) == 0) continue;
    maps[m.name] = to_json(p.map(f));
  }
  return {{"values", values}, {"maps", maps}};
}

namespace {

Json ring_fields(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::integers:
      return {{"ring", "Z"}};
    case RingKind::rationals:
      return {{"ring", "Q"}};
    case RingKind::prime_field:
      return {{"ring", "Fp"}, {"p", ring.characteristic().get_ui()}};
  }
  return {};
}

}  // namespace

Json to_json(const Complex& k) {
  Json out = ring_fields(k.ring());
  out["lo"] = k.empty_window() ? 0 : k.lo();
  out["levels"] = Json::array();
  out["differentials"] = Json::array();
  if (k.empty_window()) return out;
  for (int n = k.lo(); n <= k.hi(); ++n) out["levels"].push_back(to_json(k.level(n)));
  for (int n = k.lo() + 1; n <= k.hi(); ++n) {
    Json d = Json::object();
    PresheafMap m = k.differential(n);
    for (ObjectId c = 0; c < k.site()->object_count(); ++c)
      if (!m.components[c].empty()) d[k.site()->object_name(c)] = to_json(m.components[c]);
    out["differentials"].push_back(std::move(d));
  }
  return out;
}

std::string module_label(const Ring& ring, const ModuleInvariants& inv) {
  std::string sym = ring.kind() == RingKind::integers    ? "Z"
                    : ring.kind() == RingKind::rationals ? "Q"
                                                         : "F" + ring.characteristic().get_str();
  std::vector<std::string> parts;
  if (inv.free_rank == 1) parts.push_back(sym);
  if (inv.free_rank > 1) parts.push_back(sym + "^" + std::to_string(inv.free_rank));
  for (const auto& t : inv.torsion) parts.push_back(sym + "/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string module_label(const FpModule& m) { return module_label(m.ring(), m.invariants()); }

namespace {

bool is_integer_key(const std::string& s) {
  std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> ordered_keys(const Json& obj) {
  std::vector<std::string> keys;
  for (const auto& [k, _] : obj.items()) keys.push_back(k);
  if (std::all_of(keys.begin(), keys.end(), is_integer_key))
    std::stable_sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
      return std::stol(a) < std::stol(b);
    });
  return keys;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
    return out.empty() ? "-" : out;
  }
  return v.dump();
}

bool is_scalar(const Json& v) {
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
  return !v.is_object();
}

// {row: {column: scalar}} with at least one row.
bool is_table(const Json& v) {
  if (!v.is_object() || v.empty()) return false;
  for (const auto& [_, row] : v.items()) {
    if (!row.is_object() || row.empty()) return false;
    for (const auto& [__, cell] : row.items())
      if (!is_scalar(cell)) return false;
  }
  return true;
}

std::size_t text_width(const std::string& s) {
  std::size_t len = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++len;
  return len;
}

std::string pad(const std::string& s, std::size_t width) {
  std::size_t len = text_width(s);
  return s + std::string(width > len ? width - len : 0, ' ');
}

void render_table(const Json& table, const std::string& indent, std::ostringstream& out) {
  std::vector<std::string> rows = ordered_keys(table);
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto& r : rows)
    for (const auto& c : ordered_keys(table[r]))
      if (seen.insert(c).second) cols.push_back(c);
  if (std::all_of(cols.begin(), cols.end(), is_integer_key))
    std::stable_sort(cols.begin(), cols.end(), [](const std::string& a, const std::string& b) {
      return std::stol(a) < std::stol(b);
    });
  std::vector<std::vector<std::string>> grid;
  grid.push_back({""});
  for (const auto& c : cols) grid.back().push_back(c);
  for (const auto& r : rows) {
    std::vector<std::string> line{r};
    for (const auto& c : cols) line.push_back(table[r].contains(c) ? scalar_text(table[r][c]) : "-");
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cols.size() + 1, 0);
  for (const auto& line : grid)
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], text_width(line[j]));
  for (const auto& line : grid) {
    std::string text = indent;
    for (std::size_t j = 0; j < line.size(); ++j) text += pad(line[j], width[j] + (j + 1 < line.size() ? 2 : 0));
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
}

void render(const Json& v, const std::string& indent, std::ostringstream& out) {
  std::vector<std::string> keys = ordered_keys(v);
  std::size_t width = 0;
  for (const auto& k : keys)
    if (is_scalar(v[k])) width = std::max(width, text_width(k));
  for (const auto& k : keys) {
    const Json& e = v[k];
    if (is_scalar(e)) {
      out << indent << pad(k, width) << "  " << scalar_text(e) << "\n";
    } else if (is_table(e)) {
      out << indent << k << ":\n";
      render_table(e, indent + "  ", out);
    } else if (e.is_object()) {
      out << indent << k << ":\n";
      render(e, indent + "  ", out);
    } else {
      out << indent << k << ":\n";
      Json indexed = Json::object();
      for (std::size_t i = 0; i < e.size(); ++i) indexed[std::to_string(i)] = e[i];
      if (is_table(indexed))
        render_table(indexed, indent + "  ", out);
      else
        render(indexed, indent + "  ", out);
    }
  }
}

}  // namespace

std::string emit(const Json& report, Format format) {
  if (format == Format::json) return report.dump(2, ' ', false) + "\n";
  std::ostringstream out;
  if (report.is_object()) render(report, "", out);
  else out << scalar_text(report) << "\n";
  return out.str();
}

}  // namespace sitecx::io
