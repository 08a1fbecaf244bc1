#include "sitecx/io/reports.hpp"

#include <climits>

#include "sitecx/check/suites.hpp"
#include "sitecx/complex/homology.hpp"
#include "sitecx/complex/sheafification.hpp"
#include "sitecx/godement/godement.hpp"
#include "sitecx/hypercover/descent.hpp"
#include "sitecx/resolve/replace.hpp"

namespace sitecx::io {

namespace {

std::string bound(int n) {
  if (n == INT_MIN) return "-inf";
  if (n == INT_MAX) return "inf";
  return std::to_string(n);
}

Json window_json(int lo, int hi) { return {{"lo", bound(lo)}, {"hi", bound(hi)}}; }

Json objectwise(const SitePtr& site, const ModPresheaf& p) {
  Json out = Json::object();
  for (ObjectId c = 0; c < site->object_count(); ++c) out[site->object_name(c)] = module_label(p.value(c));
  return out;
}

Json levels_json(const Complex& k) {
  Json out = Json::object();
  if (k.empty_window()) return out;
  for (int n = k.lo(); n <= k.hi(); ++n) out[std::to_string(n)] = objectwise(k.site(), k.level(n));
  return out;
}

Json homology_json(const Complex& k, int lo, int hi) {
  Json out = Json::object();
  for (int n = lo; n <= hi; ++n) out[std::to_string(n)] = objectwise(k.site(), homology(k, n).presheaf);
  return out;
}

Json verdicts_json(const Verdicts& v) {
  Json out = Json::object();
  for (const auto& d : v.degrees) out[std::to_string(d.degree)] = d.holds;
  return out;
}

}  // namespace

Outcome site_report(const SiteSpec& spec, const std::string& name) {
  Outcome o;
  SiteReport check = validate_site(spec);
  o.passed = check.valid;
  o.report["valid"] = check.valid;
  o.report["violations"] = check.violations;
  if (!check.valid) return o;
  SitePtr site = Site::create(spec, name);
  const FinCategory& cat = site->category();
  o.report["objects"] = spec.objects;
  o.report["morphisms"] = std::to_string(cat.morphism_count());
  o.report["poset"] = cat.is_poset();
  Json sieves = Json::object(), minimal = Json::object();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    sieves[site->object_name(c)] = std::to_string(site->covering_sieves(c).size());
    Json names = Json::array();
    for (MorphismId f : site->minimal_cover(c)) names.push_back(cat.morphism(f).name);
    minimal[site->object_name(c)] = names;
  }
  o.report["covering_sieves"] = sieves;
  o.report["minimal_cover"] = minimal;
  Json points = Json::object();
  for (const auto& p : site->points()) {
    Json nbhd = Json::array();
    for (ObjectId c : p.neighborhoods) nbhd.push_back(site->object_name(c));
    points[p.name] = nbhd;
  }
  o.report["points"] = points;
  return o;
}

Outcome homology_report(const Complex& k, std::optional<Range> window) {
  Outcome o;
  Range w = window ? *window : Range{k.lo(), k.hi()};
  o.report["ring"] = k.ring().tag();
  o.report["window"] = window_json(w.lo, w.hi);
  o.report["homology"] = homology_json(k, w.lo, w.hi);
  return o;
}

Outcome sheafify_report(const Complex& k) {
  Outcome o;
  SheafifiedComplex s = sheafify_complex(k);
  Verdicts v = is_local_equivalence(s.unit, k.lo(), k.hi());
  o.passed = v.all();
  o.report["ring"] = k.ring().tag();
  o.report["sheafified"] = levels_json(s.complex);
  o.report["homology_sheaves"] = homology_json(s.complex, k.lo(), k.hi());
  o.report["unit_local_equivalence"] = verdicts_json(v);
  return o;
}

Outcome descent_report(const Complex& k, const Hypercover& x) {
  Outcome o;
  DescentReport r = descent_check(k, x);
  o.passed = r.holds();
  o.report["ring"] = k.ring().tag();
  o.report["hypercover"] = {{"base", x.site()->object_name(x.base)}, {"truncation", std::to_string(x.truncation())}};
  o.report["window"] = window_json(r.valid_lo, r.valid_hi);
  Json degrees = Json::object();
  for (const auto& d : r.degrees)
    degrees[std::to_string(d.degree)] = {{"holds", d.holds},
                                         {"sections", module_label(k.ring(), d.source)},
                                         {"descent", module_label(k.ring(), d.target)}};
  o.report["degrees"] = degrees;
  Json obstructions = Json::array();
  for (int n : r.obstructions()) obstructions.push_back(std::to_string(n));
  o.report["obstructions"] = obstructions;
  o.report["holds"] = r.holds();
  return o;
}

Outcome cofrep_report(const Complex& k, int depth, Strategy strategy) {
  Outcome o;
  CofibrantReplacement q = cofibrant_replace(k, depth, strategy);
  const Complex& qk = q.total.complex;
  auto [ulo, uhi] = union_window(q.augmentation);
  int lo = std::max(q.total.valid_lo, ulo), hi = std::min(q.total.valid_hi, uhi);
  bool surjective = ulo > uhi || is_degreewise_surjective(q.augmentation, ulo, uhi);
  Verdicts qiso = lo > hi ? Verdicts{} : is_quasi_iso(q.augmentation, lo, hi);
  CofibrationCertificate cert = certify_cofibration(ComplexMorphism::zero(Complex::zero(k.site(), k.ring()), qk));
  o.passed = surjective && qiso.all() && cert.certified;
  o.report["ring"] = k.ring().tag();
  o.report["strategy"] = to_string(strategy);
  o.report["depth"] = std::to_string(depth);
  o.report["window"] = window_json(q.total.valid_lo, q.total.valid_hi);
  Json levels = Json::object();
  for (std::size_t i = 0; i < q.levels.size(); ++i) {
    Json names = Json::array();
    for (ObjectId c : q.levels[i].objects) names.push_back(k.site()->object_name(c));
    levels[std::to_string(qk.lo() + static_cast<int>(i))] = names;
  }
  o.report["summands"] = levels;
  o.report["augmentation"] = {{"degreewise_surjective", surjective}, {"quasi_iso", verdicts_json(qiso)}};
  o.report["homology"] = homology_json(qk, lo, hi);
  Json c = {{"certified", cert.certified}, {"patterns", cert.patterns}};
  if (!cert.certified) c["refusal"] = cert.refusal;
  o.report["certificate"] = c;
  return o;
}

Outcome godement_report(const Complex& k, int levels) {
  Outcome o;
  GodementResolution g = godement_resolution(k, levels);
  const Complex& gk = g.total.complex;
  auto [ulo, uhi] = union_window(g.unit);
  int lo = std::max(g.total.valid_lo, ulo), hi = std::min(g.total.valid_hi, uhi);
  Verdicts v = lo > hi ? Verdicts{} : is_local_equivalence(g.unit, lo, hi);
  o.passed = v.all();
  o.report["ring"] = k.ring().tag();
  o.report["levels"] = std::to_string(levels);
  o.report["window"] = window_json(g.total.valid_lo, g.total.valid_hi);
  o.report["total"] = levels_json(gk);
  o.report["homology"] = homology_json(gk, lo, hi);
  o.report["unit_local_equivalence"] = verdicts_json(v);
  return o;
}

Outcome hypercoh_report(const Complex& k, std::optional<ObjectId> object, Range range,
                        const std::vector<HypercohomologyMethod>& methods, std::optional<int> depth) {
  Outcome o;
  const SitePtr& site = k.site();
  o.report["ring"] = k.ring().tag();
  o.report["range"] = window_json(range.lo, range.hi);
  Json per_method = Json::object();
  std::vector<HypercohomologyTable> tables;
  for (auto m : methods) {
    HypercohomologyTable t = hypercohomology_table(k, range.lo, range.hi, m, depth);
    Json table = Json::object(), notes = Json::object();
    bool stabilized = true;
    for (ObjectId c = 0; c < site->object_count(); ++c) {
      if (object && c != *object) continue;
      Json row = Json::object();
      for (int n = range.lo; n <= range.hi; ++n) {
        const HypercohomologyResult& r = t.entries[c][static_cast<std::size_t>(n - range.lo)];
        row[std::to_string(n)] = module_label(r.module);
        stabilized = stabilized && r.stabilized;
        if (!r.stabilized) notes[site->object_name(c) + "/" + std::to_string(n)] = r.note;
      }
      table[site->object_name(c)] = row;
    }
    Json entry = {{"table", table}, {"stabilized", stabilized}};
    if (m == HypercohomologyMethod::cech_colimit) {
      entry["approximation"] = "colimit over hypercovers approximated by refinement-ordered Čech nerves";
      if (!notes.empty()) entry["notes"] = notes;
    }
    o.passed = o.passed && stabilized;
    per_method[to_string(m)] = entry;
    tables.push_back(std::move(t));
  }
  o.report["methods"] = per_method;
  if (tables.size() > 1) {
    bool agree = true;
    for (std::size_t c = 0; c < site->object_count(); ++c) {
      if (object && c != *object) continue;
      for (std::size_t i = 0; i < tables[0].entries[c].size(); ++i)
        for (std::size_t j = 1; j < tables.size(); ++j)
          agree = agree && modules_isomorphic(tables[0].entries[c][i].module, tables[j].entries[c][i].module);
    }
    o.report["agree"] = agree;
    o.passed = o.passed && agree;
  }
  return o;
}

Outcome kan_report(const CoefficientFunctor& gamma, const Complex& k) {
  Outcome o;
  Complex e = kan_extend(gamma, k);
  o.report["ring"] = gamma.ring.tag();
  Json levels = Json::object(), hom = Json::object();
  if (!e.empty_window())
    for (int n = e.lo(); n <= e.hi(); ++n) {
      levels[std::to_string(n)] = module_label(e.level(n).value(0));
      hom[std::to_string(n)] = module_label(homology_module(e, n));
    }
  o.report["levels"] = levels;
  o.report["homology"] = hom;
  return o;
}

Outcome check_report(std::uint64_t seed, const std::vector<std::string>& suites) {
  Outcome o;
  o.report["seed"] = std::to_string(seed);
  Json results = Json::object();
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, seed);
    results[name] = {{"passed", r.passed}, {"cases", std::to_string(r.cases)}, {"failures", r.failures}};
    o.passed = o.passed && r.passed;
  }
  o.report["suites"] = results;
  o.report["passed"] = o.passed;
  return o;
}

}  // namespace sitecx::io
