#include "sitecx/complex/homology.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

HomologyPresheaf homology(const Complex& k, int n) {
  const ModPresheaf& mid = k.level(n);
  const ModPresheaf& below = k.level(n - 1);
  const ModPresheaf& above = k.level(n + 1);
  PresheafMap d_in = k.differential(n + 1), d_out = k.differential(n);
  HomologyPresheaf out;
  for (ObjectId c = 0; c < k.site()->object_count(); ++c)
    out.parts.push_back(homology_of_pair(above.value(c), mid.value(c), below.value(c), d_in.components[c],
                                         d_out.components[c]));
  out.presheaf = assemble(mid, out.parts);
  return out;
}

FpModule homology_module(const Complex& k, int n, ObjectId c) {
  PresheafMap d_in = k.differential(n + 1), d_out = k.differential(n);
  return homology_of_pair(k.level(n + 1).value(c), k.level(n).value(c), k.level(n - 1).value(c),
                          d_in.components[c], d_out.components[c])
      .module();
}

PresheafMap homology_map(const HomologyPresheaf& source, const HomologyPresheaf& target,
                         const PresheafMap& component) {
  return induced(source.parts, target.parts, component);
}

HomologySheaf homology_sheaf(const Complex& k, int n) {
  HomologySheaf out;
  out.homology = homology(k, n);
  out.sheaf = sheafify(out.homology.presheaf);
  return out;
}

bool Verdicts::all() const {
  for (const auto& d : degrees)
    if (!d.holds) return false;
  return true;
}

std::vector<int> Verdicts::failures() const {
  std::vector<int> out;
  for (const auto& d : degrees)
    if (!d.holds) out.push_back(d.degree);
  return out;
}

namespace {

std::string describe_failure(const SitePtr& site, const ModPresheaf& s, const ModPresheaf& t,
                             const PresheafMap& f) {
  std::string out;
  for (ObjectId c = 0; c < site->object_count(); ++c)
    if (!is_isomorphism(s.value(c), t.value(c), f.components[c])) {
      if (!out.empty()) out += "; ";
      out += site->object_name(c) + ": " + s.value(c).invariants().to_string() + " -> " +
             t.value(c).invariants().to_string();
    }
  return out;
}

}  // namespace

Verdicts is_quasi_iso(const ComplexMorphism& f) {
  auto [a, b] = union_window(f);
  return is_quasi_iso(f, a, b);
}

Verdicts is_quasi_iso(const ComplexMorphism& f, int lo, int hi) {
  Verdicts out;
  for (int n = lo; n <= hi; ++n) {
    HomologyPresheaf hs = homology(f.source, n), ht = homology(f.target, n);
    PresheafMap h = homology_map(hs, ht, f.component(n));
    DegreeVerdict v{n, is_objectwise_iso(hs.presheaf, ht.presheaf, h), ""};
    if (!v.holds) v.detail = describe_failure(f.source.site(), hs.presheaf, ht.presheaf, h);
    out.degrees.push_back(v);
  }
  return out;
}

Verdicts is_local_equivalence(const ComplexMorphism& f) {
  auto [a, b] = union_window(f);
  return is_local_equivalence(f, a, b);
}

Verdicts is_local_equivalence(const ComplexMorphism& f, int lo, int hi) {
  Verdicts out;
  for (int n = lo; n <= hi; ++n) {
    HomologySheaf hs = homology_sheaf(f.source, n), ht = homology_sheaf(f.target, n);
    PresheafMap h = homology_map(hs.homology, ht.homology, f.component(n));
    PresheafMap ah = sheafify_map(hs.homology.presheaf, hs.sheaf, ht.sheaf, h);
    DegreeVerdict v{n, is_objectwise_iso(hs.sheaf.sheaf, ht.sheaf.sheaf, ah), ""};
    if (!v.holds) v.detail = describe_failure(f.source.site(), hs.sheaf.sheaf, ht.sheaf.sheaf, ah);
    out.degrees.push_back(v);
  }
  return out;
}

SubPresheaf cycles(const Complex& k, int n) { return kernel(k.level(n), k.level(n - 1), k.differential(n)); }

}  // namespace sitecx
