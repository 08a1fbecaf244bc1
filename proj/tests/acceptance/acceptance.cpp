// Acceptance gate: one PASS/FAIL line per criterion, each with a 10 s budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "sitecx/check/generators.hpp"
#include "sitecx/complex/generators.hpp"
#include "sitecx/complex/homology.hpp"
#include "sitecx/complex/lifting.hpp"
#include "sitecx/complex/sheafification.hpp"
#include "sitecx/complex/truncate.hpp"
#include "sitecx/exactalg/smith.hpp"
#include "sitecx/godement/godement.hpp"
#include "sitecx/godement/hypercohomology.hpp"
#include "sitecx/hypercover/descent.hpp"
#include "sitecx/resolve/kan.hpp"
#include "sitecx/resolve/replace.hpp"
#include "sitecx/simplicial/dold_kan.hpp"
#include "sitecx/site/sheafify.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace sitecx;
using testing_support::Rng;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);

struct Verdict {
  bool passed = true;
  std::string detail;
};

// Accumulates the first few failure messages.
struct Tally {
  std::size_t cases = 0, failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Verdict verdict(const std::string& summary) const {
    if (failed == 0) return {true, summary};
    return {false, std::to_string(failed) + "/" + std::to_string(cases) + " failed; first: " + first};
  }
};

bool same(const FpModule& m, const oracle::Homology& h) {
  const ModuleInvariants& inv = m.invariants();
  if (inv.free_rank != h.free_rank || inv.torsion.size() != h.torsion.size()) return false;
  for (std::size_t i = 0; i < h.torsion.size(); ++i)
    if (inv.torsion[i] != Scalar(static_cast<long>(h.torsion[i]))) return false;
  return true;
}

Complex to_complex(const testing_support::RandomComplex& rc) {
  std::vector<FpModule> levels;
  for (auto r : rc.ranks) levels.push_back(FpModule::free(Z, r));
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k < rc.diffs.size(); ++k)
    diffs.push_back(normalized(Z, testing_support::to_matrix(rc.diffs[k], rc.ranks[k + 1])));
  return Complex::of_modules(Z, rc.lo, levels, diffs);
}

// ⊕ₖ Λ(c) → F sending the k-th generator to the section sₖ ∈ F(c).
PresheafMap yoneda(const ModPresheaf& f, ObjectId c, const std::vector<Matrix>& sections) {
  const FinCategory& cat = f.site()->category();
  PresheafMap m;
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    Matrix col(f.generators(d), 0);
    for (const auto& s : sections)
      for (MorphismId g : cat.hom(d, c)) col = hstack(col, multiply(f.ring(), f.map(g), s));
    m.components.push_back(col);
  }
  return m;
}

Matrix random_cycle(Generator& gen, const Complex& k, int n, ObjectId c) {
  SubPresheaf z = cycles(k, n);
  const Matrix& inc = z.parts[c].inclusion();
  Matrix v(k.level(n).generators(c), 1);
  for (std::size_t j = 0; j < inc.cols(); ++j) v = add(k.ring(), v, scale(k.ring(), gen.scalar(k.ring()), inc.column(j)));
  return v;
}

// Chain map out of a generator B = D^n, Δ^n (top section `top`) or S^{n−1},
// ∂Δ^n (cycle sections only), given by where its generators go in Y.
ComplexMorphism from_generator(const Complex& b, const Complex& y, ObjectId c, int n, std::optional<Matrix> top,
                               const std::vector<Matrix>& low) {
  std::vector<PresheafMap> comps;
  comps.push_back(yoneda(y.level(n - 1), c, low));
  if (top) comps.push_back(yoneda(y.level(n), c, {*top}));
  ComplexMorphism f(b, y, n - 1, comps);
  f.require_chain_map();
  return f;
}

Matrix boundary(const Complex& y, int n, ObjectId c, const Matrix& s) {
  return multiply(y.ring(), y.differential(n).components[c], s);
}

// Degree-n level of τ≥n K inside K_n, or none when the truncation is zero.
std::optional<std::vector<Subquotient>> truncation_parts(const Complex& k, int n) {
  if (k.empty_window() || n <= k.lo()) {
    std::vector<Subquotient> parts;
    const ModPresheaf& f = k.level(n);
    for (ObjectId c = 0; c < k.site()->object_count(); ++c)
      parts.emplace_back(k.ring(), f.generators(c), Matrix::identity(f.generators(c)), f.value(c).relations());
    return parts;
  }
  if (n > k.hi()) return std::nullopt;
  return cycles(k, n).parts;
}

// τ≥n(f) between the two good truncations.
ComplexMorphism truncated_map(const ComplexMorphism& f, int n) {
  Complex s = truncate(f.source, n).complex, t = truncate(f.target, n).complex;
  int hi = std::max({n, f.source.hi(), f.target.hi()});
  std::vector<PresheafMap> comps;
  auto ps = truncation_parts(f.source, n), pt = truncation_parts(f.target, n);
  comps.push_back(ps && pt ? induced(*ps, *pt, f.component(n)) : PresheafMap::zero(s.level(n), t.level(n)));
  for (int q = n + 1; q <= hi; ++q) comps.push_back(f.component(q));
  return ComplexMorphism(s, t, n, comps);
}

// --- criteria -------------------------------------------------------------

Verdict snf_oracle() {
  Rng rng(1001);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    auto rows = static_cast<std::size_t>(rng.uniform(1, 4)), cols = static_cast<std::size_t>(rng.uniform(1, 4));
    oracle::IntMatrix m = rng.int_matrix(rows, cols, -5, 5);
    std::vector<Scalar> lib = smith_normal_form(Z, testing_support::to_matrix(m, cols), false).diagonal;
    std::vector<std::int64_t> ref = oracle::invariant_factors(m);
    bool ok = lib.size() == ref.size();
    for (std::size_t k = 0; ok && k < ref.size(); ++k) ok = lib[k] == Scalar(static_cast<long>(ref[k]));
    t.check(ok, "matrix " + std::to_string(i));
  }
  return t.verdict("200 matrices, invariant factors equal");
}

Verdict dold_kan_suite() {
  Rng rng(2002);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    testing_support::RandomComplex rc = testing_support::random_complex(rng, 0, 5, 2);
    Complex c = to_complex(rc);
    SimplicialModule g = gamma(c, 4);
    Normalized n = normalize(g);
    bool identity = true;
    for (int k = 0; k <= 4; ++k) {
      identity = identity && n.complex.level(k).generators(0) == c.level(k).generators(0) &&
                 n.complex.level(k).value(0).relations().is_zero();
      if (k > 0) identity = identity && n.complex.differential(k).components[0] == c.differential(k).components[0];
    }
    t.check(identity, "N(ΓC) ≠ C for complex " + std::to_string(i));
    Complex mo = moore(g);
    for (int k = 0; k < 4; ++k)
      t.check(same(homology_module(mo, k), rc.expected[static_cast<std::size_t>(k)]),
              "π_" + std::to_string(k) + "(ΓC) ≠ H_" + std::to_string(k) + "(C) for complex " + std::to_string(i));
  }
  return t.verdict("50 complexes, N∘Γ = id and π_n(ΓC) matches the closed-form H_n for n < 4");
}

Verdict moore_vs_normalized() {
  std::mt19937_64 engine(3003);
  Generator gen(engine);
  SitePtr site = arrow_site();
  Tally t;
  for (int i = 0; i < 30; ++i) {
    SimplicialModule x = gamma(gen.complex(site, Z, 0, 3), 3);
    x = direct_sum(x, SimplicialModule::constant(gen.presheaf(site, Z), 3));
    x.require_valid();
    Normalized n = normalize(x);
    n.inclusion.require_chain_map();
    t.check(is_quasi_iso(n.inclusion, 0, 2).all(), "module " + std::to_string(i));
  }
  return t.verdict("30 simplicial module presheaves on the arrow site, N(X) → moore(X) quasi-iso below the top");
}

Verdict iprime_retracts() {
  Tally t;
  for (const SitePtr& site : {terminal_site(), arrow_site(), pseudocircle_site()})
    for (ObjectId c = 0; c < site->object_count(); ++c)
      for (int n : {-1, 0, 1, 2}) {
        RetractCheck r = verify_retract(iprime_retract(site, Z, n, c));
        t.check(r.rows_identity && r.commutes && r.chain_maps,
                site->name() + " " + site->object_name(c) + " n=" + std::to_string(n));
      }
  return t.verdict(std::to_string(t.cases) + " retracts (3 sites, n ∈ {−1,0,1,2}) with identity rows and commuting squares");
}

Verdict cofibrant_replacement() {
  std::mt19937_64 engine(5005);
  Generator gen(engine);
  SitePtr site = arrow_site();
  Tally t;
  for (int i = 0; i < 20; ++i) {
    Complex k = gen.complex(site, F2, -1, 3);
    CofibrantReplacement q = cofibrant_replace(k, 4, Strategy::economical);
    auto [lo, hi] = union_window(q.augmentation);
    int top = std::min(hi, q.total.valid_hi);
    bool ok = is_degreewise_surjective(q.augmentation, lo, top) && is_quasi_iso(q.augmentation, lo, top).all();
    for (const auto& level : q.levels) ok = ok && level.regenerates();
    CofibrationCertificate cert =
        certify_cofibration(ComplexMorphism::zero(Complex::zero(site, F2), q.total.complex));
    ok = ok && cert.certified &&
         std::find(cert.patterns.begin(), cert.patterns.end(), "tower") != cert.patterns.end();
    t.check(ok, "complex " + std::to_string(i) + (cert.certified ? "" : " refused: " + cert.refusal));
  }
  return t.verdict("20 random 𝔽₂ complexes: surjective, quasi-iso on the window, semi-representable, cofibrant");
}

Verdict lifting_suite() {
  std::mt19937_64 engine(6006);
  Generator gen(engine);
  Tally t;
  std::size_t lifts = 0, refusals = 0;
  for (const SitePtr& site : {arrow_site(), pseudocircle_site()}) {
    for (int trial = 0; trial < 2; ++trial) {
      // Trivial fibration Y ⊕ C → Y with C a sum of disks.
      Complex y = gen.complex(site, Z, 0, 2);
      Complex c = Complex::zero(site, Z);
      for (int j = 0; j < 2; ++j) {
        auto obj = static_cast<ObjectId>(gen.uniform(0, static_cast<std::int64_t>(site->object_count()) - 1));
        c = direct_sum(c, build_generator(site, Z, {GeneratorKind::D, static_cast<int>(gen.uniform(0, 2)), obj}));
      }
      Complex x = direct_sum(y, c);
      auto [lo, hi] = union_window(ComplexMorphism(x, y, 0, {}));
      std::vector<PresheafMap> proj;
      for (int q = lo; q <= hi; ++q) {
        PresheafMap m;
        for (ObjectId o = 0; o < site->object_count(); ++o)
          m.components.push_back(hstack(Matrix::identity(y.level(q).generators(o)),
                                        Matrix(y.level(q).generators(o), c.level(q).generators(o))));
        proj.push_back(m);
      }
      ComplexMorphism f(x, y, lo, proj);
      f.require_chain_map();
      t.check(is_degreewise_surjective(f, lo, hi) && is_quasi_iso(f, lo, hi).all(), "generated map is not a trivial fibration");
      for (ObjectId o = 0; o < site->object_count(); ++o)
        for (int n : {0, 1, 2}) {
          // I square: S^{n−1} → D^n.
          {
            ComplexMorphism i = generator_morphism(site, Z, GeneratorMorphismKind::I, n, o);
            Matrix s = gen.matrix(Z, y.level(n).generators(o), 1);
            ComplexMorphism v = from_generator(i.target, y, o, n, s, {boundary(y, n, o, s)});
            ComplexMorphism u = from_generator(i.source, x, o, n, std::nullopt,
                                               {vstack(boundary(y, n, o, s), random_cycle(gen, c, n - 1, o))});
            auto h = rlp_solve({i, f, u, v});
            t.check(h && morphisms_equal(compose(*h, i), u) && morphisms_equal(compose(f, *h), v),
                    "I square n=" + std::to_string(n) + " at " + site->object_name(o));
            ++lifts;
          }
          // I′ square: ∂Δ^n → Δ^n.
          {
            ComplexMorphism i = generator_morphism(site, Z, GeneratorMorphismKind::IPrime, n, o);
            Matrix e = gen.matrix(Z, y.level(n).generators(o), 1);
            Matrix a = random_cycle(gen, y, n - 1, o);
            Matrix b = subtract(Z, a, boundary(y, n, o, e));
            ComplexMorphism v = from_generator(i.target, y, o, n, e, {a, b});
            ComplexMorphism u = from_generator(i.source, x, o, n, std::nullopt,
                                               {vstack(a, random_cycle(gen, c, n - 1, o)),
                                                vstack(b, random_cycle(gen, c, n - 1, o))});
            auto h = rlp_solve({i, f, u, v});
            t.check(h && morphisms_equal(compose(*h, i), u) && morphisms_equal(compose(f, *h), v),
                    "I′ square n=" + std::to_string(n) + " at " + site->object_name(o));
            ++lifts;
          }
        }
      // Non-surjective maps: ×2 on Y over ℤ and the inclusion Y → Y ⊕ C.
      std::vector<ComplexMorphism> maps;
      {
        std::vector<PresheafMap> twice, inc;
        for (int q = lo; q <= hi; ++q) {
          PresheafMap a, b;
          for (ObjectId o = 0; o < site->object_count(); ++o) {
            std::size_t g = y.level(q).generators(o);
            a.components.push_back(scale(Z, Scalar(2), Matrix::identity(g)));
            b.components.push_back(vstack(Matrix::identity(g), Matrix(c.level(q).generators(o), g)));
          }
          twice.push_back(a);
          inc.push_back(b);
        }
        maps.emplace_back(y, y, lo, twice);
        maps.emplace_back(y, x, lo, inc);
      }
      for (const auto& g : maps) {
        g.require_chain_map();
        auto [glo, ghi] = union_window(g);
        if (is_degreewise_surjective(g, glo, ghi)) continue;
        bool refused = false;
        for (int n = glo; n <= ghi && !refused; ++n)
          for (ObjectId o = 0; o < site->object_count() && !refused; ++o) {
            const Complex& tgt = g.target;
            for (std::size_t k = 0; k < tgt.level(n).generators(o) && !refused; ++k) {
              ComplexMorphism j = generator_morphism(site, Z, GeneratorMorphismKind::J, n, o);
              Matrix s = Matrix::identity(tgt.level(n).generators(o)).column(k);
              std::vector<Matrix> low{boundary(tgt, n, o, s)};
              ComplexMorphism v = from_generator(j.target, tgt, o, n, s, low);
              refused = !rlp_solve({j, g, ComplexMorphism::zero(j.source, g.source), v}).has_value();
            }
          }
        t.check(refused, "non-surjective map on " + site->name() + " lifts against every J square");
        ++refusals;
      }
    }
  }
  return t.verdict(std::to_string(lifts) + " I/I′ lifts found, " + std::to_string(refusals) +
                   " non-surjective maps each fail a J square");
}

Verdict hypercover_acyclicity() {
  SitePtr site = pseudocircle_site();
  const FinCategory& cat = site->category();
  Hypercover h = cech_nerve(site, site->object("X"), {cat.morphism_id("Ux->X"), cat.morphism_id("Uy->X")}, 4);
  Tally t;
  t.check(verify_hypercover(h.augmented, 4).holds, "Čech nerve is not a hypercover");
  Verdicts v = check_acyclicity(h, Z);
  t.check(v.degrees.size() == 4 && v.all(), "check_acyclicity fails");
  HypercoverChain ch = chain_of_hypercover(h, Z);
  HomologySheaf h0 = homology_sheaf(ch.complex, 0);
  Sheafification lam = sheafify(ModPresheaf::representable(site, Z, site->object("X")));
  for (ObjectId c = 0; c < site->object_count(); ++c)
    t.check(modules_isomorphic(h0.sheaf.sheaf.value(c), lam.sheaf.value(c)), "a_τH_0 at " + site->object_name(c));
  for (int n = 1; n <= 3; ++n)
    t.check(homology_sheaf(ch.complex, n).sheaf.sheaf.is_zero(), "a_τH_" + std::to_string(n) + " ≠ 0");
  return t.verdict("N = 4: a_τH₀Λ(c_•) ≅ a_τΛ(X), a_τH_n = 0 for n = 1,2,3");
}

Verdict descent_fibrancy() {
  SitePtr site = pseudocircle_site();
  Hypercover r = refined_nerve(site, site->object("X"), {site->object("Ux"), site->object("Uy")},
                               {{{0, 1}, {site->object("a"), site->object("b")}}}, 4);
  Complex k = Complex::concentrated(ModPresheaf::constant(site, FpModule::free(Z, 1)), 0);
  Tally t;
  DescentReport d = descent_check(k, r);
  t.check(d.obstructions() == std::vector<int>{-1}, "obstructions are not exactly {−1}");
  t.check(d.at(-1).target == ModuleInvariants{1, {}} && d.at(-1).source.is_zero(), "obstruction at −1 is not ℤ");
  GodementResolution g = godement_resolution(k, 3);
  DescentReport dg = descent_check(g.total.complex, r);
  int lo = std::max(dg.valid_lo, g.total.valid_lo), hi = std::min(dg.valid_hi, g.total.valid_hi);
  for (const auto& deg : dg.degrees)
    if (deg.degree >= lo && deg.degree <= hi) t.check(deg.holds, "god K fails descent at " + std::to_string(deg.degree));
  t.check(lo <= -1 && hi >= 0, "valid window of god K misses degrees −1..0");
  return t.verdict("S⁰ℤ obstruction ℤ at −1 on the refined nerve; god(S⁰ℤ) descends on [" + std::to_string(lo) + "," +
                   std::to_string(hi) + "]");
}

// Čech complex of the cover {Ux, Uy}: Λ² → Λ², one row per point of Ux ∩ Uy.
std::vector<oracle::Homology> cech_reference(std::int64_t p) {
  oracle::IntMatrix d = {{-1, 1}, {-1, 1}};
  oracle::IntMatrix none_in(2, std::vector<std::int64_t>{}), none_out;
  return {oracle::free_homology(none_in, d, p, 2), oracle::free_homology(d, none_out, p, 2), {}};
}

Verdict hypercohomology_cross_check() {
  SitePtr site = pseudocircle_site();
  ObjectId x = site->object("X");
  Tally t;
  for (auto [ring, p] : {std::pair{Z, std::int64_t{0}}, std::pair{F2, std::int64_t{2}}}) {
    Complex k = Complex::concentrated(ModPresheaf::constant(site, FpModule::free(ring, 1)), 0);
    auto ref = cech_reference(p);
    for (auto m : {HypercohomologyMethod::godement, HypercohomologyMethod::cech_colimit}) {
      HypercohomologyTable table = hypercohomology_table(k, 0, 2, m);
      for (int n = 0; n <= 2; ++n) {
        const HypercohomologyResult& r = table.entries[x][static_cast<std::size_t>(n)];
        t.check(r.stabilized && same(r.module, ref[static_cast<std::size_t>(n)]),
                std::string(to_string(m)) + " " + ring.tag() + " ℍ^" + std::to_string(n));
      }
    }
  }
  return t.verdict("ℍ⁰ = ℍ¹ = ℤ, ℍ² = 0 and ℍ⁰ = ℍ¹ = 𝔽₂ by both methods");
}

Verdict local_equivalence_suite() {
  std::mt19937_64 engine(10010);
  Generator gen(engine);
  SitePtr site = pseudocircle_site();
  Tally t;
  for (int i = 0; i < 20; ++i) {
    Complex k = gen.complex(site, Z, 0, 2);
    SheafifiedComplex s = sheafify_complex(k);
    s.unit.require_chain_map();
    t.check(is_local_equivalence(s.unit).all(), "complex " + std::to_string(i));
  }
  return t.verdict("20 random complexes on the pseudocircle: K → a_τK is a local equivalence");
}

SitePtr parallel_site() {
  SiteSpec spec;
  spec.objects = {"a", "b", "c"};
  spec.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"f", "a", "b"},
                    {"g", "a", "b"},    {"h", "b", "c"},    {"hf", "a", "c"},   {"hg", "a", "c"}};
  using S = std::optional<std::string>;
  std::vector<std::vector<S>> table(8, std::vector<S>(8));
  auto set = [&](int g, int f, const char* r) { table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = S(r); };
  const char* names[] = {"id_a", "id_b", "id_c", "f", "g", "h", "hf", "hg"};
  const int src[] = {0, 1, 2, 0, 0, 1, 0, 0}, dst[] = {0, 1, 2, 1, 1, 2, 2, 2};
  for (int m = 0; m < 8; ++m) {
    set(dst[m], m, names[m]);
    set(m, src[m], names[m]);
  }
  set(5, 3, "hf");
  set(5, 4, "hg");
  spec.compose = table;
  spec.covers["a"] = {{"id_a"}};
  spec.covers["b"] = {{"id_b"}};
  spec.covers["c"] = {{"id_c"}};
  return Site::create(spec, "parallel");
}

Verdict kan_extension() {
  std::mt19937_64 engine(11011);
  Generator gen(engine);
  Tally t;
  for (const SitePtr& site : {arrow_site(), parallel_site()})
    for (int i = 0; i < 5; ++i) {
      CoefficientFunctor g = gen.coefficients(site, Z);
      for (ObjectId c = 0; c < site->object_count(); ++c) {
        Complex e = kan_extend(g, Complex::concentrated(ModPresheaf::representable(site, Z, c), 0));
        bool ok = true;
        for (int n = -1; n <= 2; ++n)
          ok = ok && modules_isomorphic(e.level(n).value(0), g.values[c].level(n).value(0)) &&
               homology_module(e, n).invariants() == homology_module(g.values[c], n).invariants();
        t.check(ok, site->name() + " functor " + std::to_string(i) + " at " + site->object_name(c));
      }
    }
  return t.verdict("10 random functors on 2- and 3-object categories, γ*(S⁰Λ(c)) ≅ γ(c) at every c");
}

Verdict truncation_instances() {
  std::mt19937_64 engine(12012);
  Generator gen(engine);
  SitePtr site = pseudocircle_site();
  Tally t;
  std::size_t equivalences = 0;
  for (int i = 0; i < 10; ++i) {
    Complex k = gen.complex(site, Z, 0, 2);
    ComplexMorphism f;
    switch (i % 5) {
      case 0:
        f = sheafify_complex(k).unit;
        break;
      case 1:
      case 2: {
        int m = static_cast<int>(gen.uniform(0, 1));
        Complex extra = Complex::concentrated(gen.presheaf(site, Z), m);
        Complex sum = direct_sum(k, extra);
        auto [lo, hi] = union_window(ComplexMorphism(k, sum, 0, {}));
        std::vector<PresheafMap> comps;
        for (int q = lo; q <= hi; ++q) {
          PresheafMap p;
          for (ObjectId o = 0; o < site->object_count(); ++o) {
            std::size_t a = k.level(q).generators(o), b = extra.level(q).generators(o);
            p.components.push_back(i % 5 == 1 ? vstack(Matrix::identity(a), Matrix(b, a))
                                              : hstack(Matrix::identity(a), Matrix(a, b)));
          }
          comps.push_back(p);
        }
        f = i % 5 == 1 ? ComplexMorphism(k, sum, lo, comps) : ComplexMorphism(sum, k, lo, comps);
        break;
      }
      case 3: {
        std::vector<PresheafMap> comps;
        for (int q = k.lo(); q <= k.hi(); ++q) {
          PresheafMap p;
          for (ObjectId o = 0; o < site->object_count(); ++o)
            p.components.push_back(scale(Z, Scalar(2), Matrix::identity(k.level(q).generators(o))));
          comps.push_back(p);
        }
        f = ComplexMorphism(k, k, k.lo(), comps);
        break;
      }
      default:
        f = ComplexMorphism::zero(k, k);
    }
    f.require_chain_map();
    auto [lo, hi] = union_window(f);
    Verdicts whole = is_local_equivalence(f, lo, hi);
    if (whole.all()) ++equivalences;
    bool family = true;
    for (int n = lo; n <= hi; ++n) {
      ComplexMorphism fn = truncated_map(f, n);
      fn.require_chain_map();
      bool truncated = is_local_equivalence(fn, n, hi).all();
      bool expected = true;
      for (const auto& d : whole.degrees)
        if (d.degree >= n) expected = expected && d.holds;
      t.check(truncated == expected, "morphism " + std::to_string(i) + " at n=" + std::to_string(n));
      family = family && truncated;
    }
    t.check(family == whole.all(), "morphism " + std::to_string(i) + " overall verdict");
  }
  return t.verdict("10 morphisms (" + std::to_string(equivalences) +
                   " local equivalences): windowed verdicts match the truncated family");
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SITECX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Verdict cli_end_to_end() {
  const std::string fx = SITECX_FIXTURE_DIR;
  Tally t;
  std::string golden = "hypercoh --site " + fx + "/s1.json --complex " + fx + "/zcst.json --object X --range 0..2";
  Run a = run_cli(golden), b = run_cli(golden);
  t.check(a.status == 0 && b.status == 0, "hypercoh exit codes " + std::to_string(a.status) + ", " + std::to_string(b.status));
  t.check(!a.out.empty() && a.out == b.out, "hypercoh output differs between runs");
  // The table must match the library's own values from criterion 9.
  SitePtr site = pseudocircle_site();
  Complex k = Complex::concentrated(ModPresheaf::constant(site, FpModule::free(Z, 1)), 0);
  try {
    auto doc = nlohmann::json::parse(a.out);
    for (const char* m : {"godement", "cech-colimit"})
      for (int n = 0; n <= 2; ++n) {
        std::string label = doc["methods"][m]["table"]["X"][std::to_string(n)].get<std::string>();
        const FpModule lib = hypercohomology(site->object("X"), k, n,
                                             std::string(m) == "godement" ? HypercohomologyMethod::godement
                                                                          : HypercohomologyMethod::cech_colimit)
                                 .module;
        const char* expected[] = {"Z", "Z", "0"};
        bool lib_matches = (n < 2 ? lib.invariants() == ModuleInvariants{1, {}} : lib.is_zero());
        t.check(label == expected[n] && lib_matches, std::string(m) + " ℍ^" + std::to_string(n) + " = " + label);
      }
    t.check(doc["agree"].get<bool>(), "methods disagree");
  } catch (const std::exception& e) {
    t.check(false, std::string("unparseable hypercoh output: ") + e.what());
  }
  Run f2 = run_cli(golden + " --ring Fp --p 2");
  t.check(f2.status == 0 && f2.out.find("\"F2\"") != std::string::npos, "hypercoh over F2");
  Run v = run_cli("site-validate --site " + fx + "/terminal.json");
  t.check(v.status == 0, "site-validate terminal exit " + std::to_string(v.status));
  Run d = run_cli("descent --site " + fx + "/s1.json --complex " + fx + "/zcst.json --hypercover " + fx +
                  "/refined_nerve.json");
  bool obstruction = false;
  try {
    obstruction = nlohmann::json::parse(d.out)["obstructions"] == nlohmann::json::array({"-1"});
  } catch (const std::exception&) {
  }
  t.check(d.status == 1 && obstruction, "descent exit " + std::to_string(d.status));
  Run bad = run_cli("homology --site " + fx + "/s1.json --complex " + fx + "/s1.json");
  t.check(bad.status == 2, "schema violation exit " + std::to_string(bad.status));
  Run missing = run_cli("homology --site " + fx + "/s1.json --complex " + fx + "/does-not-exist.json");
  t.check(missing.status == 2, "missing file exit " + std::to_string(missing.status));
  return t.verdict("golden hypercoh run byte-identical (ℤ, ℤ, 0); exit codes 0/1/2 as specified");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "SNF oracle equivalence", snf_oracle},
      {2, "Dold-Kan suite", dold_kan_suite},
      {3, "Moore vs normalized", moore_vs_normalized},
      {4, "I′ retract", iprime_retracts},
      {5, "cofibrant replacement", cofibrant_replacement},
      {6, "lifting suite", lifting_suite},
      {7, "hypercover acyclicity", hypercover_acyclicity},
      {8, "descent and fibrancy", descent_fibrancy},
      {9, "hypercohomology cross-check", hypercohomology_cross_check},
      {10, "local-equivalence suite", local_equivalence_suite},
      {11, "Kan extension", kan_extension},
      {12, "truncation instances", truncation_instances},
      {13, "CLI end-to-end", cli_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      v.passed = false;
      v.detail += " [over the 10 s budget]";
    }
    if (!v.passed) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.passed ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << "  " << c.name << ": "
              << v.detail << " (" << timing << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
