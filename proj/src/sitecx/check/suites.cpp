#include "sitecx/check/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "sitecx/check/generators.hpp"
#include "sitecx/complex/homology.hpp"
#include "sitecx/complex/sheafification.hpp"
#include "sitecx/error.hpp"
#include "sitecx/exactalg/smith.hpp"
#include "sitecx/godement/hypercohomology.hpp"
#include "sitecx/resolve/replace.hpp"
#include "sitecx/simplicial/dold_kan.hpp"
#include "sitecx/site/sheafify.hpp"

namespace sitecx {

namespace {

using Check = std::function<void(Generator&, SuiteResult&)>;

void expect(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    r.passed = false;
    r.failures.push_back("case " + std::to_string(r.cases) + ": " + what);
  }
}

bool divisibility_chain(const Ring& ring, const std::vector<Scalar>& d) {
  for (std::size_t i = 1; i < d.size(); ++i)
    if (!ring.divides(d[i - 1], d[i])) return false;
  return true;
}

void smith_suite(Generator& gen, SuiteResult& r) {
  Ring z = Ring::integers();
  for (int t = 0; t < 100; ++t) {
    auto rows = static_cast<std::size_t>(gen.uniform(1, 4)), cols = static_cast<std::size_t>(gen.uniform(1, 4));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(static_cast<long>(gen.uniform(-5, 5)));
    SmithForm s = smith_normal_form(z, m);
    Matrix d(rows, cols);
    for (std::size_t i = 0; i < s.rank(); ++i) d(i, i) = s.diagonal[i];
    bool ok = multiply(z, multiply(z, s.U, m), s.V) == d &&
              multiply(z, s.U, s.U_inverse) == Matrix::identity(rows) && divisibility_chain(z, s.diagonal);
    expect(r, ok, "U·M·V = D with unimodular U and a divisibility chain, M = " + m.to_string());
  }
}

void presentation_suite(Generator& gen, SuiteResult& r) {
  Ring z = Ring::integers();
  for (int t = 0; t < 40; ++t) {
    auto g = static_cast<std::size_t>(gen.uniform(1, 3)), k = static_cast<std::size_t>(gen.uniform(0, 3));
    FpModule m(z, g, gen.matrix(z, g, k));
    // One more generator and a relation expressing it through the others.
    Matrix rel = vstack(m.relations(), Matrix(1, m.relations().cols()));
    Matrix extra(g + 1, 1);
    for (std::size_t i = 0; i < g; ++i) extra(i, 0) = gen.scalar(z);
    extra(g, 0) = -1;
    FpModule m2(z, g + 1, hstack(rel, extra));
    expect(r, modules_isomorphic(m, m2) && modules_isomorphic(m2, m), "presentation change, " + m.to_string());
  }
}

void dold_kan_suite(Generator& gen, SuiteResult& r) {
  Ring z = Ring::integers();
  for (int t = 0; t < 10; ++t) {
    std::vector<FpModule> levels;
    std::vector<Matrix> diffs;
    std::size_t prev = 0;
    for (int n = 0; n < 3; ++n) {
      auto rank = static_cast<std::size_t>(gen.uniform(0, 2));
      levels.push_back(FpModule::free(z, rank));
      if (n > 0) diffs.push_back(Matrix(prev, rank));
      prev = rank;
    }
    // A single nonzero differential keeps d∘d = 0.
    if (!diffs.empty()) diffs[0] = gen.matrix(z, diffs[0].rows(), diffs[0].cols());
    Complex c = Complex::of_modules(z, 0, levels, diffs);
    Normalized n = normalize(gamma(c, 3));
    bool ok = true;
    for (int k = 0; k <= 3; ++k) {
      ok = ok && n.complex.level(k).generators(0) == c.level(k).generators(0);
      if (k > 0) ok = ok && n.complex.differential(k).components[0] == c.differential(k).components[0];
    }
    expect(r, ok, "N(Γ C) = C on presentations");
  }
}

void sheafify_suite(Generator& gen, SuiteResult& r) {
  SitePtr site = pseudocircle_site();
  Ring z = Ring::integers();
  for (int t = 0; t < 6; ++t) {
    ModPresheaf f = gen.presheaf(site, z);
    Sheafification a = sheafify(f);
    Sheafification aa = sheafify(a.sheaf);
    bool ok = is_sheaf(a.sheaf) && is_objectwise_iso(a.sheaf, aa.sheaf, aa.unit);
    expect(r, ok, "a(aF) ≅ aF through the unit");
  }
}

void local_equivalence_suite(Generator& gen, SuiteResult& r) {
  SitePtr site = pseudocircle_site();
  Ring z = Ring::integers();
  for (int t = 0; t < 4; ++t) {
    Complex k = gen.complex(site, z, 0, 2);
    SheafifiedComplex s = sheafify_complex(k);
    expect(r, is_local_equivalence(s.unit).all(), "K → a_τK is a local equivalence");
  }
}

void cofrep_suite(Generator& gen, SuiteResult& r) {
  SitePtr site = arrow_site();
  Ring f2 = Ring::prime_field(2);
  for (int t = 0; t < 5; ++t) {
    Complex k = gen.complex(site, f2, 0, 2);
    CofibrantReplacement q = cofibrant_replace(k, 4, Strategy::economical);
    const Complex& qk = q.total.complex;
    int lo = std::max(q.total.valid_lo, std::min(k.lo(), qk.lo()));
    int hi = std::min(q.total.valid_hi, std::max(k.hi(), qk.hi()));
    bool ok = is_degreewise_surjective(q.augmentation, std::min(k.lo(), qk.lo()), std::max(k.hi(), qk.hi())) &&
              (lo > hi || is_quasi_iso(q.augmentation, lo, hi).all());
    for (const auto& level : q.levels) ok = ok && level.regenerates();
    ok = ok && certify_cofibration(ComplexMorphism::zero(Complex::zero(site, f2), qk)).certified;
    expect(r, ok, "QK → K surjective, quasi-isomorphic on the window, levels semi-representable, QK cofibrant");
  }
}

void hypercohomology_suite(Generator& gen, SuiteResult& r) {
  SitePtr site = pseudocircle_site();
  Ring z = Ring::integers();
  for (int t = 0; t < 2; ++t) {
    Complex k = gen.complex(site, z, 0, 2);
    HypercohomologyTable a = hypercohomology_table(k, -1, 1, HypercohomologyMethod::godement);
    HypercohomologyTable b = hypercohomology_table(k, -1, 1, HypercohomologyMethod::cech_colimit);
    bool ok = true;
    for (std::size_t c = 0; c < a.entries.size(); ++c)
      for (std::size_t i = 0; i < a.entries[c].size(); ++i)
        ok = ok && b.entries[c][i].stabilized && modules_isomorphic(a.entries[c][i].module, b.entries[c][i].module);
    expect(r, ok, "Godement and Čech-colimit hypercohomology agree");
  }
}

void kan_suite(Generator& gen, SuiteResult& r) {
  SitePtr site = arrow_site();
  Ring z = Ring::integers();
  for (int t = 0; t < 6; ++t) {
    CoefficientFunctor g = gen.coefficients(site, z);
    for (ObjectId c = 0; c < site->object_count(); ++c) {
      Complex e = kan_extend(g, Complex::concentrated(ModPresheaf::representable(site, z, c), 0));
      bool ok = true;
      for (int n = -1; n <= 2; ++n)
        ok = ok && modules_isomorphic(e.level(n).value(0), g.values[c].level(n).value(0)) &&
             homology_module(e, n).invariants() == homology_module(g.values[c], n).invariants();
      expect(r, ok, "γ*(Λ(c)) ≅ γ(c) for c = " + site->object_name(c));
    }
  }
}

const std::map<std::string, Check>& suites() {
  static const std::map<std::string, Check> table = {
      {"smith", smith_suite},
      {"presentation", presentation_suite},
      {"dold-kan", dold_kan_suite},
      {"sheafify", sheafify_suite},
      {"local-equivalence", local_equivalence_suite},
      {"cofrep", cofrep_suite},
      {"hypercohomology", hypercohomology_suite},
      {"kan", kan_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"smith",  "presentation",    "dold-kan",        "sheafify",
                                                 "local-equivalence", "cofrep", "hypercohomology", "kan"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  auto it = suites().find(name);
  require(it != suites().end(), ErrorCode::invalid_input, "unknown suite '" + name + "'");
  const auto& names = suite_names();
  auto index = static_cast<std::uint32_t>(std::find(names.begin(), names.end(), name) - names.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), index};
  std::mt19937_64 engine(seq);
  Generator gen(engine);
  SuiteResult r;
  r.name = name;
  it->second(gen, r);
  return r;
}

}  // namespace sitecx
