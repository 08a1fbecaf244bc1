#include "doctest.h"

#include "sitecx/complex/homology.hpp"
#include "sitecx/error.hpp"
#include "sitecx/godement/hypercohomology.hpp"
#include "sitecx/hypercover/descent.hpp"
#include "sitecx/site/site.hpp"
#include "support/presheaves.hpp"

using namespace sitecx;
using testing_support::Rng;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);

Complex constant(const SitePtr& site, const FpModule& m) { return Complex::concentrated(ModPresheaf::constant(site, m), 0); }

// Čech cohomology of the constant sheaf on the cover {Ux, Uy} of the pseudocircle:
// Λ² → Λ², (s, t) ↦ (t − s on a, t − s on b).
std::vector<FpModule> cech_oracle(const Ring& ring) {
  Matrix d(2, 2);
  d(0, 0) = ring.normalize(Scalar(-1));
  d(0, 1) = 1;
  d(1, 0) = ring.normalize(Scalar(-1));
  d(1, 1) = 1;
  FpModule two = FpModule::free(ring, 2);
  Complex c = Complex::of_modules(ring, -1, {two, two}, {d});
  return {homology_module(c, 0), homology_module(c, -1), FpModule(ring, 0)};
}

}  // namespace

TEST_CASE("point products") {
  auto term = terminal_site();
  Complex k = constant(term, FpModule::cyclic_sum(Z, {Scalar(3)}));
  PointComplex t = point_pullback_pushforward(k);
  CHECK(modules_isomorphic(t.complex.level(0).value(0), k.level(0).value(0)));
  CHECK(is_quasi_iso(t.unit).all());

  auto site = pseudocircle_site();
  Complex z = constant(site, FpModule::free(Z, 1));
  PointComplex tz = point_pullback_pushforward(z);
  ObjectId x = site->object("X");
  CHECK(tz.complex.level(0).value(x).invariants().free_rank == 4);
  for (ObjectId c = 0; c < site->object_count(); ++c)
    CHECK(is_injective(z.level(0).value(c), tz.complex.level(0).value(c), tz.unit.component(0).components[c]));

  PointComplex ta = point_pullback_pushforward(constant(arrow_site(), FpModule::free(Z, 1)));
  for (ObjectId c = 0; c < 2; ++c)
    CHECK(is_injective(ta.unit.source.level(0).value(c), ta.complex.level(0).value(c), ta.unit.component(0).components[c]));
}

TEST_CASE("godement cosimplicial") {
  auto term = terminal_site();
  Complex k = constant(term, FpModule::free(Z, 2));
  CosimplicialComplex g = godement_cosimplicial(k, 2);
  g.require_valid();
  for (const auto& l : g.levels) CHECK(l.level(0).generators(0) == 2);
  for (const auto& row : g.cofaces)
    for (const auto& d : row) CHECK(morphisms_equal(d, ComplexMorphism::identity(d.source)));

  auto site = pseudocircle_site();
  Complex z = constant(site, FpModule::free(Z, 1));
  CosimplicialComplex g0 = godement_cosimplicial(z, 0);
  PointComplex t = point_pullback_pushforward(z);
  for (ObjectId c = 0; c < site->object_count(); ++c)
    CHECK(g0.levels[0].level(0).generators(c) == t.complex.level(0).generators(c));

  godement_cosimplicial(z, 3).require_valid();
  Rng rng(5);
  for (int i = 0; i < 3; ++i) {
    Complex r = testing_support::random_presheaf_complex(rng, site, Z, 0, 2);
    godement_cosimplicial(r, 2).require_valid();
  }
}

TEST_CASE("godement resolution") {
  auto term = terminal_site();
  Complex k = Complex::of_modules(Z, 0, {FpModule::free(Z, 1), FpModule::free(Z, 1)}, {Matrix::identity(1)});
  GodementResolution gk = godement_resolution(k, 2);
  for (int n = gk.total.valid_lo; n <= 2; ++n)
    CHECK(homology_module(gk.total.complex, n).invariants() == homology_module(k, n).invariants());

  CHECK(godement_resolution(Complex::zero(term, Z), 2).total.complex.is_zero());

  auto site = pseudocircle_site();
  ObjectId x = site->object("X");
  Complex z = constant(site, FpModule::free(Z, 1));
  GodementResolution g = godement_resolution(z, 3);
  CHECK(g.total.valid_lo == -2);
  auto oracle = cech_oracle(Z);
  CHECK(modules_isomorphic(homology_module(g.total.complex, 0, x), oracle[0]));
  CHECK(modules_isomorphic(homology_module(g.total.complex, -1, x), oracle[1]));
  CHECK(modules_isomorphic(homology_module(g.total.complex, -2, x), oracle[2]));
  CHECK_THROWS_AS(g.total.require_valid(-3, "degree"), Error);
}

TEST_CASE("hypercohomology") {
  auto site = pseudocircle_site();
  ObjectId x = site->object("X");
  for (const Ring& ring : {Z, F2}) {
    Complex k = constant(site, FpModule::free(ring, 1));
    auto oracle = cech_oracle(ring);
    for (int n = 0; n <= 2; ++n) {
      auto g = hypercohomology(x, k, n, HypercohomologyMethod::godement);
      auto c = hypercohomology(x, k, n, HypercohomologyMethod::cech_colimit);
      CHECK(c.stabilized);
      CHECK(c.stages.size() == 2);
      CHECK(modules_isomorphic(g.module, oracle[static_cast<std::size_t>(n)]));
      CHECK(modules_isomorphic(c.module, oracle[static_cast<std::size_t>(n)]));
    }
  }
  // Agreement on random complexes at every object.
  Rng rng(77);
  for (int t = 0; t < 3; ++t) {
    Complex k = testing_support::random_presheaf_complex(rng, site, Z, 0, 2);
    auto g = hypercohomology_table(k, -1, 1, HypercohomologyMethod::godement);
    auto h = hypercohomology_table(k, -1, 1, HypercohomologyMethod::cech_colimit);
    for (ObjectId c = 0; c < site->object_count(); ++c)
      for (std::size_t i = 0; i < 3; ++i)
        if (h.entries[c][i].stabilized) CHECK(modules_isomorphic(g.entries[c][i].module, h.entries[c][i].module));
  }
  auto term = terminal_site();
  Complex k = Complex::of_modules(Z, -1, {FpModule::cyclic_sum(Z, {Scalar(2)}), FpModule::free(Z, 1)}, {Matrix(1, 1)});
  for (int n = -1; n <= 1; ++n)
    for (auto m : {HypercohomologyMethod::godement, HypercohomologyMethod::cech_colimit})
      CHECK(modules_isomorphic(hypercohomology(0, k, n, m).module, homology_module(k, -n)));
}

TEST_CASE("fibrant replacement") {
  auto site = pseudocircle_site();
  ObjectId x = site->object("X");
  Complex z = constant(site, FpModule::free(Z, 1));
  Hypercover nerve = cech_nerve(site, x, {site->category().hom(site->object("Ux"), x).front(),
                                          site->category().hom(site->object("Uy"), x).front()}, 3);
  Hypercover refined = refined_nerve(site, x, {site->object("Ux"), site->object("Uy")},
                                     {{{0, 1}, {site->object("a"), site->object("b")}}}, 3);
  FibrantReport r = verify_fibrant_replacement(z, {nerve, refined}, 3);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);

  CHECK(verify_fibrant_replacement(Complex::zero(site, Z), {nerve}, 3).passed());

  Complex z2 = constant(site, FpModule::cyclic_sum(Z, {Scalar(2)}));
  PresheafMap p;
  for (ObjectId c = 0; c < site->object_count(); ++c) p.components.push_back(Matrix::identity(1));
  ComplexMorphism f(z, z2, 0, {p});
  FibrantReport rs = verify_fibrant_replacement(z, {nerve}, 3, f);
  CHECK(rs.checks[2].passed);

  // The constant presheaf itself fails on the refined nerve.
  CHECK_FALSE(descent_check(z, refined).holds());
}
