#include "doctest.h"

#include "sitecx/error.hpp"
#include "sitecx/site/sheafify.hpp"
#include "sitecx/site/stalk.hpp"

using namespace sitecx;

namespace {

std::size_t rank_at(const ModPresheaf& p, const std::string& obj) {
  return p.value(p.site()->object(obj)).invariants().free_rank;
}

}  // namespace

TEST_CASE("site validation") {
  auto t = terminal_site();
  CHECK(validate_site(t->spec()).valid);
  auto pc = pseudocircle_site(true);
  CHECK(validate_site(pc->spec()).valid);
  CHECK(pc->object_count() == 7);

  SiteSpec broken = t->spec();
  broken.covers.clear();
  SiteReport r = validate_site(broken);
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("'*'") != std::string::npos);
  CHECK_THROWS_AS(Site::create(broken), Error);

  SiteSpec bad_assoc = arrow_site()->spec();
  bad_assoc.compose[1][2] = std::nullopt;
  CHECK_FALSE(validate_site(bad_assoc).valid);
}

TEST_CASE("pullback stability violations are reported") {
  // v covered by the empty family, but u → v pulls back to an empty sieve on
  // u, which contains no declared cover of u.
  SiteSpec spec = arrow_site()->spec();
  spec.covers["v"].push_back({});
  SiteReport r = validate_site(spec);
  CHECK_FALSE(r.valid);
  CHECK(r.violations.front().rfind("stability", 0) == 0);
}

TEST_CASE("topology of the pseudocircle") {
  auto pc = pseudocircle_site();
  ObjectId x = pc->object("X");
  // The minimal covering sieve of X consists of all proper opens.
  CHECK(pc->minimal_cover(x).size() == 5);
  ObjectId ux = pc->object("Ux");
  CHECK(pc->minimal_cover(ux).size() == 4);
  CHECK(pc->points().size() == 4);
  CHECK(pc->points_of(x).size() == 4);
  CHECK(pc->points_of(pc->object("ab")).size() == 2);
}

TEST_CASE("sheafification") {
  Ring z = Ring::integers();
  auto t = terminal_site();
  ModPresheaf f = ModPresheaf::constant(t, FpModule::cyclic_sum(z, {Scalar(3)}));
  Sheafification s = sheafify(f);
  CHECK(modules_isomorphic(s.sheaf.value(0), f.value(0)));
  CHECK(is_isomorphism(f.value(0), s.sheaf.value(0), s.unit.components[0]));

  auto pc = pseudocircle_site();
  ModPresheaf cst = ModPresheaf::constant(pc, FpModule::free(z, 1));
  Sheafification a = sheafify(cst);
  CHECK(rank_at(a.sheaf, "ab") == 2);
  CHECK(rank_at(a.sheaf, "X") == 1);
  CHECK(rank_at(a.sheaf, "Ux") == 1);
  CHECK(is_sheaf(a.sheaf));
  CHECK_FALSE(is_sheaf(cst));
  Sheafification aa = sheafify(a.sheaf);
  CHECK(is_objectwise_iso(a.sheaf, aa.sheaf, aa.unit));

  auto pce = pseudocircle_site(true);
  ModPresheaf cste = ModPresheaf::constant(pce, FpModule::free(z, 1));
  Sheafification ae = sheafify(cste);
  CHECK(ae.sheaf.value(pce->object("empty")).is_zero());
  CHECK(rank_at(ae.sheaf, "ab") == 2);
}

TEST_CASE("generalized covers") {
  auto pc = pseudocircle_site();
  ObjectId x = pc->object("X"), ux = pc->object("Ux"), uy = pc->object("Uy");
  SetPresheaf yx = SetPresheaf::representable(pc, x);
  SetPresheafMap id{yx, yx, {}};
  for (ObjectId c = 0; c < pc->object_count(); ++c) {
    std::vector<std::size_t> comp(yx.size(c));
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    id.components.push_back(comp);
  }
  id.require_natural();
  CHECK(is_generalized_cover(id));

  // Ux ⊔ Uy → X: a section over d lands in the image iff d ⊆ Ux or d ⊆ Uy.
  SetPresheaf a = SetPresheaf::representable(pc, ux);
  SetPresheaf b = SetPresheaf::representable(pc, uy);
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> restr(pc->category().morphism_count());
  for (ObjectId c = 0; c < pc->object_count(); ++c) sizes.push_back(a.size(c) + b.size(c));
  for (MorphismId f = 0; f < restr.size(); ++f) {
    for (std::size_t v : a.restriction(f)) restr[f].push_back(v);
    ObjectId s = pc->category().morphism(f).source;
    for (std::size_t v : b.restriction(f)) restr[f].push_back(a.size(s) + v);
  }
  SetPresheaf sum(pc, sizes, restr);
  sum.require_functorial();
  SetPresheafMap cover{sum, yx, {}};
  for (ObjectId c = 0; c < pc->object_count(); ++c) cover.components.push_back(std::vector<std::size_t>(sizes[c], 0));
  cover.require_natural();
  CHECK(is_generalized_cover(cover));
  auto decomposition = representable_decomposition(sum);
  REQUIRE(decomposition.has_value());
  CHECK(decomposition->size() == 2);

  SetPresheaf empty = SetPresheaf::empty(pc);
  SetPresheafMap none{empty, yx, std::vector<std::vector<std::size_t>>(pc->object_count())};
  CHECK_FALSE(is_generalized_cover(none));
}

TEST_CASE("stalks") {
  Ring z = Ring::integers();
  auto t = terminal_site();
  ModPresheaf f = ModPresheaf::constant(t, FpModule::free(z, 2));
  REQUIRE(t->points().size() == 1);
  CHECK(stalk(f, t->points()[0]).module.generators() == 2);

  auto pc = pseudocircle_site();
  Sheafification a = sheafify(ModPresheaf::constant(pc, FpModule::free(z, 1)));
  for (const auto& p : pc->points()) CHECK(stalk(a.sheaf, p).module.invariants().free_rank == 1);

  // Value Λ² on ab, Λ on a and b; the stalk at a is the value on {a}.
  Point pa = pc->point("a");
  CHECK(*pa.minimal == pc->object("a"));
  CHECK(stalk(a.sheaf, pa).module.invariants().free_rank == 1);

  // Without a minimal neighborhood the general colimit agrees.
  Point general = pa;
  general.minimal.reset();
  Stalk s = stalk(a.sheaf, general);
  CHECK(s.module.invariants().free_rank == 1);
  CHECK(stalk_size(SetPresheaf::representable(pc, pc->object("X")), general) == 1);
}
