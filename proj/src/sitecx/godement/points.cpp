#include "sitecx/godement/points.hpp"

#include "sitecx/error.hpp"
#include "sitecx/exactalg/linsys.hpp"

namespace sitecx {

PointProduct point_product(const ModPresheaf& f) {
  const Site& site = *f.site();
  const FinCategory& cat = site.category();
  require(site.has_points(), ErrorCode::missing_points, "site '" + site.name() + "' has no points");
  PointProduct t;
  t.source = f;
  for (const auto& p : site.points()) t.stalks.push_back(stalk(f, p));
  std::vector<FpModule> values;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    t.points.push_back(site.points_of(c));
    std::vector<FpModule> parts;
    std::vector<std::size_t> offs;
    std::size_t total = 0;
    for (std::size_t p : t.points.back()) {
      offs.push_back(total);
      parts.push_back(t.stalks[p].module);
      total += parts.back().generators();
    }
    t.offsets.push_back(offs);
    values.push_back(parts.empty() ? FpModule(f.ring(), 0) : direct_sum(parts));
  }
  std::vector<Matrix> maps;
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    ObjectId d = cat.morphism(g).source, c = cat.morphism(g).target;
    Matrix m(values[d].generators(), values[c].generators());
    for (std::size_t k = 0; k < t.points[d].size(); ++k) {
      std::size_t p = t.points[d][k];
      auto it = std::find(t.points[c].begin(), t.points[c].end(), p);
      require(it != t.points[c].end(), ErrorCode::invalid_site,
              "point '" + site.points()[p].name + "' of a source does not lie in the target");
      std::size_t kc = static_cast<std::size_t>(it - t.points[c].begin());
      paste(m, Matrix::identity(t.stalks[p].module.generators()), t.offsets[d][k], t.offsets[c][kc]);
    }
    maps.push_back(m);
  }
  t.value = ModPresheaf(f.site(), f.ring(), values, maps);
  return t;
}

PresheafMap point_unit(const PointProduct& t) {
  const FinCategory& cat = t.source.site()->category();
  PresheafMap eta;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    Matrix m(t.value.generators(c), t.source.generators(c));
    for (std::size_t k = 0; k < t.points[c].size(); ++k)
      paste(m, *t.stalks[t.points[c][k]].germs[c], t.offsets[c][k], 0);
    eta.components.push_back(m);
  }
  return eta;
}

PresheafMap point_map(const PointProduct& tf, const PointProduct& tg, const PresheafMap& phi) {
  const Site& site = *tf.source.site();
  const FinCategory& cat = site.category();
  std::vector<Matrix> at_point;
  for (std::size_t p = 0; p < site.points().size(); ++p)
    at_point.push_back(stalk_map(tf.source, tf.stalks[p], tg.stalks[p], phi, site.points()[p]));
  PresheafMap out;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    Matrix m(tg.value.generators(c), tf.value.generators(c));
    for (std::size_t k = 0; k < tf.points[c].size(); ++k)
      paste(m, at_point[tf.points[c][k]], tg.offsets[c][k], tf.offsets[c][k]);
    out.components.push_back(m);
  }
  return out;
}

PresheafMap point_multiplication(const PointProduct& t, const PointProduct& tt) {
  const Site& site = *t.source.site();
  const FinCategory& cat = site.category();
  const Ring& ring = t.source.ring();
  // μ_p : (TF)_p → F_p is the map induced by the projections TF(U) → F_p.
  std::vector<Matrix> at_point;
  for (std::size_t p = 0; p < site.points().size(); ++p) {
    const FpModule& fp = t.stalks[p].module;
    const FpModule& tfp = tt.stalks[p].module;
    LinearSystem sys(ring);
    std::size_t x = sys.add_block(fp.generators(), tfp.generators());
    for (ObjectId u : site.points()[p].neighborhoods) {
      const auto& pts = t.points[u];
      std::size_t k = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), p) - pts.begin());
      Matrix proj(fp.generators(), t.value.generators(u));
      paste(proj, Matrix::identity(fp.generators()), 0, t.offsets[u][k]);
      sys.add_equation({LinearSystem::Term{Matrix::identity(fp.generators()), x, *tt.stalks[p].germs[u]}}, proj,
                       fp.relations());
    }
    sys.add_equation({LinearSystem::Term{Matrix::identity(fp.generators()), x, tfp.relations()}},
                     Matrix(fp.generators(), tfp.relations().cols()), fp.relations());
    auto sol = sys.solve();
    require(sol.has_value(), ErrorCode::internal, "no multiplication map at point '" + site.points()[p].name + "'");
    at_point.push_back((*sol)[x]);
  }
  PresheafMap out;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    Matrix m(t.value.generators(c), tt.value.generators(c));
    for (std::size_t k = 0; k < t.points[c].size(); ++k)
      paste(m, at_point[t.points[c][k]], t.offsets[c][k], tt.offsets[c][k]);
    out.components.push_back(m);
  }
  return out;
}

PointComplex point_pullback_pushforward(const Complex& k) {
  PointComplex out;
  if (k.empty_window()) {
    out.complex = k;
    out.unit = ComplexMorphism::identity(k);
    return out;
  }
  std::vector<PointProduct> ts;
  for (int n = k.lo(); n <= k.hi(); ++n) ts.push_back(point_product(k.level(n)));
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs, unit;
  for (int n = k.lo(); n <= k.hi(); ++n) {
    std::size_t i = static_cast<std::size_t>(n - k.lo());
    levels.push_back(ts[i].value);
    unit.push_back(point_unit(ts[i]));
    if (n > k.lo()) diffs.push_back(point_map(ts[i], ts[i - 1], k.differential(n)));
  }
  out.complex = Complex(k.site(), k.ring(), k.lo(), levels, diffs);
  out.unit = ComplexMorphism(k, out.complex, k.lo(), unit);
  out.unit.require_chain_map();
  return out;
}

}  // namespace sitecx
