#include "sitecx/complex/dghom.hpp"

#include "sitecx/site/site.hpp"

namespace sitecx {

namespace {

// Ambient layout and relations for the matrices F → G over all objects.
struct HomLayout {
  std::vector<std::size_t> offset;
  std::size_t size = 0;
};

HomLayout layout(const ModPresheaf& f, const ModPresheaf& g) {
  HomLayout l;
  for (ObjectId c = 0; c < f.site()->object_count(); ++c) {
    l.offset.push_back(l.size);
    l.size += g.generators(c) * f.generators(c);
  }
  return l;
}

// Ambient module and the condition map whose kernel is Hom(F, G).
std::pair<FpModule, std::pair<FpModule, Matrix>> conditions(const ModPresheaf& f, const ModPresheaf& g) {
  const Ring& ring = f.ring();
  const FinCategory& cat = f.site()->category();
  HomLayout l = layout(f, g);
  std::vector<Matrix> ambient_rel;
  std::vector<FpModule> targets;
  std::vector<Matrix> rows;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::size_t gf = f.generators(c), gg = g.generators(c);
    const Matrix& rg = g.value(c).relations();
    ambient_rel.push_back(kronecker(ring, Matrix::identity(gf), rg));
    const Matrix& rf = f.value(c).relations();
    if (rf.cols() > 0 && gg > 0) {
      Matrix row(gg * rf.cols(), l.size);
      paste(row, kronecker(ring, transpose(rf), Matrix::identity(gg)), 0, l.offset[c]);
      rows.push_back(row);
      targets.push_back(direct_sum(std::vector<FpModule>(rf.cols(), g.value(c))));
    }
  }
  for (MorphismId m = 0; m < cat.morphism_count(); ++m) {
    if (cat.is_identity(m)) continue;
    ObjectId c = cat.morphism(m).target, d = cat.morphism(m).source;
    std::size_t gfc = f.generators(c), ggd = g.generators(d);
    if (gfc == 0 || ggd == 0) continue;
    Matrix row(ggd * gfc, l.size);
    if (g.generators(c) > 0)
      paste(row, kronecker(ring, Matrix::identity(gfc), g.map(m)), 0, l.offset[c]);
    if (f.generators(d) > 0) {
      Matrix term = negate(ring, kronecker(ring, transpose(f.map(m)), Matrix::identity(ggd)));
      Matrix cur = col_range(row, l.offset[d], l.offset[d] + term.cols());
      paste(row, add(ring, cur, term), 0, l.offset[d]);
    }
    rows.push_back(row);
    targets.push_back(direct_sum(std::vector<FpModule>(gfc, g.value(d))));
  }
  std::size_t ambient_rel_cols = 0;
  for (const auto& r : ambient_rel) ambient_rel_cols += r.cols();
  Matrix rel(l.size, ambient_rel_cols);
  std::size_t rc = 0;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    paste(rel, ambient_rel[c], l.offset[c], rc);
    rc += ambient_rel[c].cols();
  }
  FpModule ambient(ring, l.size, rel);
  FpModule target = targets.empty() ? FpModule(ring, 0) : direct_sum(targets);
  Matrix map = rows.empty() ? Matrix(0, l.size) : vstack(rows, l.size);
  return {ambient, {target, map}};
}

}  // namespace

Subquotient hom_module(const ModPresheaf& f, const ModPresheaf& g) {
  auto [ambient, cond] = conditions(f, g);
  return kernel(ambient, cond.first, cond.second);
}

PresheafMap hom_element(const ModPresheaf& f, const ModPresheaf& g, const Matrix& v) {
  HomLayout l = layout(f, g);
  PresheafMap out;
  for (ObjectId c = 0; c < f.site()->object_count(); ++c) {
    std::size_t gf = f.generators(c), gg = g.generators(c);
    out.components.push_back(unvectorize(row_range(v, l.offset[c], l.offset[c] + gf * gg), gg, gf));
  }
  return out;
}

Complex dghom(const Complex& k, const Complex& kp) {
  const Ring& ring = k.ring();
  if (k.empty_window() || kp.empty_window()) return Complex::of_modules(ring, 0, {}, {});
  const FinCategory& cat = k.site()->category();
  int lo = kp.lo() - k.hi(), hi = kp.hi() - k.lo();

  // Degree n: ambient sum over p in [k.lo, k.hi] of Hom(K_p, K′_{p+n}).
  struct Degree {
    std::vector<std::size_t> offset;  // per p
    std::vector<HomLayout> layouts;
    Subquotient hom;
    std::size_t size = 0;
  };
  std::vector<Degree> degrees;
  for (int n = lo; n <= hi; ++n) {
    Degree deg;
    std::vector<FpModule> ambients, targets;
    std::vector<Matrix> maps;
    for (int p = k.lo(); p <= k.hi(); ++p) {
      deg.offset.push_back(deg.size);
      deg.layouts.push_back(layout(k.level(p), kp.level(p + n)));
      auto [ambient, cond] = conditions(k.level(p), kp.level(p + n));
      deg.size += ambient.generators();
      ambients.push_back(ambient);
      targets.push_back(cond.first);
      maps.push_back(cond.second);
    }
    FpModule ambient = direct_sum(ambients);
    deg.hom = kernel(ambient, direct_sum(targets), block_diagonal(maps));
    degrees.push_back(std::move(deg));
  }

  std::vector<FpModule> modules;
  for (const auto& deg : degrees) modules.push_back(deg.hom.module());
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const Degree& src = degrees[static_cast<std::size_t>(n - lo)];
    const Degree& dst = degrees[static_cast<std::size_t>(n - 1 - lo)];
    Matrix d(dst.size, src.size);
    Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);
    for (int p = k.lo(); p <= k.hi(); ++p) {
      std::size_t ip = static_cast<std::size_t>(p - k.lo());
      PresheafMap dprime = kp.differential(p + n);
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        std::size_t gk = k.level(p).generators(c);
        std::size_t row = dst.offset[ip] + dst.layouts[ip].offset[c];
        // d′ ∘ φ_p
        if (gk > 0 && kp.level(p + n).generators(c) > 0 && kp.level(p + n - 1).generators(c) > 0)
          paste(d, kronecker(ring, Matrix::identity(gk), dprime.components[c]), row,
                src.offset[ip] + src.layouts[ip].offset[c]);
        // −(−1)^n φ_{p−1} ∘ d_p
        if (p - 1 >= k.lo() && gk > 0) {
          std::size_t iq = ip - 1;
          std::size_t gk1 = k.level(p - 1).generators(c), gt = kp.level(p - 1 + n).generators(c);
          if (gk1 == 0 || gt == 0) continue;
          Matrix term = scale(ring, sign,
                              kronecker(ring, transpose(k.differential(p).components[c]), Matrix::identity(gt)));
          std::size_t col = src.offset[iq] + src.layouts[iq].offset[c];
          Matrix cur(term.rows(), term.cols());
          for (std::size_t i = 0; i < term.rows(); ++i)
            for (std::size_t j = 0; j < term.cols(); ++j) cur(i, j) = d(row + i, col + j);
          paste(d, add(ring, cur, term), row, col);
        }
      }
    }
    diffs.push_back(induced_map(src.hom, dst.hom, d));
  }
  return Complex::of_modules(ring, lo, modules, diffs);
}

}  // namespace sitecx
