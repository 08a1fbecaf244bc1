#include "sitecx/hypercover/descent.hpp"

#include "sitecx/complex/homology.hpp"
#include "sitecx/error.hpp"

namespace sitecx {

std::vector<std::vector<SummandLocation>> locate_summands(const Hypercover& x, int n) {
  const FinCategory& cat = x.site()->category();
  const SetPresheaf& level = x.simplicial().levels[static_cast<std::size_t>(n)];
  const auto& summands = x.summands[static_cast<std::size_t>(n)];
  std::vector<std::vector<SummandLocation>> out(cat.object_count());
  for (ObjectId d = 0; d < cat.object_count(); ++d)
    out[d].assign(level.size(d), {SIZE_MAX, 0});
  for (std::size_t t = 0; t < summands.size(); ++t)
    for (MorphismId g : cat.into(summands[t].object)) {
      ObjectId d = cat.morphism(g).source;
      out[d][level.restrict(g, summands[t].element)] = {t, g};
    }
  for (const auto& row : out)
    for (const auto& l : row) require(l.summand != SIZE_MAX, ErrorCode::internal, "hypercover element outside its summands");
  return out;
}

namespace {

// K_q(X_p) as the product of K_q at the summand objects.
ModPresheaf product_level(const Complex& k, const std::vector<RepresentableSummand>& summands, int q) {
  std::vector<FpModule> parts;
  for (const auto& s : summands) parts.push_back(k.level(q).value(s.object));
  FpModule m = parts.empty() ? FpModule(k.ring(), 0) : direct_sum(parts);
  return ModPresheaf::constant(terminal_site(), m);
}

std::vector<std::size_t> offsets(const Complex& k, const std::vector<RepresentableSummand>& summands, int q) {
  std::vector<std::size_t> out;
  std::size_t o = 0;
  for (const auto& s : summands) {
    out.push_back(o);
    o += k.level(q).generators(s.object);
  }
  out.push_back(o);
  return out;
}

// Coface K(X_{p−1}) → K(X_p) induced by a map X_p → X_{p−1} given on
// summand generators by locations in X_{p−1}.
Matrix coface_matrix(const Complex& k, int q, const std::vector<RepresentableSummand>& src,
                     const std::vector<RepresentableSummand>& dst, const std::vector<SummandLocation>& images) {
  auto so = offsets(k, src, q), to = offsets(k, dst, q);
  Matrix m(to.back(), so.back());
  for (std::size_t s = 0; s < dst.size(); ++s) {
    const SummandLocation& loc = images[s];
    Matrix block = k.level(q).map(loc.morphism);
    paste(m, block, to[s], so[loc.summand]);
  }
  return m;
}

}  // namespace

Bicomplex cosimplicial_bicomplex(const Complex& k, const Hypercover& x) {
  const Ring& ring = k.ring();
  int top = x.truncation();
  int qlo = k.lo(), qhi = k.hi();
  std::vector<std::vector<std::vector<SummandLocation>>> locs;
  for (int p = 0; p <= top; ++p) locs.push_back(locate_summands(x, p));

  // Column j holds cosimplicial level p = top − j, horizontal degree j − top.
  std::vector<Complex> columns;
  for (int j = 0; j <= top; ++j) {
    int p = top - j;
    const auto& sm = x.summands[static_cast<std::size_t>(p)];
    std::vector<ModPresheaf> levels;
    std::vector<PresheafMap> diffs;
    for (int q = qlo; q <= qhi; ++q) {
      levels.push_back(product_level(k, sm, q));
      if (q > qlo) {
        std::vector<Matrix> blocks;
        for (const auto& s : sm) blocks.push_back(k.differential(q).components[s.object]);
        Matrix d = blocks.empty() ? Matrix(0, 0) : block_diagonal(blocks);
        if (blocks.empty()) d = Matrix(levels[levels.size() - 2].generators(0), levels.back().generators(0));
        diffs.push_back(PresheafMap{{d}});
      }
    }
    columns.emplace_back(terminal_site(), ring, qlo, levels, diffs);
  }
  std::vector<std::vector<PresheafMap>> horizontal;
  for (int j = 1; j <= top; ++j) {
    int p = top - j;  // from level p to level p + 1
    const auto& src = x.summands[static_cast<std::size_t>(p)];
    const auto& dst = x.summands[static_cast<std::size_t>(p + 1)];
    const SimplicialSet& s = x.simplicial();
    std::vector<PresheafMap> row;
    for (int q = qlo; q <= qhi; ++q) {
      auto so = offsets(k, src, q), to = offsets(k, dst, q);
      Matrix sum(to.back(), so.back());
      for (int i = 0; i <= p + 1; ++i) {
        const auto& face = s.faces[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(i)];
        std::vector<SummandLocation> images;
        for (const auto& t : dst) images.push_back(locs[static_cast<std::size_t>(p)][t.object][face.components[t.object][t.element]]);
        Matrix c = coface_matrix(k, q, src, dst, images);
        sum = i % 2 == 0 ? add(ring, sum, c) : subtract(ring, sum, c);
      }
      row.push_back(PresheafMap{{sum}});
    }
    horizontal.push_back(row);
  }
  OpenEdges open;
  open.p_low = true;
  return Bicomplex::from_commuting(columns, -top, horizontal, qlo, qhi, open);
}

bool DescentReport::holds() const {
  for (const auto& d : degrees)
    if (!d.holds) return false;
  return true;
}

std::vector<int> DescentReport::obstructions() const {
  std::vector<int> out;
  for (const auto& d : degrees)
    if (!d.holds) out.push_back(d.degree);
  return out;
}

const DescentDegree& DescentReport::at(int n) const {
  require(n >= valid_lo && n <= valid_hi, ErrorCode::outside_validity,
          "descent degree " + std::to_string(n) + " outside the valid window " + window_string(valid_lo, valid_hi));
  for (const auto& d : degrees)
    if (d.degree == n) return d;
  fail(ErrorCode::internal, "descent degree missing from report");
}

DescentReport descent_check(const Complex& k, const Hypercover& x) {
  DescentReport r;
  const Ring& ring = k.ring();
  Complex kc = k.evaluate(x.base);
  if (k.empty_window()) {
    r.valid_lo = INT_MIN;
    r.valid_hi = INT_MAX;
    r.total.complex = Complex::zero(terminal_site(), ring);
    r.comparison = ComplexMorphism::zero(kc, r.total.complex);
    return r;
  }
  int top = x.truncation();
  Bicomplex b = cosimplicial_bicomplex(k, x);
  r.total = tot_prod(b);
  r.valid_lo = r.total.valid_lo;
  r.valid_hi = k.hi();

  // Augmentation coface into the p = 0 column, which comes last in each total degree.
  const FinCategory& cat = x.site()->category();
  const auto& s0 = x.summands[0];
  std::vector<PresheafMap> comps;
  for (int n = k.lo(); n <= k.hi(); ++n) {
    std::size_t before = 0;
    for (int p = -top; p < 0; ++p) before += b.level(p, n - p).generators(0);
    std::size_t rows = r.total.complex.level(n).generators(0);
    Matrix m(rows, kc.level(n).generators(0));
    std::size_t o = before;
    for (const auto& s : s0) {
      std::size_t h = x.augmented.augmentation.components[s.object][s.element];
      MorphismId g = cat.hom(s.object, x.base)[h];
      paste(m, k.level(n).map(g), o, 0);
      o += k.level(n).generators(s.object);
    }
    comps.push_back(PresheafMap{{m}});
  }
  r.comparison = ComplexMorphism(kc, r.total.complex, k.lo(), comps);
  r.comparison.require_chain_map();
  Verdicts v = is_quasi_iso(r.comparison, r.valid_lo, r.valid_hi);
  for (const auto& dv : v.degrees) {
    DescentDegree d;
    d.degree = dv.degree;
    d.holds = dv.holds;
    d.source = homology_module(kc, dv.degree).invariants();
    d.target = homology_module(r.total.complex, dv.degree).invariants();
    r.degrees.push_back(d);
  }
  return r;
}

}  // namespace sitecx
