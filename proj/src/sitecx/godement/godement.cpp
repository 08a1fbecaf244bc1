#include "sitecx/godement/godement.hpp"

#include <algorithm>

#include "sitecx/error.hpp"

namespace sitecx {

namespace {

GodementTower build_tower(const ModPresheaf& f, int q_max) {
  GodementTower t;
  t.iterates.push_back(f);
  for (int j = 0; j <= q_max + 1; ++j) {
    t.products.push_back(point_product(t.iterates.back()));
    t.iterates.push_back(t.products.back().value);
  }
  return t;
}

// Tⁱ(g) for g : iterates_a of `src` → iterates_b of `dst`.
PresheafMap iterate(const GodementTower& src, std::size_t a, const GodementTower& dst, std::size_t b, PresheafMap g,
                    int times) {
  for (int i = 0; i < times; ++i) g = point_map(src.products[a + static_cast<std::size_t>(i)],
                                                dst.products[b + static_cast<std::size_t>(i)], g);
  return g;
}

// d^i : G^{q−1} → G^q at one degree.
PresheafMap coface(const GodementTower& t, int q, int i) {
  std::size_t j = static_cast<std::size_t>(q - i);
  return iterate(t, j, t, j + 1, point_unit(t.products[j]), i);
}

// s^i : G^{q+1} → G^q at one degree.
PresheafMap codegeneracy(const GodementTower& t, int q, int i) {
  std::size_t j = static_cast<std::size_t>(q - i);
  return iterate(t, j + 2, t, j + 1, point_multiplication(t.products[j], t.products[j + 1]), i);
}

struct Levels {
  std::vector<GodementTower> towers;
  int lo = 0, hi = -1;
};

Levels towers_of(const Complex& k, int q_max) {
  Levels l;
  if (k.empty_window()) return l;
  l.lo = k.lo();
  l.hi = k.hi();
  for (int m = k.lo(); m <= k.hi(); ++m) l.towers.push_back(build_tower(k.level(m), q_max));
  return l;
}

Complex level_complex(const Complex& k, const Levels& l, int q) {
  if (l.towers.empty()) return Complex::zero(k.site(), k.ring());
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs;
  std::size_t j = static_cast<std::size_t>(q + 1);
  for (int m = l.lo; m <= l.hi; ++m) {
    std::size_t i = static_cast<std::size_t>(m - l.lo);
    levels.push_back(l.towers[i].iterates[j]);
    if (m > l.lo) diffs.push_back(iterate(l.towers[i], 0, l.towers[i - 1], 0, k.differential(m), q + 1));
  }
  return Complex(k.site(), k.ring(), l.lo, levels, diffs);
}

template <class F>
ComplexMorphism degreewise(const Complex& s, const Complex& t, const Levels& l, F&& at) {
  if (l.towers.empty()) return ComplexMorphism::zero(s, t);
  std::vector<PresheafMap> comps;
  for (int m = l.lo; m <= l.hi; ++m) comps.push_back(at(l.towers[static_cast<std::size_t>(m - l.lo)]));
  return ComplexMorphism(s, t, l.lo, comps);
}

CosimplicialComplex assemble(const Complex& k, const Levels& l, int q_max) {
  CosimplicialComplex g;
  g.q_max = q_max;
  for (int q = 0; q <= q_max; ++q) g.levels.push_back(level_complex(k, l, q));
  g.cofaces.resize(static_cast<std::size_t>(q_max) + 1);
  g.codegeneracies.resize(static_cast<std::size_t>(q_max) + 1);
  for (int q = 1; q <= q_max; ++q)
    for (int i = 0; i <= q; ++i)
      g.cofaces[static_cast<std::size_t>(q)].push_back(
          degreewise(g.levels[static_cast<std::size_t>(q - 1)], g.levels[static_cast<std::size_t>(q)], l,
                     [&](const GodementTower& t) { return coface(t, q, i); }));
  for (int q = 0; q < q_max; ++q)
    for (int i = 0; i <= q; ++i)
      g.codegeneracies[static_cast<std::size_t>(q)].push_back(
          degreewise(g.levels[static_cast<std::size_t>(q + 1)], g.levels[static_cast<std::size_t>(q)], l,
                     [&](const GodementTower& t) { return codegeneracy(t, q, i); }));
  g.coaugmentation = degreewise(k, g.levels[0], l, [](const GodementTower& t) { return point_unit(t.products[0]); });
  return g;
}

bool same(const ComplexMorphism& a, const ComplexMorphism& b) { return morphisms_equal(a, b); }

}  // namespace

void CosimplicialComplex::require_valid() const {
  auto fail = [](const std::string& what, int q) {
    throw Error(ErrorCode::invalid_input, "cosimplicial identity " + what + " fails at level " + std::to_string(q));
  };
  auto d = [&](int q, int i) -> const ComplexMorphism& { return cofaces[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)]; };
  auto s = [&](int q, int i) -> const ComplexMorphism& {
    return codegeneracies[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
  };
  for (const auto& row : cofaces)
    for (const auto& m : row) m.require_chain_map();
  for (const auto& row : codegeneracies)
    for (const auto& m : row) m.require_chain_map();
  coaugmentation.require_chain_map();
  if (q_max >= 1 && !same(compose(d(1, 0), coaugmentation), compose(d(1, 1), coaugmentation))) fail("d0η = d1η", 1);
  // d^j d^i = d^i d^{j−1} for i < j, G^{q−2} → G^q
  for (int q = 2; q <= q_max; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        if (!same(compose(d(q, j), d(q - 1, i)), compose(d(q, i), d(q - 1, j - 1)))) fail("d^j d^i = d^i d^{j-1}", q);
  // s^j s^i = s^i s^{j+1} for i ≤ j, G^{q+2} → G^q
  for (int q = 0; q + 2 <= q_max; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i)
        if (!same(compose(s(q, j), s(q + 1, i)), compose(s(q, i), s(q + 1, j + 1)))) fail("s^j s^i = s^i s^{j+1}", q);
  // mixed relations, s^j : G^q → G^{q−1} after d^i : G^{q−1} → G^q
  for (int q = 1; q <= q_max; ++q)
    for (int j = 0; j < q; ++j)
      for (int i = 0; i <= q; ++i) {
        ComplexMorphism lhs = compose(s(q - 1, j), d(q, i));
        if (i == j || i == j + 1) {
          if (!same(lhs, ComplexMorphism::identity(levels[static_cast<std::size_t>(q - 1)]))) fail("s^j d^j = id", q);
        } else if (i < j) {
          if (!same(lhs, compose(d(q - 1, i), s(q - 2, j - 1)))) fail("s^j d^i = d^i s^{j-1}", q);
        } else {
          if (!same(lhs, compose(d(q - 1, i - 1), s(q - 2, j)))) fail("s^j d^i = d^{i-1} s^j", q);
        }
      }
}

CosimplicialComplex godement_cosimplicial(const Complex& k, int q_max) {
  require(q_max >= 0, ErrorCode::invalid_input, "cosimplicial depth must be nonnegative");
  return assemble(k, towers_of(k, q_max), q_max);
}

GodementResolution godement_resolution(const Complex& k, int q_max) {
  require(q_max >= 0, ErrorCode::invalid_input, "cosimplicial depth must be nonnegative");
  GodementResolution r;
  r.source = k;
  r.q_max = q_max;
  Levels l = towers_of(k, q_max);
  r.towers = l.towers;
  r.cosimplicial = assemble(k, l, q_max);
  if (l.towers.empty()) {
    r.total.complex = Complex::zero(k.site(), k.ring());
    r.unit = ComplexMorphism::zero(k, r.total.complex);
    return r;
  }
  const FinCategory& cat = k.site()->category();
  const Ring& ring = k.ring();
  const auto& g = r.cosimplicial;

  // N^q = ∩ ker s^i inside G^q.
  for (int q = 0; q <= q_max; ++q) {
    const Complex& gq = g.levels[static_cast<std::size_t>(q)];
    std::vector<SubPresheaf> ps;
    for (int m = l.lo; m <= l.hi; ++m) {
      if (q == 0) {
        ps.push_back(kernel(gq.level(m), ModPresheaf::zero(k.site(), ring), PresheafMap::zero(gq.level(m), ModPresheaf::zero(k.site(), ring))));
        continue;
      }
      const Complex& below = g.levels[static_cast<std::size_t>(q - 1)];
      std::vector<ModPresheaf> targets(static_cast<std::size_t>(q), below.level(m));
      ModPresheaf sum = direct_sum(targets);
      PresheafMap stacked;
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        Matrix col(0, gq.level(m).generators(c));
        for (int i = 0; i < q; ++i)
          col = vstack(col, g.codegeneracies[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(i)].component(m).components[c]);
        stacked.components.push_back(col);
      }
      ps.push_back(kernel(gq.level(m), sum, stacked));
    }
    std::vector<ModPresheaf> levels;
    std::vector<PresheafMap> diffs;
    for (int m = l.lo; m <= l.hi; ++m) {
      std::size_t i = static_cast<std::size_t>(m - l.lo);
      levels.push_back(ps[i].presheaf);
      if (m == l.lo) continue;
      PresheafMap d;
      for (ObjectId c = 0; c < cat.object_count(); ++c)
        d.components.push_back(induced_map(ps[i].parts[c], ps[i - 1].parts[c], gq.differential(m).components[c]));
      diffs.push_back(d);
    }
    r.normalized.push_back(Complex(k.site(), ring, l.lo, levels, diffs));
    r.parts.push_back(ps);
  }

  // Column p = −q holds N^q; horizontal maps N^q → N^{q+1} are Σ(−1)^i d^i.
  std::vector<Complex> columns;
  for (int q = q_max; q >= 0; --q) columns.push_back(r.normalized[static_cast<std::size_t>(q)]);
  std::vector<std::vector<PresheafMap>> horizontal;
  for (int p = -q_max + 1; p <= 0; ++p) {
    int q = -p;
    std::vector<PresheafMap> row;
    for (int m = l.lo; m <= l.hi; ++m) {
      std::size_t i = static_cast<std::size_t>(m - l.lo);
      PresheafMap delta;
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        Matrix sum;
        for (int j = 0; j <= q + 1; ++j) {
          Matrix dj = g.cofaces[static_cast<std::size_t>(q + 1)][static_cast<std::size_t>(j)].component(m).components[c];
          if (j % 2 != 0) dj = negate(ring, dj);
          sum = j == 0 ? dj : add(ring, sum, dj);
        }
        delta.components.push_back(induced_map(r.parts[static_cast<std::size_t>(q)][i].parts[c],
                                               r.parts[static_cast<std::size_t>(q + 1)][i].parts[c], sum));
      }
      row.push_back(delta);
    }
    horizontal.push_back(row);
  }
  OpenEdges open;
  open.p_low = true;
  Bicomplex b = Bicomplex::from_commuting(columns, -q_max, horizontal, l.lo, l.hi, open);
  r.total = tot_prod(b);

  // K_m lands in the block (p = 0, m), last within its total degree.
  const Complex& t = r.total.complex;
  std::vector<PresheafMap> unit;
  for (int m = l.lo; m <= l.hi; ++m) {
    std::size_t i = static_cast<std::size_t>(m - l.lo);
    PresheafMap eta = point_unit(r.towers[i].products[0]);
    PresheafMap u = PresheafMap::zero(k.level(m), t.level(m));
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      Matrix into_n = r.parts[0][i].parts[c].to_module(eta.components[c]);
      paste(u.components[c], into_n, t.level(m).generators(c) - into_n.rows(), 0);
    }
    unit.push_back(u);
  }
  r.unit = ComplexMorphism(k, t, l.lo, unit);
  r.unit.require_chain_map();
  return r;
}

ComplexMorphism godement_map(const GodementResolution& a, const GodementResolution& b, const ComplexMorphism& f) {
  require(a.q_max == b.q_max, ErrorCode::invalid_input, "godement_map needs equal cosimplicial depths");
  const Complex& s = a.total.complex;
  const Complex& t = b.total.complex;
  if (s.empty_window() || t.empty_window()) return ComplexMorphism::zero(s, t);
  const FinCategory& cat = a.source.site()->category();
  int q_max = a.q_max;
  int lo = std::max(a.source.lo(), b.source.lo()), hi = std::min(a.source.hi(), b.source.hi());
  auto blocks = [&](const GodementResolution& r, int n, ObjectId c) {
    // (q, offset) per block of total degree n, p = −q ascending.
    std::vector<std::pair<int, std::size_t>> out;
    std::size_t off = 0;
    for (int q = q_max; q >= 0; --q) {
      int m = n + q;
      if (m < r.source.lo() || m > r.source.hi()) continue;
      out.push_back({q, off});
      off += r.normalized[static_cast<std::size_t>(q)].level(m).generators(c);
    }
    return out;
  };
  std::vector<PresheafMap> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    PresheafMap fn = PresheafMap::zero(s.level(n), t.level(n));
    for (int q = 0; q <= q_max; ++q) {
      int m = n + q;
      if (m < lo || m > hi) continue;
      std::size_t ia = static_cast<std::size_t>(m - a.source.lo()), ib = static_cast<std::size_t>(m - b.source.lo());
      PresheafMap g = iterate(a.towers[ia], 0, b.towers[ib], 0, f.component(m), q + 1);
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        std::size_t so = 0, to = 0;
        for (auto [qq, off] : blocks(a, n, c))
          if (qq == q) so = off;
        for (auto [qq, off] : blocks(b, n, c))
          if (qq == q) to = off;
        Matrix block = induced_map(a.parts[static_cast<std::size_t>(q)][ia].parts[c],
                                   b.parts[static_cast<std::size_t>(q)][ib].parts[c], g.components[c]);
        paste(fn.components[c], block, to, so);
      }
    }
    comps.push_back(fn);
  }
  ComplexMorphism out(s, t, s.lo(), comps);
  out.require_chain_map();
  return out;
}

}  // namespace sitecx
