#include "sitecx/resolve/kan.hpp"

#include <algorithm>

#include "sitecx/complex/bicomplex.hpp"
#include "sitecx/error.hpp"

namespace sitecx {

FpModule tensor(const FpModule& m, const FpModule& n) {
  const Ring& ring = m.ring();
  std::size_t gm = m.generators(), gn = n.generators();
  Matrix rel = hstack(kronecker(ring, m.relations(), Matrix::identity(gn)),
                      kronecker(ring, Matrix::identity(gm), n.relations()));
  return FpModule(ring, gm * gn, rel);
}

void CoefficientFunctor::require_functorial() const {
  const FinCategory& cat = site->category();
  require(values.size() == cat.object_count() && maps.size() == cat.morphism_count(), ErrorCode::invalid_input,
          "coefficient functor needs one complex per object and one map per morphism");
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    maps[f].require_chain_map();
    if (cat.is_identity(f))
      require(morphisms_equal(maps[f], ComplexMorphism::identity(values[cat.morphism(f).source])),
              ErrorCode::non_functorial, "coefficient functor does not preserve identities");
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f)
    for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
      if (cat.morphism(g).source != cat.morphism(f).target) continue;
      MorphismId gf = cat.compose(g, f);
      require(morphisms_equal(maps[gf], compose(maps[g], maps[f])), ErrorCode::non_functorial,
              "coefficient functor does not preserve composition");
    }
}

namespace {

struct CoendLevel {
  Subquotient module;
  std::vector<std::size_t> offsets;  // of each object's K_p(c) ⊗ γ_q(c) in the ambient
  std::size_t ambient = 0;
};

}  // namespace

Complex kan_extend(const CoefficientFunctor& gamma, const Complex& k) {
  gamma.require_functorial();
  const FinCategory& cat = gamma.site->category();
  const Ring& ring = gamma.ring;
  SitePtr term = terminal_site();
  int p_lo = k.lo(), p_hi = k.hi();
  int q_lo = INT_MAX, q_hi = INT_MIN;
  for (const auto& v : gamma.values)
    if (!v.empty_window()) {
      q_lo = std::min(q_lo, v.lo());
      q_hi = std::max(q_hi, v.hi());
    }
  if (k.empty_window() || q_lo > q_hi) return Complex::zero(term, ring);

  auto mod = [&](const Complex& c, int q) { return c.level(q).value(0); };
  std::vector<CoendLevel> coends;
  auto at = [&](int p, int q) -> CoendLevel& {
    return coends[static_cast<std::size_t>((p - p_lo) * (q_hi - q_lo + 1) + (q - q_lo))];
  };
  for (int p = p_lo; p <= p_hi; ++p)
    for (int q = q_lo; q <= q_hi; ++q) {
      CoendLevel lvl;
      std::vector<FpModule> parts;
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        lvl.offsets.push_back(lvl.ambient);
        parts.push_back(tensor(k.level(p).value(c), mod(gamma.values[c], q)));
        lvl.ambient += parts.back().generators();
      }
      FpModule ambient = direct_sum(parts);
      // For f: d → c, x ⊗ y ∈ K(c) ⊗ γ(d) goes to K(f)x ⊗ y at d minus x ⊗ γ(f)y at c.
      Matrix rel(lvl.ambient, 0);
      std::size_t source_gens = 0;
      for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
        if (cat.is_identity(f)) continue;
        ObjectId d = cat.morphism(f).source, c = cat.morphism(f).target;
        std::size_t kc = k.level(p).generators(c), gd = mod(gamma.values[d], q).generators();
        Matrix block(lvl.ambient, kc * gd);
        Matrix a = kronecker(ring, k.level(p).map(f), Matrix::identity(gd));
        Matrix g = gamma.maps[f].component(q).components[0];
        Matrix b = negate(ring, kronecker(ring, Matrix::identity(kc), g));
        for (std::size_t i = 0; i < a.rows(); ++i)
          for (std::size_t j = 0; j < a.cols(); ++j) block(lvl.offsets[d] + i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j)
            block(lvl.offsets[c] + i, j) = ring.add(block(lvl.offsets[c] + i, j), b(i, j));
        rel = hstack(rel, block);
        source_gens += kc * gd;
      }
      lvl.module = cokernel(FpModule(ring, source_gens, Matrix(source_gens, 0)), ambient, rel);
      coends.push_back(std::move(lvl));
    }

  Bicomplex b(term, ring, p_lo, p_hi, q_lo, q_hi);
  for (int p = p_lo; p <= p_hi; ++p)
    for (int q = q_lo; q <= q_hi; ++q) b.set_level(p, q, ModPresheaf::constant(term, at(p, q).module.module()));
  for (int p = p_lo; p <= p_hi; ++p)
    for (int q = q_lo; q <= q_hi; ++q) {
      CoendLevel& here = at(p, q);
      if (p > p_lo) {
        CoendLevel& left = at(p - 1, q);
        std::vector<Matrix> blocks;
        for (ObjectId c = 0; c < cat.object_count(); ++c)
          blocks.push_back(kronecker(ring, k.differential(p).components[c],
                                     Matrix::identity(mod(gamma.values[c], q).generators())));
        Matrix amb = block_diagonal(blocks);
        b.set_horizontal(p, q, PresheafMap{{induced_map(here.module, left.module, amb)}});
      }
      if (q > q_lo) {
        CoendLevel& down = at(p, q - 1);
        std::vector<Matrix> blocks;
        for (ObjectId c = 0; c < cat.object_count(); ++c) {
          Matrix dg = gamma.values[c].differential(q).components[0];
          if (p % 2 != 0) dg = negate(ring, dg);
          blocks.push_back(kronecker(ring, Matrix::identity(k.level(p).generators(c)), dg));
        }
        Matrix amb = block_diagonal(blocks);
        b.set_vertical(p, q, PresheafMap{{induced_map(here.module, down.module, amb)}});
      }
    }
  b.require_valid();
  return tot_sum(b).complex;
}

}  // namespace sitecx
