#include "sitecx/complex/lifting.hpp"

#include <algorithm>

#include "sitecx/error.hpp"
#include "sitecx/exactalg/linsys.hpp"

namespace sitecx {

std::optional<ComplexMorphism> rlp_solve(const LiftingSquare& sq) {
  const Complex& a = sq.i.source;
  const Complex& b = sq.i.target;
  const Complex& x = sq.f.source;
  const Complex& y = sq.f.target;
  sq.i.require_chain_map();
  sq.f.require_chain_map();
  sq.u.require_chain_map();
  sq.v.require_chain_map();
  require(morphisms_equal(compose(sq.f, sq.u), compose(sq.v, sq.i)), ErrorCode::non_commuting_square,
          "lifting square does not commute");

  const Ring& ring = b.ring();
  const FinCategory& cat = b.site()->category();
  std::size_t objects = cat.object_count();
  int lo = std::min({a.lo(), b.lo(), x.lo(), y.lo()});
  int hi = std::max({a.hi(), b.hi(), x.hi(), y.hi()});
  if (lo > hi) return ComplexMorphism::zero(b, x);

  LinearSystem sys(ring);
  // blocks[n - lo][c]: h_n(c), gens X_n(c) × gens B_n(c).
  std::vector<std::vector<std::size_t>> blocks;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::size_t> row;
    for (ObjectId c = 0; c < objects; ++c)
      row.push_back(sys.add_block(x.level(n).generators(c), b.level(n).generators(c)));
    blocks.push_back(row);
  }
  auto h = [&](int n, ObjectId c) { return blocks[static_cast<std::size_t>(n - lo)][c]; };
  using Term = LinearSystem::Term;

  for (int n = lo; n <= hi; ++n) {
    const ModPresheaf& bn = b.level(n);
    const ModPresheaf& xn = x.level(n);
    const ModPresheaf& yn = y.level(n);
    PresheafMap in = sq.i.component(n), fn = sq.f.component(n), un = sq.u.component(n), vn = sq.v.component(n);
    for (ObjectId c = 0; c < objects; ++c) {
      std::size_t gx = xn.generators(c), gb = bn.generators(c);
      const Matrix& rx = xn.value(c).relations();
      const Matrix& ry = yn.value(c).relations();
      // h ∘ i ≡ u
      sys.add_equation({Term{Matrix::identity(gx), h(n, c), in.components[c]}}, un.components[c], rx);
      // f ∘ h ≡ v
      sys.add_equation({Term{fn.components[c], h(n, c), Matrix::identity(gb)}}, vn.components[c], ry);
      // h carries relations of B into relations of X
      sys.add_equation({Term{Matrix::identity(gx), h(n, c), bn.value(c).relations()}},
                       Matrix(gx, bn.value(c).relations().cols()), rx);
      // d h_n = h_{n−1} d
      if (n > lo) {
        const ModPresheaf& xm = x.level(n - 1);
        std::size_t gxm = xm.generators(c);
        sys.add_equation({Term{x.differential(n).components[c], h(n, c), Matrix::identity(gb)},
                          Term{negate(ring, Matrix::identity(gxm)), h(n - 1, c), b.differential(n).components[c]}},
                         Matrix(gxm, gb), xm.value(c).relations());
      }
    }
    // naturality along every non-identity morphism φ: d → c
    for (MorphismId m = 0; m < cat.morphism_count(); ++m) {
      if (cat.is_identity(m)) continue;
      ObjectId c = cat.morphism(m).target, d = cat.morphism(m).source;
      std::size_t gxd = xn.generators(d), gbc = bn.generators(c);
      sys.add_equation({Term{xn.map(m), h(n, c), Matrix::identity(gbc)},
                        Term{negate(ring, Matrix::identity(gxd)), h(n, d), bn.map(m)}},
                       Matrix(gxd, gbc), xn.value(d).relations());
    }
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  std::vector<PresheafMap> comps;
  for (int n = lo; n <= hi; ++n) {
    PresheafMap p;
    for (ObjectId c = 0; c < objects; ++c) p.components.push_back((*sol)[h(n, c)]);
    comps.push_back(p);
  }
  ComplexMorphism out(b, x, lo, comps);
  out.require_chain_map();
  return out;
}

}  // namespace sitecx
