#include "sitecx/check/generators.hpp"

#include "sitecx/complex/dghom.hpp"
#include "sitecx/resolve/sr.hpp"
#include "sitecx/site/site.hpp"

namespace sitecx {

Scalar Generator::scalar(const Ring& ring) {
  if (ring.kind() == RingKind::prime_field)
    return Scalar(static_cast<long>(uniform(0, ring.characteristic().get_si() - 1)));
  return Scalar(static_cast<long>(uniform(-2, 2)));
}

Matrix Generator::matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(ring);
  return m;
}

ModPresheaf Generator::presheaf(const SitePtr& site, const Ring& ring, std::size_t max_summands,
                                std::size_t max_relations) {
  const FinCategory& cat = site->category();
  auto pick = [&] { return static_cast<ObjectId>(uniform(0, static_cast<std::int64_t>(cat.object_count()) - 1)); };
  std::vector<ObjectId> objects;
  std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_summands)));
  for (std::size_t i = 0; i < n; ++i) objects.push_back(pick());
  ModPresheaf p = SemiRepresentable::of(site, ring, objects).presheaf;
  std::vector<Section> relations;
  std::size_t r = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_relations)));
  for (std::size_t i = 0; i < r; ++i) {
    ObjectId d = pick();
    Matrix v(p.generators(d), 1);
    for (std::size_t j = 0; j < v.rows(); ++j) v(j, 0) = scalar(ring);
    relations.push_back({d, v});
  }
  if (relations.empty()) return p;
  std::vector<ObjectId> rel_objects;
  for (const auto& s : relations) rel_objects.push_back(s.object);
  ModPresheaf source = SemiRepresentable::of(site, ring, rel_objects).presheaf;
  PresheafMap m;
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    Matrix col(p.generators(d), 0);
    for (const auto& s : relations)
      for (MorphismId g : cat.hom(d, s.object)) col = hstack(col, multiply(ring, p.map(g), s.value));
    m.components.push_back(col);
  }
  return cokernel(source, p, m).presheaf;
}

PresheafMap Generator::natural_map(const ModPresheaf& f, const ModPresheaf& g) {
  const Ring& ring = f.ring();
  Subquotient h = hom_module(f, g);
  Matrix v(h.ambient(), 1);
  const Matrix& inc = h.inclusion();
  for (std::size_t j = 0; j < inc.cols(); ++j) {
    Scalar a = scalar(ring);
    for (std::size_t i = 0; i < inc.rows(); ++i) v(i, 0) = ring.add(v(i, 0), ring.mul(a, inc(i, j)));
  }
  return hom_element(f, g, v);
}

Complex Generator::complex(const SitePtr& site, const Ring& ring, int lo, int length) {
  Complex k = Complex::zero(site, ring);
  for (int n = lo; n < lo + length; ++n) {
    if (coin(0.5)) k = direct_sum(k, Complex::concentrated(presheaf(site, ring), n));
    if (n + 1 < lo + length && coin(0.7)) {
      ModPresheaf p = presheaf(site, ring), q = presheaf(site, ring);
      k = direct_sum(k, Complex(site, ring, n, {q, p}, {natural_map(p, q)}));
    }
  }
  return k;
}

Complex Generator::module_complex(const Ring& ring, std::size_t max_rank) {
  auto a = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_rank)));
  auto b = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_rank)));
  return Complex::of_modules(ring, 0, {FpModule::free(ring, a), FpModule::free(ring, b)}, {matrix(ring, a, b)});
}

CoefficientFunctor Generator::coefficients(const SitePtr& site, const Ring& ring) {
  const FinCategory& cat = site->category();
  std::vector<ObjectId> bases;
  std::vector<Complex> parts;
  auto count = uniform(1, 2);
  for (std::int64_t i = 0; i < count; ++i) {
    bases.push_back(static_cast<ObjectId>(uniform(0, static_cast<std::int64_t>(cat.object_count()) - 1)));
    parts.push_back(module_complex(ring));
  }
  SitePtr term = terminal_site();
  CoefficientFunctor g{site, ring, {}, {}};
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<Matrix> diff_blocks;
    std::size_t g0 = 0, g1 = 0;
    for (std::size_t s = 0; s < bases.size(); ++s) {
      std::size_t h = cat.hom(bases[s], c).size();
      const Complex& m = parts[s];
      std::size_t a = m.level(0).generators(0), b = m.level(1).generators(0);
      diff_blocks.push_back(kronecker(ring, Matrix::identity(h), m.differential(1).components[0]));
      g0 += h * a;
      g1 += h * b;
    }
    g.values.push_back(Complex::of_modules(ring, 0, {FpModule::free(ring, g0), FpModule::free(ring, g1)},
                                           {block_diagonal(diff_blocks)}));
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    ObjectId src = cat.morphism(f).source, dst = cat.morphism(f).target;
    std::vector<Matrix> b0, b1;
    for (std::size_t s = 0; s < bases.size(); ++s) {
      auto hs = cat.hom(bases[s], src), ht = cat.hom(bases[s], dst);
      Matrix p(ht.size(), hs.size());
      for (std::size_t j = 0; j < hs.size(); ++j) {
        MorphismId comp = cat.compose(f, hs[j]);
        for (std::size_t i = 0; i < ht.size(); ++i)
          if (ht[i] == comp) p(i, j) = 1;
      }
      b0.push_back(kronecker(ring, p, Matrix::identity(parts[s].level(0).generators(0))));
      b1.push_back(kronecker(ring, p, Matrix::identity(parts[s].level(1).generators(0))));
    }
    g.maps.push_back(ComplexMorphism(g.values[src], g.values[dst], 0,
                                     {PresheafMap{{block_diagonal(b0)}}, PresheafMap{{block_diagonal(b1)}}}));
  }
  return g;
}

}  // namespace sitecx
