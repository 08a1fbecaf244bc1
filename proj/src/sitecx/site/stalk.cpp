#include "sitecx/site/stalk.hpp"

#include <numeric>

#include "sitecx/error.hpp"

namespace sitecx {

Stalk stalk(const ModPresheaf& f, const Point& p) {
  const FinCategory& cat = f.site()->category();
  const Ring& ring = f.ring();
  require(!p.neighborhoods.empty(), ErrorCode::missing_points, "point '" + p.name + "' has no neighborhoods");
  Stalk out;
  out.germs.resize(cat.object_count());
  if (p.minimal) {
    ObjectId m = *p.minimal;
    out.module = f.value(m);
    for (ObjectId c : p.neighborhoods) out.germs[c] = f.map(cat.hom(m, c).front());
    return out;
  }
  std::vector<FpModule> parts;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  std::vector<long> slot(cat.object_count(), -1);
  for (ObjectId c : p.neighborhoods) {
    slot[c] = static_cast<long>(parts.size());
    offsets.push_back(total);
    parts.push_back(f.value(c));
    total += f.generators(c);
  }
  FpModule sum = direct_sum(parts);
  std::vector<Matrix> cols;
  for (ObjectId c : p.neighborhoods)
    for (MorphismId g : cat.into(c)) {
      ObjectId d = cat.morphism(g).source;
      if (slot[d] < 0 || cat.is_identity(g)) continue;
      Matrix block(total, f.generators(c));
      paste(block, f.map(g), offsets[static_cast<std::size_t>(slot[d])], 0);
      paste(block, negate(ring, Matrix::identity(f.generators(c))), offsets[static_cast<std::size_t>(slot[c])], 0);
      cols.push_back(block);
    }
  Matrix rel = cols.empty() ? Matrix(total, 0) : hstack(cols, total);
  Subquotient q = cokernel(FpModule(ring, rel.cols()), sum, rel);
  out.module = q.module();
  for (ObjectId c : p.neighborhoods) {
    Matrix inj(total, f.generators(c));
    paste(inj, Matrix::identity(f.generators(c)), offsets[static_cast<std::size_t>(slot[c])], 0);
    out.germs[c] = q.to_module(inj);
  }
  return out;
}

std::size_t stalk_size(const SetPresheaf& f, const Point& p) {
  const FinCategory& cat = f.site()->category();
  if (p.minimal) return f.size(*p.minimal);
  std::vector<std::size_t> offset(cat.object_count(), 0);
  std::size_t total = 0;
  std::vector<bool> in(cat.object_count(), false);
  for (ObjectId c : p.neighborhoods) {
    in[c] = true;
    offset[c] = total;
    total += f.size(c);
  }
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ObjectId c : p.neighborhoods)
    for (MorphismId g : cat.into(c)) {
      ObjectId d = cat.morphism(g).source;
      if (!in[d]) continue;
      for (std::size_t x = 0; x < f.size(c); ++x)
        parent[find(offset[c] + x)] = find(offset[d] + f.restrict(g, x));
    }
  std::size_t classes = 0;
  for (std::size_t x = 0; x < total; ++x) classes += find(x) == x;
  return classes;
}

Matrix stalk_map(const ModPresheaf& source, const Stalk& source_stalk, const Stalk& target_stalk,
                 const PresheafMap& phi, const Point& p) {
  const Ring& ring = source.ring();
  if (p.minimal) return phi.components[*p.minimal];
  // Every element of the stalk is a germ from some neighborhood.
  std::vector<Matrix> blocks;
  std::vector<Matrix> images;
  for (ObjectId c : p.neighborhoods) {
    blocks.push_back(*source_stalk.germs[c]);
    images.push_back(multiply(ring, *target_stalk.germs[c], phi.components[c]));
  }
  Matrix germs = hstack(blocks, source_stalk.module.generators());
  Matrix imgs = hstack(images, target_stalk.module.generators());
  // Solve germs · X ≡ I, then the map is imgs · X.
  Matrix sys = hstack(germs, source_stalk.module.relations());
  auto x = solve(ring, sys, Matrix::identity(source_stalk.module.generators()));
  require(x.has_value(), ErrorCode::internal, "germs do not generate the stalk");
  return multiply(ring, imgs, row_range(*x, 0, germs.cols()));
}

}  // namespace sitecx
