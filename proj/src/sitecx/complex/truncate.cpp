#include "sitecx/complex/truncate.hpp"

#include "sitecx/complex/homology.hpp"

namespace sitecx {

namespace {

std::vector<Subquotient> whole(const ModPresheaf& f) {
  std::vector<Subquotient> parts;
  for (ObjectId c = 0; c < f.site()->object_count(); ++c) {
    const FpModule& m = f.value(c);
    parts.emplace_back(f.ring(), m.generators(), Matrix::identity(m.generators()), m.relations());
  }
  return parts;
}

}  // namespace

Truncation truncate(const Complex& k, int n) {
  if (k.empty_window() || n <= k.lo()) return {k, ComplexMorphism::identity(k)};
  if (n > k.hi()) {
    Complex z = Complex::zero(k.site(), k.ring());
    return {z, ComplexMorphism::zero(z, k)};
  }
  SubPresheaf z = cycles(k, n);
  std::vector<ModPresheaf> levels{z.presheaf};
  std::vector<PresheafMap> diffs;
  for (int q = n + 1; q <= k.hi(); ++q) {
    levels.push_back(k.level(q));
    if (q == n + 1)
      diffs.push_back(induced(whole(k.level(q)), z.parts, k.differential(q)));
    else
      diffs.push_back(k.differential(q));
  }
  Complex t(k.site(), k.ring(), n, levels, diffs);
  std::vector<PresheafMap> comps;
  for (int q = n; q <= k.hi(); ++q) {
    if (q == n) {
      PresheafMap inc;
      for (const auto& part : z.parts) inc.components.push_back(part.inclusion());
      comps.push_back(inc);
    } else {
      comps.push_back(PresheafMap::identity(k.level(q)));
    }
  }
  ComplexMorphism inc(t, k, n, comps);
  return {t, inc};
}

}  // namespace sitecx
