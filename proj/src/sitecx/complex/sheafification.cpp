#include "sitecx/complex/sheafification.hpp"

#include "sitecx/site/sheafify.hpp"

namespace sitecx {

SheafifiedComplex sheafify_complex(const Complex& k) {
  SheafifiedComplex out;
  if (k.empty_window()) {
    out.complex = k;
    out.unit = ComplexMorphism::identity(k);
    return out;
  }
  std::vector<Sheafification> sh;
  for (int n = k.lo(); n <= k.hi(); ++n) sh.push_back(sheafify(k.level(n)));
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs, unit;
  for (int n = k.lo(); n <= k.hi(); ++n) {
    std::size_t i = static_cast<std::size_t>(n - k.lo());
    levels.push_back(sh[i].sheaf);
    unit.push_back(sh[i].unit);
    if (n > k.lo()) diffs.push_back(sheafify_map(k.level(n), sh[i], sh[i - 1], k.differential(n)));
  }
  out.complex = Complex(k.site(), k.ring(), k.lo(), levels, diffs);
  out.unit = ComplexMorphism(k, out.complex, k.lo(), unit);
  out.unit.require_chain_map();
  return out;
}

}  // namespace sitecx
