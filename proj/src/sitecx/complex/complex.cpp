#include "sitecx/complex/complex.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

Complex::Complex(SitePtr site, Ring ring, int lo, std::vector<ModPresheaf> levels,
                 std::vector<PresheafMap> diffs)
    : site_(std::move(site)),
      ring_(ring),
      lo_(lo),
      hi_(lo + static_cast<int>(levels.size()) - 1),
      levels_(std::move(levels)),
      diffs_(std::move(diffs)),
      zero_(ModPresheaf::zero(site_, ring_)) {
  if (levels_.empty()) {
    lo_ = 0;
    hi_ = -1;
    diffs_.clear();
    return;
  }
  require(diffs_.size() + 1 == levels_.size(), ErrorCode::invalid_input,
          "complex needs one differential between consecutive levels");
  for (const auto& l : levels_) {
    require(l.site() == site_, ErrorCode::invalid_input, "complex levels live on different sites");
    require_same_ring(ring_, l.ring());
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    int n = lo_ + static_cast<int>(k) + 1;
    require_natural(levels_[k + 1], levels_[k], diffs_[k], "differential d_" + std::to_string(n));
  }
  for (std::size_t k = 1; k < diffs_.size(); ++k) {
    int n = lo_ + static_cast<int>(k) + 1;
    PresheafMap dd = sitecx::compose(levels_[k - 1], diffs_[k - 1], diffs_[k]);
    require(is_zero_map(levels_[k - 1], dd), ErrorCode::composition_nonzero,
            "d_" + std::to_string(n - 1) + " ∘ d_" + std::to_string(n) + " is nonzero");
  }
}

Complex Complex::zero(SitePtr site, const Ring& ring) { return Complex(site, ring, 0, {}, {}); }

Complex Complex::concentrated(const ModPresheaf& f, int n) { return Complex(f.site(), f.ring(), n, {f}, {}); }

Complex Complex::of_modules(const Ring& ring, int lo, const std::vector<FpModule>& levels,
                            const std::vector<Matrix>& diffs) {
  SitePtr t = terminal_site();
  std::vector<ModPresheaf> ls;
  for (const auto& m : levels) ls.push_back(ModPresheaf::constant(t, m));
  std::vector<PresheafMap> ds;
  for (const auto& d : diffs) ds.push_back(PresheafMap{{d}});
  return Complex(t, ring, lo, ls, ds);
}

const ModPresheaf& Complex::level(int n) const {
  if (!in_window(n)) return zero_;
  return levels_[static_cast<std::size_t>(n - lo_)];
}

PresheafMap Complex::differential(int n) const {
  if (in_window(n) && in_window(n - 1)) return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
  return PresheafMap::zero(level(n), level(n - 1));
}

bool Complex::is_zero() const {
  for (const auto& l : levels_)
    if (!l.is_zero()) return false;
  return true;
}

Complex Complex::evaluate(ObjectId c) const {
  std::vector<FpModule> ls;
  std::vector<Matrix> ds;
  for (int n = lo_; n <= hi_; ++n) {
    ls.push_back(level(n).value(c));
    if (n > lo_) ds.push_back(differential(n).components[c]);
  }
  if (ls.empty()) return Complex::zero(terminal_site(), ring_);
  return of_modules(ring_, lo_, ls, ds);
}

Complex Complex::shift(int p) const {
  if (empty_window()) return *this;
  std::vector<PresheafMap> ds = diffs_;
  if (p % 2 != 0)
    for (auto& d : ds)
      for (auto& m : d.components) m = negate(ring_, m);
  return Complex(site_, ring_, lo_ - p, levels_, ds);
}

Complex Complex::trimmed() const {
  int a = lo_, b = hi_;
  while (a <= b && level(a).is_zero()) ++a;
  while (b >= a && level(b).is_zero()) --b;
  if (a > b) return zero(site_, ring_);
  return Complex(site_, ring_, a,
      std::vector<ModPresheaf>(levels_.begin() + (a - lo_), levels_.begin() + (b - lo_ + 1)),
      std::vector<PresheafMap>(diffs_.begin() + (a - lo_), diffs_.begin() + (b - lo_)));
}

Complex Complex::widened(int lo, int hi) const {
  if (empty_window() && lo > hi) return *this;
  int a = empty_window() ? lo : std::min(lo, lo_);
  int b = empty_window() ? hi : std::max(hi, hi_);
  std::vector<ModPresheaf> ls;
  std::vector<PresheafMap> ds;
  for (int n = a; n <= b; ++n) {
    ls.push_back(level(n));
    if (n > a) ds.push_back(differential(n));
  }
  return Complex(site_, ring_, a, ls, ds);
}

ComplexMorphism::ComplexMorphism(Complex s, Complex t, int l, std::vector<PresheafMap> comps)
    : source(std::move(s)), target(std::move(t)), lo(l), components(std::move(comps)) {}

ComplexMorphism ComplexMorphism::zero(const Complex& source, const Complex& target) {
  auto [a, b] = union_window(ComplexMorphism(source, target, 0, {}));
  std::vector<PresheafMap> comps;
  for (int n = a; n <= b; ++n) comps.push_back(PresheafMap::zero(source.level(n), target.level(n)));
  return ComplexMorphism(source, target, a, comps);
}

ComplexMorphism ComplexMorphism::identity(const Complex& k) {
  std::vector<PresheafMap> comps;
  for (int n = k.lo(); n <= k.hi(); ++n) comps.push_back(PresheafMap::identity(k.level(n)));
  return ComplexMorphism(k, k, k.lo(), comps);
}

PresheafMap ComplexMorphism::component(int n) const {
  if (n >= lo && n <= hi()) return components[static_cast<std::size_t>(n - lo)];
  return PresheafMap::zero(source.level(n), target.level(n));
}

void ComplexMorphism::require_chain_map() const {
  require(source.site() == target.site(), ErrorCode::invalid_input, "chain map between different sites");
  require_same_ring(source.ring(), target.ring());
  auto [a, b] = union_window(*this);
  for (int n = a; n <= b; ++n)
    require_natural(source.level(n), target.level(n), component(n), "chain map component f_" + std::to_string(n));
  for (int n = a; n <= b + 1; ++n) {
    PresheafMap lhs = sitecx::compose(target.level(n - 1), target.differential(n), component(n));
    PresheafMap rhs = sitecx::compose(target.level(n - 1), component(n - 1), source.differential(n));
    require(maps_equal(target.level(n - 1), lhs, rhs), ErrorCode::non_commuting_square,
            "chain map does not commute with the differential in degree " + std::to_string(n));
  }
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
  int a = std::min(f.source.empty_window() ? INT_MAX : f.source.lo(), g.target.empty_window() ? INT_MAX : g.target.lo());
  int b = std::max(f.source.empty_window() ? INT_MIN : f.source.hi(), g.target.empty_window() ? INT_MIN : g.target.hi());
  std::vector<PresheafMap> comps;
  if (a > b) return ComplexMorphism(f.source, g.target, 0, {});
  for (int n = a; n <= b; ++n)
    comps.push_back(sitecx::compose(g.target.level(n), g.component(n), f.component(n)));
  return ComplexMorphism(f.source, g.target, a, comps);
}

bool morphisms_equal(const ComplexMorphism& a, const ComplexMorphism& b) {
  auto [lo, hi] = union_window(a);
  for (int n = lo; n <= hi; ++n)
    if (!maps_equal(a.target.level(n), a.component(n), b.component(n))) return false;
  return true;
}

Complex direct_sum(const Complex& a, const Complex& b) {
  if (a.empty_window()) return b;
  if (b.empty_window()) return a;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<ModPresheaf> ls;
  std::vector<PresheafMap> ds;
  for (int n = lo; n <= hi; ++n) {
    ls.push_back(direct_sum(std::vector<ModPresheaf>{a.level(n), b.level(n)}));
    if (n > lo) {
      PresheafMap d;
      PresheafMap da = a.differential(n), db = b.differential(n);
      for (std::size_t c = 0; c < da.components.size(); ++c)
        d.components.push_back(block_diagonal(std::vector<Matrix>{da.components[c], db.components[c]}));
      ds.push_back(d);
    }
  }
  return Complex(a.site(), a.ring(), lo, ls, ds);
}

bool is_degreewise_surjective(const ComplexMorphism& f, int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    if (!is_objectwise_surjective(f.source.level(n), f.target.level(n), f.component(n))) return false;
  return true;
}

bool is_degreewise_injective(const ComplexMorphism& f, int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    if (!is_objectwise_injective(f.source.level(n), f.target.level(n), f.component(n))) return false;
  return true;
}

std::pair<int, int> union_window(const ComplexMorphism& f) {
  int a = INT_MAX, b = INT_MIN;
  for (const Complex* k : {&f.source, &f.target})
    if (!k->empty_window()) {
      a = std::min(a, k->lo());
      b = std::max(b, k->hi());
    }
  if (a > b) return {0, -1};
  return {a, b};
}

void Windowed::require_valid(int n, const std::string& what) const {
  require(valid(n), ErrorCode::outside_validity,
          what + ": degree " + std::to_string(n) + " is outside the validity window " +
              window_string(valid_lo, valid_hi));
}

std::string window_string(int lo, int hi) {
  auto s = [](int v) {
    if (v == INT_MIN) return std::string("-inf");
    if (v == INT_MAX) return std::string("inf");
    return std::to_string(v);
  };
  return "[" + s(lo) + ", " + s(hi) + "]";
}

}  // namespace sitecx
