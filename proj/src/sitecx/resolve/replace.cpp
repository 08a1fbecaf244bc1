#include "sitecx/resolve/replace.hpp"

#include <algorithm>
#include <climits>

#include "sitecx/complex/bicomplex.hpp"
#include "sitecx/error.hpp"
#include "sitecx/exactalg/linsys.hpp"

namespace sitecx {

namespace {

// Nonzero images of the chosen sections under φ, used as seeds downstream.
std::vector<Section> push_sections(const ModPresheaf& target, const PresheafMap& phi,
                                   const std::vector<Section>& sections) {
  std::vector<Section> out;
  for (const auto& s : sections) {
    Matrix t = multiply(target.ring(), phi.components[s.object], s.value);
    if (!target.value(s.object).is_zero_element(t)) out.push_back({s.object, t});
  }
  return out;
}

PresheafMap induced_on_kernels(const SubPresheaf& src, const SubPresheaf& tgt, const PresheafMap& phi) {
  PresheafMap out;
  for (std::size_t c = 0; c < src.parts.size(); ++c)
    out.components.push_back(induced_map(src.parts[c], tgt.parts[c], phi.components[c]));
  return out;
}

}  // namespace

CofibrantReplacement cofibrant_replace(const Complex& k, int depth, Strategy strategy) {
  require(depth >= 1, ErrorCode::invalid_input, "resolution depth must be at least 1");
  CofibrantReplacement out;
  const SitePtr& site = k.site();
  const Ring& ring = k.ring();
  if (k.empty_window() || k.is_zero()) {
    out.total.complex = Complex::zero(site, ring);
    out.augmentation = ComplexMorphism::zero(out.total.complex, k);
    return out;
  }
  const FinCategory& cat = site->category();
  int lo = k.lo(), hi = k.hi();
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  out.columns.resize(width);
  // horizontal[n - lo - 1][q]: P_q(K_n) → P_q(K_{n−1})
  std::vector<std::vector<PresheafMap>> horizontal(width > 0 ? width - 1 : 0);

  // Column-by-column resolution, top first, carrying seeds down.
  std::vector<std::vector<Section>> seeds(static_cast<std::size_t>(depth));
  std::vector<SRStep> above;
  std::vector<ModPresheaf> above_objects;
  std::vector<PresheafMap> above_maps;  // map from the column above at each stage, into the current stage
  for (int n = hi; n >= lo; --n) {
    std::size_t idx = static_cast<std::size_t>(n - lo);
    SRResolution& r = out.columns[idx];
    std::vector<SRStep> steps;
    ModPresheaf current = k.level(n);
    std::vector<PresheafMap> maps_down;  // φ_q from column n+1 at stage q
    PresheafMap phi = n < hi ? k.differential(n + 1) : PresheafMap{};
    std::vector<Section> next_seeds;
    for (int q = 0; q < depth; ++q) {
      if (current.is_zero()) {
        r.exact = true;
        break;
      }
      std::vector<Section> sd;
      if (strategy == Strategy::economical && n < hi && static_cast<std::size_t>(q) < above.size())
        sd = push_sections(current, phi, above[q].sections);
      steps.push_back(sr_step(current, strategy, sd));
      if (n < hi) {
        if (static_cast<std::size_t>(q) < above.size()) {
          PresheafMap h = sr_step_map(above_objects[q], current, phi, above[q], steps.back());
          maps_down.push_back(h);
          phi = induced_on_kernels(above[q].kernel, steps.back().kernel, h);
        } else {
          maps_down.push_back(PresheafMap{});
        }
      }
      current = steps.back().kernel.presheaf;
    }
    if (!r.exact && current.is_zero()) r.exact = true;
    // Record resolution complex for column n.
    std::vector<ModPresheaf> levels;
    std::vector<PresheafMap> diffs;
    for (std::size_t q = 0; q < steps.size(); ++q) {
      levels.push_back(steps[q].cover.presheaf);
      if (q == 0) continue;
      PresheafMap d;
      for (ObjectId c = 0; c < cat.object_count(); ++c)
        d.components.push_back(multiply(ring, steps[q - 1].kernel.parts[c].inclusion(), steps[q].epi.components[c]));
      diffs.push_back(d);
    }
    r.complex = levels.empty() ? Complex::zero(site, ring) : Complex(site, ring, 0, levels, diffs);
    Complex s0 = Complex::concentrated(k.level(n), 0);
    r.augmentation = levels.empty() ? ComplexMorphism::zero(r.complex, s0)
                                    : ComplexMorphism(r.complex, s0, 0, {steps[0].epi});
    r.valid_hi = r.exact ? INT_MAX : depth - 2;
    if (n < hi) {
      std::vector<PresheafMap>& row = horizontal[idx];
      const Complex& upper = out.columns[idx + 1].complex;
      for (int q = 0; q < depth; ++q) {
        std::size_t uq = static_cast<std::size_t>(q);
        if (uq < maps_down.size() && !maps_down[uq].components.empty())
          row.push_back(maps_down[uq]);
        else
          row.push_back(PresheafMap::zero(upper.level(q), r.complex.level(q)));
      }
    }
    // Stage objects for the next column down.
    above_objects.clear();
    ModPresheaf obj = k.level(n);
    for (const auto& s : steps) {
      above_objects.push_back(obj);
      obj = s.kernel.presheaf;
    }
    r.steps = steps;
    above = std::move(steps);
  }

  // from_commuting expects horizontal[p − p_lo − 1] : column p → column p − 1.
  std::vector<std::vector<PresheafMap>> horiz;
  std::vector<Complex> cols;
  for (std::size_t i = 0; i < width; ++i) cols.push_back(out.columns[i].complex.widened(0, depth - 1));
  for (std::size_t i = 1; i < width; ++i) horiz.push_back(horizontal[i - 1]);
  bool all_exact = std::all_of(out.columns.begin(), out.columns.end(), [](const SRResolution& r) { return r.exact; });
  OpenEdges open;
  open.q_high = !all_exact;
  Bicomplex b = Bicomplex::from_commuting(cols, lo, horiz, 0, depth - 1, open);
  out.total = tot_sum(b);
  out.total.complex = out.total.complex.trimmed();
  out.total.valid_lo = INT_MIN;
  out.total.valid_hi = INT_MAX;
  for (int n = lo; n <= hi; ++n)
    if (!out.columns[static_cast<std::size_t>(n - lo)].exact) out.total.valid_hi = std::min(out.total.valid_hi, n + depth - 2);

  // Levels and augmentation: within total degree m, blocks are ordered by p ascending.
  const Complex& t = out.total.complex;
  std::vector<PresheafMap> aug;
  for (int m = t.lo(); m <= t.hi(); ++m) {
    std::vector<ObjectId> objects;
    for (int p = std::max(lo, m - depth + 1); p <= std::min(hi, m); ++p) {
      const auto& st = out.columns[static_cast<std::size_t>(p - lo)].steps;
      std::size_t q = static_cast<std::size_t>(m - p);
      if (q < st.size()) objects.insert(objects.end(), st[q].cover.objects.begin(), st[q].cover.objects.end());
    }
    out.levels.push_back(SemiRepresentable{objects, t.level(m)});
    PresheafMap a = PresheafMap::zero(t.level(m), k.level(m));
    if (m >= lo && m <= hi) {
      const auto& st = out.columns[static_cast<std::size_t>(m - lo)].steps;
      if (!st.empty())
        for (ObjectId c = 0; c < cat.object_count(); ++c) {
          const Matrix& e = st[0].epi.components[c];
          std::size_t total_cols = t.level(m).generators(c);
          for (std::size_t i = 0; i < e.rows(); ++i)
            for (std::size_t j = 0; j < e.cols(); ++j) a.components[c](i, total_cols - e.cols() + j) = e(i, j);
        }
    }
    aug.push_back(a);
  }
  out.augmentation = t.empty_window() ? ComplexMorphism::zero(t, k) : ComplexMorphism(t, k, t.lo(), aug);
  out.augmentation.require_chain_map();
  return out;
}

std::optional<std::vector<ObjectId>> semi_representable_witness(const ModPresheaf& f) {
  std::vector<Section> gens = generating_set(f, {});
  std::vector<ObjectId> objects;
  for (const auto& s : gens) objects.push_back(s.object);
  SemiRepresentable cover = SemiRepresentable::of(f.site(), f.ring(), objects);
  const FinCategory& cat = f.site()->category();
  for (ObjectId d = 0; d < cat.object_count(); ++d) {
    Matrix m(f.generators(d), 0);
    for (const auto& s : gens)
      for (MorphismId g : cat.hom(d, s.object)) m = hstack(m, multiply(f.ring(), f.map(g), s.value));
    if (!is_isomorphism(cover.presheaf.value(d), f.value(d), m)) return std::nullopt;
  }
  return objects;
}

namespace {

std::optional<PresheafMap> retraction(const ModPresheaf& a, const ModPresheaf& b, const PresheafMap& f) {
  const FinCategory& cat = a.site()->category();
  const Ring& ring = a.ring();
  LinearSystem sys(ring);
  using Term = LinearSystem::Term;
  std::vector<std::size_t> blocks;
  for (ObjectId c = 0; c < cat.object_count(); ++c) blocks.push_back(sys.add_block(a.generators(c), b.generators(c)));
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::size_t ga = a.generators(c), gb = b.generators(c);
    const Matrix& ra = a.value(c).relations();
    sys.add_equation({Term{Matrix::identity(ga), blocks[c], f.components[c]}}, Matrix::identity(ga), ra);
    sys.add_equation({Term{Matrix::identity(ga), blocks[c], b.value(c).relations()}},
                     Matrix(ga, b.value(c).relations().cols()), ra);
    (void)gb;
  }
  for (MorphismId m = 0; m < cat.morphism_count(); ++m) {
    if (cat.is_identity(m)) continue;
    ObjectId c = cat.morphism(m).target, d = cat.morphism(m).source;
    sys.add_equation({Term{a.map(m), blocks[c], Matrix::identity(b.generators(c))},
                      Term{negate(ring, Matrix::identity(a.generators(d))), blocks[d], b.map(m)}},
                     Matrix(a.generators(d), b.generators(c)), a.value(d).relations());
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  PresheafMap r;
  for (ObjectId c = 0; c < cat.object_count(); ++c) r.components.push_back((*sol)[blocks[c]]);
  return r;
}

CofibrationCertificate certify_degreewise(const ComplexMorphism& f) {
  CofibrationCertificate cert;
  f.require_chain_map();
  auto [lo, hi] = union_window(f);
  cert.lo = lo;
  for (int n = lo; n <= hi; ++n) {
    const ModPresheaf& a = f.source.level(n);
    const ModPresheaf& b = f.target.level(n);
    PresheafMap fn = f.component(n);
    auto r = retraction(a, b, fn);
    if (!r) {
      cert.refusal = "degree " + std::to_string(n) + " admits no retraction (not a split injection)";
      return cert;
    }
    cert.retractions.push_back(*r);
    SubPresheaf q = cokernel(a, b, fn);
    auto w = semi_representable_witness(q.presheaf);
    if (!w) {
      cert.refusal = "cokernel in degree " + std::to_string(n) + " has no semi-representable certificate";
      return cert;
    }
    cert.cokernel_summands.push_back(*w);
  }
  cert.certified = true;
  cert.patterns.push_back("bounded-below");
  return cert;
}

// σ_{≤m} K, the subcomplex of degrees ≤ m.
Complex brutal(const Complex& k, int m) {
  if (m < k.lo()) return Complex::zero(k.site(), k.ring());
  int to = std::min(m, k.hi());
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs;
  for (int n = k.lo(); n <= to; ++n) {
    levels.push_back(k.level(n));
    if (n > k.lo()) diffs.push_back(k.differential(n));
  }
  return Complex(k.site(), k.ring(), k.lo(), levels, diffs);
}

ComplexMorphism brutal_inclusion(const Complex& small, const Complex& big) {
  if (small.empty_window()) return ComplexMorphism::zero(small, big);
  std::vector<PresheafMap> comps;
  for (int n = small.lo(); n <= small.hi(); ++n) comps.push_back(PresheafMap::identity(small.level(n)));
  return ComplexMorphism(small, big, small.lo(), comps);
}

}  // namespace

CofibrationCertificate certify_cofibration(const ComplexMorphism& f) {
  CofibrationCertificate cert = certify_degreewise(f);
  if (!cert.certified) return cert;
  // The cokernel is the colimit of its brutal truncations; each transition
  // σ≤m−1 → σ≤m must be a split inclusion with semi-representable cokernel.
  auto [lo, hi] = union_window(f);
  if (f.source.is_zero()) {
    const Complex& k = f.target;
    bool tower = true;
    for (int m = lo; m <= hi && tower; ++m)
      tower = certify_degreewise(brutal_inclusion(brutal(k, m - 1), brutal(k, m))).certified;
    if (tower) cert.patterns.push_back("tower");
  }
  return cert;
}

}  // namespace sitecx
