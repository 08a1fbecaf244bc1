#include "sitecx/complex/bicomplex.hpp"

#include <algorithm>

#include "sitecx/error.hpp"

namespace sitecx {

Bicomplex::Bicomplex(SitePtr site, Ring ring, int p_lo, int p_hi, int q_lo, int q_hi, OpenEdges open)
    : site_(std::move(site)),
      ring_(ring),
      p_lo_(p_lo),
      p_hi_(p_hi),
      q_lo_(q_lo),
      q_hi_(q_hi),
      open_(open),
      zero_(ModPresheaf::zero(site_, ring_)) {
  std::size_t n = (p_hi >= p_lo && q_hi >= q_lo)
                      ? static_cast<std::size_t>(p_hi - p_lo + 1) * static_cast<std::size_t>(q_hi - q_lo + 1)
                      : 0;
  levels_.assign(n, zero_);
  dh_.assign(n, std::nullopt);
  dv_.assign(n, std::nullopt);
}

std::size_t Bicomplex::index(int p, int q) const {
  return static_cast<std::size_t>(p - p_lo_) * static_cast<std::size_t>(q_hi_ - q_lo_ + 1) +
         static_cast<std::size_t>(q - q_lo_);
}

Bicomplex Bicomplex::from_commuting(const std::vector<Complex>& columns, int p_lo,
                                    const std::vector<std::vector<PresheafMap>>& horizontal, int q_lo, int q_hi,
                                    OpenEdges open) {
  require(!columns.empty(), ErrorCode::internal, "bicomplex needs at least one column");
  int p_hi = p_lo + static_cast<int>(columns.size()) - 1;
  Bicomplex b(columns.front().site(), columns.front().ring(), p_lo, p_hi, q_lo, q_hi, open);
  for (int p = p_lo; p <= p_hi; ++p) {
    const Complex& col = columns[static_cast<std::size_t>(p - p_lo)];
    for (int q = q_lo; q <= q_hi; ++q) {
      b.set_level(p, q, col.level(q));
      if (q > q_lo) {
        PresheafMap d = col.differential(q);
        if (p % 2 != 0)
          for (auto& m : d.components) m = negate(b.ring_, m);
        b.set_vertical(p, q, d);
      }
      if (p > p_lo) b.set_horizontal(p, q, horizontal[static_cast<std::size_t>(p - p_lo - 1)][static_cast<std::size_t>(q - q_lo)]);
    }
  }
  b.require_valid();
  return b;
}

const ModPresheaf& Bicomplex::level(int p, int q) const {
  if (!inside(p, q)) return zero_;
  return levels_[index(p, q)];
}

PresheafMap Bicomplex::horizontal(int p, int q) const {
  if (inside(p, q) && inside(p - 1, q) && dh_[index(p, q)]) return *dh_[index(p, q)];
  return PresheafMap::zero(level(p, q), level(p - 1, q));
}

PresheafMap Bicomplex::vertical(int p, int q) const {
  if (inside(p, q) && inside(p, q - 1) && dv_[index(p, q)]) return *dv_[index(p, q)];
  return PresheafMap::zero(level(p, q), level(p, q - 1));
}

void Bicomplex::set_level(int p, int q, ModPresheaf f) {
  require(inside(p, q), ErrorCode::internal, "bicomplex level outside window");
  levels_[index(p, q)] = std::move(f);
}

void Bicomplex::set_horizontal(int p, int q, PresheafMap d) {
  require(inside(p, q) && inside(p - 1, q), ErrorCode::internal, "horizontal map outside window");
  dh_[index(p, q)] = std::move(d);
}

void Bicomplex::set_vertical(int p, int q, PresheafMap d) {
  require(inside(p, q) && inside(p, q - 1), ErrorCode::internal, "vertical map outside window");
  dv_[index(p, q)] = std::move(d);
}

void Bicomplex::require_valid() const {
  for (int p = p_lo_; p <= p_hi_; ++p)
    for (int q = q_lo_; q <= q_hi_; ++q) {
      std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      require_natural(level(p, q), level(p - 1, q), horizontal(p, q), "horizontal map at " + at);
      require_natural(level(p, q), level(p, q - 1), vertical(p, q), "vertical map at " + at);
      const ModPresheaf& t2 = level(p - 2, q);
      require(is_zero_map(t2, compose(t2, horizontal(p - 1, q), horizontal(p, q))), ErrorCode::composition_nonzero,
              "horizontal differential squares to nonzero at " + at);
      const ModPresheaf& v2 = level(p, q - 2);
      require(is_zero_map(v2, compose(v2, vertical(p, q - 1), vertical(p, q))), ErrorCode::composition_nonzero,
              "vertical differential squares to nonzero at " + at);
      const ModPresheaf& diag = level(p - 1, q - 1);
      PresheafMap hv = compose(diag, horizontal(p, q - 1), vertical(p, q));
      PresheafMap vh = compose(diag, vertical(p - 1, q), horizontal(p, q));
      PresheafMap neg_vh;
      for (const auto& m : vh.components) neg_vh.components.push_back(negate(ring_, m));
      require(maps_equal(diag, hv, neg_vh), ErrorCode::non_commuting_square,
              "bicomplex square at " + at + " does not anticommute");
    }
}

std::pair<int, int> Bicomplex::valid_window() const {
  int lo = INT_MIN, hi = INT_MAX;
  // The first total degree touched beyond each open edge.
  if (open_.p_high) hi = std::min(hi, p_hi_ + 1 + q_lo_ - 2);
  if (open_.q_high) hi = std::min(hi, q_hi_ + 1 + p_lo_ - 2);
  if (open_.p_low) lo = std::max(lo, p_lo_ - 1 + q_hi_ + 2);
  if (open_.q_low) lo = std::max(lo, q_lo_ - 1 + p_hi_ + 2);
  return {lo, hi};
}

namespace {

Windowed totalize(const Bicomplex& b) {
  Windowed out;
  auto [vlo, vhi] = b.valid_window();
  out.valid_lo = vlo;
  out.valid_hi = vhi;
  if (b.p_lo() > b.p_hi() || b.q_lo() > b.q_hi()) {
    out.complex = Complex::zero(b.site(), b.ring());
    return out;
  }
  int lo = b.p_lo() + b.q_lo(), hi = b.p_hi() + b.q_hi();
  const FinCategory& cat = b.site()->category();
  std::vector<ModPresheaf> levels;
  std::vector<PresheafMap> diffs;
  auto terms = [&](int n) {
    std::vector<int> ps;
    for (int p = b.p_lo(); p <= b.p_hi(); ++p)
      if (n - p >= b.q_lo() && n - p <= b.q_hi()) ps.push_back(p);
    return ps;
  };
  for (int n = lo; n <= hi; ++n) {
    std::vector<ModPresheaf> parts;
    for (int p : terms(n)) parts.push_back(b.level(p, n - p));
    levels.push_back(direct_sum(parts));
    if (n == lo) continue;
    std::vector<int> src = terms(n), dst = terms(n - 1);
    PresheafMap d;
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      std::vector<std::size_t> src_off, dst_off;
      std::size_t rows = 0, cols = 0;
      for (int p : dst) {
        dst_off.push_back(rows);
        rows += b.level(p, n - 1 - p).generators(c);
      }
      for (int p : src) {
        src_off.push_back(cols);
        cols += b.level(p, n - p).generators(c);
      }
      Matrix m(rows, cols);
      for (std::size_t j = 0; j < src.size(); ++j) {
        int p = src[j], q = n - p;
        for (std::size_t i = 0; i < dst.size(); ++i) {
          if (dst[i] == p - 1) paste(m, b.horizontal(p, q).components[c], dst_off[i], src_off[j]);
          if (dst[i] == p) paste(m, b.vertical(p, q).components[c], dst_off[i], src_off[j]);
        }
      }
      d.components.push_back(m);
    }
    diffs.push_back(d);
  }
  out.complex = Complex(b.site(), b.ring(), lo, levels, diffs);
  return out;
}

}  // namespace

Windowed tot_sum(const Bicomplex& b) { return totalize(b); }

Windowed tot_prod(const Bicomplex& b) { return totalize(b); }

}  // namespace sitecx
