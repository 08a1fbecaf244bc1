#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

/// Edges of the window beyond which the represented (infinite) bicomplex
/// may have further nonzero terms.
struct OpenEdges {
  bool p_low = false;
  bool p_high = false;
  bool q_low = false;
  bool q_high = false;
};

/// Bicomplex B_{p,q} on a rectangular window with horizontal
/// d_h: B_{p,q} → B_{p−1,q} and vertical d_v: B_{p,q} → B_{p,q−1} that
/// anticommute.
class Bicomplex {
 public:
  Bicomplex(SitePtr site, Ring ring, int p_lo, int p_hi, int q_lo, int q_hi, OpenEdges open = {});

  /// Builds B from a grid of columns and commuting horizontal maps,
  /// applying the sign (−1)^p to the vertical differential of column p.
  static Bicomplex from_commuting(const std::vector<Complex>& columns, int p_lo,
                                  const std::vector<std::vector<PresheafMap>>& horizontal, int q_lo, int q_hi,
                                  OpenEdges open = {});

  int p_lo() const { return p_lo_; }
  int p_hi() const { return p_hi_; }
  int q_lo() const { return q_lo_; }
  int q_hi() const { return q_hi_; }
  const OpenEdges& open() const { return open_; }
  const SitePtr& site() const { return site_; }
  const Ring& ring() const { return ring_; }

  const ModPresheaf& level(int p, int q) const;
  PresheafMap horizontal(int p, int q) const;
  PresheafMap vertical(int p, int q) const;

  void set_level(int p, int q, ModPresheaf f);
  void set_horizontal(int p, int q, PresheafMap d);
  void set_vertical(int p, int q, PresheafMap d);
  /// Checks d_h² = 0, d_v² = 0 and d_h d_v + d_v d_h = 0.
  void require_valid() const;

  /// Total degrees whose homology does not see the open edges.
  std::pair<int, int> valid_window() const;

 private:
  bool inside(int p, int q) const { return p >= p_lo_ && p <= p_hi_ && q >= q_lo_ && q <= q_hi_; }
  std::size_t index(int p, int q) const;

  SitePtr site_;
  Ring ring_;
  int p_lo_, p_hi_, q_lo_, q_hi_;
  OpenEdges open_;
  std::vector<ModPresheaf> levels_;
  std::vector<std::optional<PresheafMap>> dh_, dv_;
  ModPresheaf zero_;
};

/// Direct-sum and product totalizations; T_n = ⊕_{p+q=n} B_{p,q} ordered by
/// p, with d = d_h + d_v. On finite windows both agree; they differ in the
/// validity bookkeeping only through the open edges.
Windowed tot_sum(const Bicomplex& b);
Windowed tot_prod(const Bicomplex& b);

}  // namespace sitecx
