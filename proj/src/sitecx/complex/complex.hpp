#pragma once

#include <climits>
#include <string>
#include <vector>

#include "sitecx/site/presheaf.hpp"

namespace sitecx {

/// Bounded chain complex of module presheaves living in degrees [lo, hi];
/// the differential in degree n maps K_n → K_{n−1}. An empty window
/// (lo > hi) is the zero complex.
class Complex {
 public:
  Complex() = default;
  /// `diffs[k]` is the differential out of degree lo+k+1.
  Complex(SitePtr site, Ring ring, int lo, std::vector<ModPresheaf> levels, std::vector<PresheafMap> diffs);

  static Complex zero(SitePtr site, const Ring& ring);
  /// S^n F.
  static Complex concentrated(const ModPresheaf& f, int n);
  /// Complex of Λ-modules on the terminal site from modules and matrices.
  static Complex of_modules(const Ring& ring, int lo, const std::vector<FpModule>& levels,
                            const std::vector<Matrix>& diffs);

  const SitePtr& site() const { return site_; }
  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool empty_window() const { return lo_ > hi_; }
  bool in_window(int n) const { return n >= lo_ && n <= hi_; }

  /// Zero presheaf outside the window.
  const ModPresheaf& level(int n) const;
  /// K_n → K_{n−1}; zero outside the window.
  PresheafMap differential(int n) const;
  bool is_zero() const;

  /// The complex of Λ-modules K(c) on the terminal site.
  Complex evaluate(ObjectId c) const;
  /// (K[p])_n = K_{p+n} with differential (−1)^p d.
  Complex shift(int p) const;
  /// Drops zero levels at both ends of the window.
  Complex trimmed() const;
  /// Same complex with its window widened to contain [lo, hi].
  Complex widened(int lo, int hi) const;

 private:
  SitePtr site_;
  Ring ring_ = Ring::integers();
  int lo_ = 0;
  int hi_ = -1;
  std::vector<ModPresheaf> levels_;
  std::vector<PresheafMap> diffs_;
  ModPresheaf zero_;
};

/// Chain map; components cover the union of the two windows.
struct ComplexMorphism {
  Complex source;
  Complex target;
  int lo = 0;
  std::vector<PresheafMap> components;

  ComplexMorphism() = default;
  ComplexMorphism(Complex source, Complex target, int lo, std::vector<PresheafMap> components);

  static ComplexMorphism zero(const Complex& source, const Complex& target);
  static ComplexMorphism identity(const Complex& k);

  int hi() const { return lo + static_cast<int>(components.size()) - 1; }
  /// Zero outside the stored range.
  PresheafMap component(int n) const;
  /// Checks shapes, naturality and commutation with differentials.
  void require_chain_map() const;
};

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);
bool morphisms_equal(const ComplexMorphism& a, const ComplexMorphism& b);

Complex direct_sum(const Complex& a, const Complex& b);
/// Degreewise surjectivity/injectivity over [lo, hi].
bool is_degreewise_surjective(const ComplexMorphism& f, int lo, int hi);
bool is_degreewise_injective(const ComplexMorphism& f, int lo, int hi);

/// Union of the windows of source and target.
std::pair<int, int> union_window(const ComplexMorphism& f);

/// A computed complex together with the degrees in which its homology is
/// exact (not affected by truncation).
struct Windowed {
  Complex complex;
  int valid_lo = INT_MIN;
  int valid_hi = INT_MAX;
  bool valid(int n) const { return n >= valid_lo && n <= valid_hi; }
  /// Throws outside_validity when n is not certified.
  void require_valid(int n, const std::string& what) const;
};

std::string window_string(int lo, int hi);

}  // namespace sitecx
