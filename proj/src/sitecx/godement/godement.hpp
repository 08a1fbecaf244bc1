#pragma once

#include "sitecx/complex/bicomplex.hpp"
#include "sitecx/godement/points.hpp"

namespace sitecx {

/// G^q = T^{q+1}K for q = 0..q_max with cofaces Tⁱη and codegeneracies Tⁱμ.
struct CosimplicialComplex {
  int q_max = 0;
  std::vector<Complex> levels;
  std::vector<std::vector<ComplexMorphism>> cofaces;         // [q][i] : G^{q−1} → G^q, q ≥ 1
  std::vector<std::vector<ComplexMorphism>> codegeneracies;  // [q][i] : G^{q+1} → G^q, q < q_max
  ComplexMorphism coaugmentation;                            // K → G^0

  /// Cosimplicial identities and the coaugmentation condition.
  void require_valid() const;
};

/// Per degree m of K, the iterates F_j = T^j K_m with their point data.
struct GodementTower {
  std::vector<ModPresheaf> iterates;    // j = 0..q_max+2
  std::vector<PointProduct> products;   // products[j] is the point product of iterates[j]
};

struct GodementResolution {
  Complex source;
  int q_max = 0;
  std::vector<GodementTower> towers;  // per degree of source
  CosimplicialComplex cosimplicial;
  std::vector<Complex> normalized;               // N^q as complexes
  std::vector<std::vector<SubPresheaf>> parts;   // [q][m − lo] N^q_m inside G^q_m
  Windowed total;                                // god K
  ComplexMorphism unit;                          // K → god K
};

CosimplicialComplex godement_cosimplicial(const Complex& k, int q_max);
GodementResolution godement_resolution(const Complex& k, int q_max);
/// god(f) between two resolutions with the same q_max.
ComplexMorphism godement_map(const GodementResolution& a, const GodementResolution& b, const ComplexMorphism& f);

}  // namespace sitecx
