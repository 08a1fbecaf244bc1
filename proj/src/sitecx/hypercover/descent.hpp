#pragma once

#include "sitecx/complex/bicomplex.hpp"
#include "sitecx/hypercover/hypercover.hpp"

namespace sitecx {

/// Element x of a hypercover level over d written as g*(generator of summand t).
struct SummandLocation {
  std::size_t summand;
  MorphismId morphism;  // d → object of the summand
};
/// [d][x] for level n.
std::vector<std::vector<SummandLocation>> locate_summands(const Hypercover& x, int n);

struct DescentDegree {
  int degree = 0;
  bool holds = true;
  ModuleInvariants source;  // H_n K(c)
  ModuleInvariants target;  // H_n K(c_•)
};

struct DescentReport {
  std::vector<DescentDegree> degrees;
  int valid_lo = 0;
  int valid_hi = 0;
  Windowed total;              // product totalization of K(c_•)
  ComplexMorphism comparison;  // K(c) → K(c_•)

  bool holds() const;
  std::vector<int> obstructions() const;
  /// Throws outside_validity for uncertified degrees.
  const DescentDegree& at(int n) const;
};

/// The cosimplicial complex K(c_0) ⇉ K(c_1) … with K(⊔dᵢ) = ∏K(dᵢ),
/// as a bicomplex of Λ-modules with the cosimplicial index in negative
/// horizontal degrees.
Bicomplex cosimplicial_bicomplex(const Complex& k, const Hypercover& x);

/// Compares H_n K(c) → H_n Tot K(c_•) on n ≥ hi(K) − N + 1.
DescentReport descent_check(const Complex& k, const Hypercover& x);

}  // namespace sitecx
