#pragma once

#include "sitecx/complex/complex.hpp"
#include "sitecx/site/stalk.hpp"

namespace sitecx {

/// TF = a_*a*F with (TF)(c) = ∏_{p ∈ c} F_p and projections as restrictions.
struct PointProduct {
  ModPresheaf source;
  ModPresheaf value;
  std::vector<Stalk> stalks;                      // per site point
  std::vector<std::vector<std::size_t>> points;   // [c] point indices in c
  std::vector<std::vector<std::size_t>> offsets;  // [c][k] offset of the k-th point's factor
};

PointProduct point_product(const ModPresheaf& f);
/// η : F → TF assembled from germ maps.
PresheafMap point_unit(const PointProduct& t);
/// Tφ : TF → TG.
PresheafMap point_map(const PointProduct& tf, const PointProduct& tg, const PresheafMap& phi);
/// μ : TTF → TF, where `tt` is the point product of TF.
PresheafMap point_multiplication(const PointProduct& t, const PointProduct& tt);

struct PointComplex {
  Complex complex;        // a_*a*K
  ComplexMorphism unit;   // K → a_*a*K
};
PointComplex point_pullback_pushforward(const Complex& k);

}  // namespace sitecx
