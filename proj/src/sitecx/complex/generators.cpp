#include "sitecx/complex/generators.hpp"

#include <functional>

#include "sitecx/error.hpp"

namespace sitecx {

namespace {

PresheafMap objectwise(const ModPresheaf& domain, const std::function<Matrix(std::size_t)>& block) {
  PresheafMap out;
  for (ObjectId c = 0; c < domain.site()->object_count(); ++c) out.components.push_back(block(domain.generators(c)));
  return out;
}

Matrix diagonal_minus(std::size_t g) {
  return vstack(Matrix::identity(g), negate(Ring::integers(), Matrix::identity(g)));
}

Matrix first_projection(std::size_t g) { return hstack(Matrix::identity(g), Matrix(g, g)); }

ComplexMorphism morphism(const Complex& s, const Complex& t, int n, std::vector<PresheafMap> comps) {
  ComplexMorphism f(s, t, n, std::move(comps));
  f.require_chain_map();
  return f;
}

}  // namespace

Complex build_generator(const SitePtr& site, const Ring& ring, const GeneratorSpec& spec) {
  require(spec.object < site->object_count(), ErrorCode::unknown_object, "generator object out of range");
  ModPresheaf lam = ModPresheaf::representable(site, ring, spec.object);
  ModPresheaf two = direct_sum(std::vector<ModPresheaf>{lam, lam});
  int n = spec.degree;
  switch (spec.kind) {
    case GeneratorKind::S:
      return Complex::concentrated(lam, n);
    case GeneratorKind::D:
      return Complex(site, ring, n - 1, {lam, lam}, {PresheafMap::identity(lam)});
    case GeneratorKind::Delta:
      return Complex(site, ring, n - 1, {two, lam},
                     {objectwise(lam, [&](std::size_t g) { return normalized(ring, diagonal_minus(g)); })});
    case GeneratorKind::BoundaryDelta:
      return Complex::concentrated(two, n - 1);
  }
  fail(ErrorCode::internal, "unknown generator kind");
}

std::string generator_name(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::S: return "S^" + std::to_string(spec.degree);
    case GeneratorKind::D: return "D^" + std::to_string(spec.degree);
    case GeneratorKind::Delta: return "Delta^" + std::to_string(spec.degree);
    case GeneratorKind::BoundaryDelta: return "dDelta^" + std::to_string(spec.degree);
  }
  return "?";
}

ComplexMorphism generator_morphism(const SitePtr& site, const Ring& ring, GeneratorMorphismKind kind, int n,
                                   ObjectId c) {
  ModPresheaf lam = ModPresheaf::representable(site, ring, c);
  switch (kind) {
    case GeneratorMorphismKind::I: {
      Complex s = build_generator(site, ring, {GeneratorKind::S, n - 1, c});
      Complex d = build_generator(site, ring, {GeneratorKind::D, n, c});
      return morphism(s, d, n - 1, {PresheafMap::identity(lam), PresheafMap::zero(ModPresheaf::zero(site, ring), lam)});
    }
    case GeneratorMorphismKind::J: {
      Complex d = build_generator(site, ring, {GeneratorKind::D, n, c});
      return ComplexMorphism::zero(Complex::zero(site, ring), d);
    }
    case GeneratorMorphismKind::IPrime: {
      Complex b = build_generator(site, ring, {GeneratorKind::BoundaryDelta, n, c});
      Complex t = build_generator(site, ring, {GeneratorKind::Delta, n, c});
      ModPresheaf two = t.level(n - 1);
      return morphism(b, t, n - 1, {PresheafMap::identity(two), PresheafMap::zero(ModPresheaf::zero(site, ring), lam)});
    }
  }
  fail(ErrorCode::internal, "unknown generator morphism kind");
}

IPrimeRetract iprime_retract(const SitePtr& site, const Ring& ring, int n, ObjectId c) {
  ModPresheaf lam = ModPresheaf::representable(site, ring, c);
  Complex sn = build_generator(site, ring, {GeneratorKind::S, n, c});
  Complex dn = build_generator(site, ring, {GeneratorKind::D, n + 1, c});
  Complex bd = build_generator(site, ring, {GeneratorKind::BoundaryDelta, n + 1, c});
  Complex de = build_generator(site, ring, {GeneratorKind::Delta, n + 1, c});
  auto diag = objectwise(lam, [&](std::size_t g) { return normalized(ring, diagonal_minus(g)); });
  auto proj = objectwise(lam, [](std::size_t g) { return first_projection(g); });
  auto id = PresheafMap::identity(lam);
  IPrimeRetract out;
  out.i = generator_morphism(site, ring, GeneratorMorphismKind::I, n + 1, c);
  out.i_prime = generator_morphism(site, ring, GeneratorMorphismKind::IPrime, n + 1, c);
  out.top_in = morphism(sn, bd, n, {diag});
  out.top_out = morphism(bd, sn, n, {proj});
  out.r = morphism(dn, de, n, {diag, id});
  out.s = morphism(de, dn, n, {proj, id});
  return out;
}

RetractCheck verify_retract(const IPrimeRetract& x) {
  RetractCheck out;
  try {
    for (const auto* f : {&x.i, &x.i_prime, &x.top_in, &x.top_out, &x.r, &x.s}) f->require_chain_map();
    out.chain_maps = true;
  } catch (const Error&) {
    out.chain_maps = false;
  }
  out.rows_identity = morphisms_equal(compose(x.top_out, x.top_in), ComplexMorphism::identity(x.i.source)) &&
                      morphisms_equal(compose(x.s, x.r), ComplexMorphism::identity(x.i.target));
  out.commutes = morphisms_equal(compose(x.i_prime, x.top_in), compose(x.r, x.i)) &&
                 morphisms_equal(compose(x.i, x.top_out), compose(x.s, x.i_prime));
  return out;
}

}  // namespace sitecx
