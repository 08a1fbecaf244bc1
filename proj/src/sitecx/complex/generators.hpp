#pragma once

#include "sitecx/complex/complex.hpp"

namespace sitecx {

enum class GeneratorKind { S, D, Delta, BoundaryDelta };
enum class GeneratorMorphismKind { I, J, IPrime };

struct GeneratorSpec {
  GeneratorKind kind;
  int degree;
  ObjectId object;
};

/// S^nΛ(c), D^nΛ(c), Δ^nΛ(c) = (Λ(c) → Λ(c)⊕Λ(c) by id×(−id)) in degrees
/// n, n−1, and ∂Δ^nΛ(c) = Λ(c)⊕Λ(c) in degree n−1.
Complex build_generator(const SitePtr& site, const Ring& ring, const GeneratorSpec& spec);
std::string generator_name(const GeneratorSpec& spec);

/// I: S^{n−1}Λ(c) → D^nΛ(c), J: 0 → D^nΛ(c), I′: ∂Δ^nΛ(c) → Δ^nΛ(c).
ComplexMorphism generator_morphism(const SitePtr& site, const Ring& ring, GeneratorMorphismKind kind, int n,
                                   ObjectId c);

/// Exhibits S^n → D^{n+1} as a retract of ∂Δ^{n+1} → Δ^{n+1}.
struct IPrimeRetract {
  ComplexMorphism i;        // S^n → D^{n+1}
  ComplexMorphism i_prime;  // ∂Δ^{n+1} → Δ^{n+1}
  ComplexMorphism top_in;   // S^n → ∂Δ^{n+1}, id×(−id)
  ComplexMorphism top_out;  // ∂Δ^{n+1} → S^n, (id, 0)
  ComplexMorphism r;        // D^{n+1} → Δ^{n+1}
  ComplexMorphism s;        // Δ^{n+1} → D^{n+1}
};

IPrimeRetract iprime_retract(const SitePtr& site, const Ring& ring, int n, ObjectId c);

struct RetractCheck {
  bool rows_identity = false;  // top_out∘top_in = id and s∘r = id
  bool commutes = false;       // both squares commute
  bool chain_maps = false;
};
RetractCheck verify_retract(const IPrimeRetract& retract);

}  // namespace sitecx
