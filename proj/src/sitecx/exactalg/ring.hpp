#pragma once

#include <gmpxx.h>

#include <string>

namespace sitecx {

/// Ring elements. Integers and prime-field residues are stored with
/// denominator 1; prime-field residues live in [0, p).
using Scalar = mpq_class;

enum class RingKind { integers, rationals, prime_field };

struct Xgcd {
  Scalar gcd;  // canonical associate
  Scalar s;    // gcd = s*a + t*b
  Scalar t;
};

/// The coefficient ring Λ ∈ {ℤ, ℚ, 𝔽p}, viewed as a Euclidean domain.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring prime_field(unsigned long p);

  RingKind kind() const { return kind_; }
  const mpz_class& characteristic() const { return characteristic_; }
  bool is_field() const { return kind_ != RingKind::integers; }

  /// "Z", "Q" or "F<p>".
  std::string tag() const;

  bool contains(const Scalar& a) const;
  /// Maps a into the ring's canonical representative set; throws if a is
  /// not an element (e.g. 1/2 over ℤ).
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  /// Euclidean norm: |a| over ℤ, 0/1 over a field.
  mpz_class norm(const Scalar& a) const;
  /// a = q*b + r with norm(r) < norm(b); b nonzero.
  void divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const;
  bool divides(const Scalar& d, const Scalar& a) const;
  Scalar exact_div(const Scalar& a, const Scalar& d) const;
  /// Unit u with u*a canonical (positive over ℤ, 1 over a field).
  Scalar unit_normalizer(const Scalar& a) const;
  Scalar canonical(const Scalar& a) const { return mul(unit_normalizer(a), a); }
  Xgcd xgcd(const Scalar& a, const Scalar& b) const;
  /// Canonical representative of a modulo the ideal (d); d nonzero.
  Scalar reduce_mod(const Scalar& a, const Scalar& d) const;

  Scalar parse(const std::string& text) const;
  static std::string format(const Scalar& a);

  friend bool operator==(const Ring& x, const Ring& y) {
    return x.kind_ == y.kind_ && x.characteristic_ == y.characteristic_;
  }
  friend bool operator!=(const Ring& x, const Ring& y) { return !(x == y); }

 private:
  Ring(RingKind kind, mpz_class characteristic)
      : kind_(kind), characteristic_(std::move(characteristic)) {}

  RingKind kind_;
  mpz_class characteristic_;
};

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace sitecx
