#include "sitecx/exactalg/ring.hpp"

#include "sitecx/error.hpp"

namespace sitecx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::composition_nonzero: return "composition_nonzero";
    case ErrorCode::unknown_object: return "unknown_object";
    case ErrorCode::not_composable: return "not_composable";
    case ErrorCode::invalid_site: return "invalid_site";
    case ErrorCode::non_commuting_square: return "non_commuting_square";
    case ErrorCode::outside_validity: return "outside_validity";
    case ErrorCode::strategy_infeasible: return "strategy_infeasible";
    case ErrorCode::non_functorial: return "non_functorial";
    case ErrorCode::missing_points: return "missing_points";
    case ErrorCode::missing_fiber_product: return "missing_fiber_product";
    case ErrorCode::nonconnective: return "nonconnective";
    case ErrorCode::beyond_truncation: return "beyond_truncation";
    case ErrorCode::field_path_mismatch: return "field_path_mismatch";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Ring Ring::integers() { return Ring(RingKind::integers, 0); }

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::prime_field(unsigned long p) {
  mpz_class pz = p;
  require(p >= 2 && mpz_probab_prime_p(pz.get_mpz_t(), 30) != 0,
          ErrorCode::invalid_input,
          "prime field requires a prime characteristic, got " + pz.get_str());
  return Ring(RingKind::prime_field, pz);
}

std::string Ring::tag() const {
  switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::prime_field: return "F" + characteristic_.get_str();
  }
  return "?";
}

bool Ring::contains(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return true;
  return a.get_den() == 1;
}

Scalar Ring::normalize(const Scalar& a) const {
  switch (kind_) {
    case RingKind::rationals:
      return a;
    case RingKind::integers:
      if (a.get_den() != 1)
        fail(ErrorCode::field_path_mismatch,
             "non-integral entry " + a.get_str() + " over Z (rational data needs the field path, ring Q)");
      return a;
    case RingKind::prime_field: {
      mpz_class num = a.get_num();
      mpz_class den = a.get_den();
      if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), characteristic_.get_mpz_t()) == 0)
          fail(ErrorCode::field_path_mismatch, "denominator divisible by the characteristic: " + a.get_str());
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
      return Scalar(r);
    }
  }
  return a;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  Scalar s = a + b;
  if (kind_ == RingKind::prime_field && s >= characteristic_) s -= characteristic_;
  return s;
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  Scalar s = a - b;
  if (kind_ == RingKind::prime_field && sgn(s) < 0) s += characteristic_;
  return s;
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::prime_field) {
    mpz_class prod = a.get_num() * b.get_num();
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), characteristic_.get_mpz_t());
    return Scalar(r);
  }
  return a * b;
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ == RingKind::prime_field) return sgn(a) == 0 ? a : Scalar(characteristic_ - a.get_num());
  return -a;
}

bool Ring::is_unit(const Scalar& a) const {
  if (is_field()) return sgn(a) != 0;
  return a == 1 || a == -1;
}

Scalar Ring::inverse(const Scalar& a) const {
  require(is_unit(a), ErrorCode::internal, "inverse of a non-unit " + a.get_str());
  if (kind_ == RingKind::prime_field) {
    mpz_class inv;
    mpz_class num = a.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
    return Scalar(inv);
  }
  return 1 / a;
}

mpz_class Ring::norm(const Scalar& a) const {
  if (is_field()) return sgn(a) == 0 ? 0 : 1;
  return abs(a.get_num());
}

void Ring::divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const {
  require(sgn(b) != 0, ErrorCode::internal, "division by zero");
  if (is_field()) {
    q = mul(a, inverse(b));
    r = 0;
    return;
  }
  // Floor division keeps |r| < |b|.
  mpz_class qz, rz;
  mpz_class an = a.get_num(), bn = b.get_num();
  mpz_fdiv_qr(qz.get_mpz_t(), rz.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  q = Scalar(qz);
  r = Scalar(rz);
}

bool Ring::divides(const Scalar& d, const Scalar& a) const {
  if (sgn(d) == 0) return sgn(a) == 0;
  if (is_field()) return true;
  return mpz_divisible_p(mpq_numref(a.get_mpq_t()), mpq_numref(d.get_mpq_t())) != 0;
}

Scalar Ring::exact_div(const Scalar& a, const Scalar& d) const {
  require(divides(d, a), ErrorCode::internal, "inexact division");
  if (is_field()) return mul(a, inverse(d));
  mpz_class q;
  mpz_class an = a.get_num(), dn = d.get_num();
  mpz_divexact(q.get_mpz_t(), an.get_mpz_t(), dn.get_mpz_t());
  return Scalar(q);
}

Scalar Ring::unit_normalizer(const Scalar& a) const {
  if (sgn(a) == 0) return 1;
  if (is_field()) return inverse(a);
  return sgn(a) < 0 ? Scalar(-1) : Scalar(1);
}

Xgcd Ring::xgcd(const Scalar& a, const Scalar& b) const {
  if (is_field()) {
    if (sgn(a) != 0) return {1, inverse(a), 0};
    if (sgn(b) != 0) return {1, 0, inverse(b)};
    return {0, 1, 0};
  }
  mpz_class g, s, t;
  mpz_class an = a.get_num(), bn = b.get_num();
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  return {Scalar(g), Scalar(s), Scalar(t)};
}

Scalar Ring::reduce_mod(const Scalar& a, const Scalar& d) const {
  if (is_field()) return 0;
  mpz_class r;
  mpz_class an = a.get_num(), dn = abs(d.get_num());
  mpz_fdiv_r(r.get_mpz_t(), an.get_mpz_t(), dn.get_mpz_t());
  return Scalar(r);
}

Scalar Ring::parse(const std::string& text) const {
  Scalar value;
  require(!text.empty() && value.set_str(text, 10) == 0, ErrorCode::invalid_input,
          "not a decimal ring element: '" + text + "'");
  require(value.get_den() != 0, ErrorCode::invalid_input, "zero denominator in '" + text + "'");
  value.canonicalize();
  return normalize(value);
}

std::string Ring::format(const Scalar& a) { return a.get_str(); }

void require_same_ring(const Ring& a, const Ring& b) {
  require(a == b, ErrorCode::ring_mismatch,
          "ring mismatch: " + a.tag() + " vs " + b.tag());
}

}  // namespace sitecx
