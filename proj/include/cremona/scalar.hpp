#ifndef CREMONA_SCALAR_HPP
#define CREMONA_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

enum class FieldKind { Rationals, PrimeField };

// Base-field descriptor: the rationals, or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint32_t p);
  // "q" for the rationals, "fp:<p>" for a prime field.
  static Field parse(std::string_view selector);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  std::string str() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

// An exact field element. Rationals are reduced fractions with positive
// denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : fld_(Field::rationals()), q_(0) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar rational(mpq_class q);  // canonicalizes
  static Scalar residue(const Field& f, const mpz_class& v);
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;
  // Sign over the rationals (-1, 0, 1); rejects prime fields.
  int sign() const;

  const mpq_class& rat() const { return q_; }
  std::uint64_t res() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on zero
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order used for canonical/deterministic iteration only; it is not a
  // field order.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  Scalar(Field f) : fld_(std::move(f)), q_(0), r_(0) {}
  static void require_same(const Scalar& a, const Scalar& b);
  Field fld_;
  mpq_class q_;         // Rationals payload
  std::uint64_t r_ = 0; // PrimeField payload, in [0, p)
};

struct PowerClass {
  bool is_nth_power = false;
  std::optional<Scalar> witness;  // w with w^n = a, when is_nth_power
};

// Decides membership of a in (k*)^n and produces an exact witness.
// Over the rationals this is total: a reduced fraction is an n-th power
// iff numerator and denominator are perfect integer n-th powers (with the
// sign admissible for the parity of n). Over F_p the multiplicative group
// is cyclic of order p-1 and the test reduces to a discrete logarithm.
PowerClass nth_power_class(const Scalar& a, std::uint64_t n);

}  // namespace cremona

#endif
