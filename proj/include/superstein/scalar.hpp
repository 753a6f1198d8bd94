#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace superstein {

/// Exact field element: an arbitrary-precision rational, or a residue modulo
/// an odd prime.
///
/// A rational value combined with a residue is coerced into the residue field,
/// so integer literals (which construct rationals) mix freely with F_p data.
/// Combining residues of two different moduli is an error.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar rational(long num, long den);
  static Scalar residue(std::int64_t value, std::uint32_t modulus);

  /// 0 for rationals, p for F_p residues.
  std::uint32_t modulus() const { return mod_; }
  bool is_zero() const { return mod_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return mod_ ? r_ == 1 : q_ == 1; }

  /// Rational value; only valid when modulus() == 0.
  const mpq_class& rational_value() const;
  /// Residue in [0, p); only valid when modulus() != 0.
  std::int64_t residue_value() const;

  /// Coerce into the field with the given modulus (0 = Q).
  Scalar in_field(std::uint32_t modulus) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;
  void negate();

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2"; residues print as their canonical representative.
  std::string to_string() const;

private:
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
  void promote(std::uint32_t modulus);

  std::uint32_t mod_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;
};

/// (-1)^e as a scalar.
inline Scalar sign_of(int exponent) { return (exponent & 1) ? Scalar(-1) : Scalar(1); }

/// Field descriptor: Q or F_p for an odd prime p.
class Field {
public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is an odd prime.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  std::uint32_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }
  std::string name() const;

  Scalar from(const Scalar& s) const { return s.in_field(modulus_); }
  Scalar zero() const { return from(Scalar(0)); }
  Scalar one() const { return from(Scalar(1)); }

  friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

private:
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

/// Parses an integer or "p/q" coefficient.
Scalar parse_scalar(const std::string& text);

}  // namespace superstein
