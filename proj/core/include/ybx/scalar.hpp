#ifndef YBX_SCALAR_HPP
#define YBX_SCALAR_HPP

/**
 * @file scalar.hpp
 * @brief Exact field arithmetic over the rationals and prime fields F_p.
 *
 * Every computation in this library is an exact identity of linear maps, so
 * scalars are exact field elements: arbitrary-precision rationals (GMP) or
 * residues modulo a prime. There are no floating-point scalars and no
 * tolerances anywhere.
 *
 * Scalars from different fields are never combined; mixing them throws
 * FieldMismatch instead of coercing.
 */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ybx/errors.hpp"

namespace ybx {

/// Ground field descriptor: the rationals, or F_p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }

  /// F_p; primality is checked by trial division (throws NonPrimeModulus).
  static Field mod(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_modp() const { return p_ != 0; }
  std::uint32_t prime() const { return p_; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

  std::string str() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 encodes Q
};

/**
 * An immutable exact field element.
 *
 * Rationals are kept in lowest terms with positive denominator; residues in
 * [0, p).  Equal values therefore have identical representations.
 */
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long n);

  /// Rational num/den in Q (canonicalized).  den must be nonzero.
  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);

  /// Residue class of n in F_p.
  static Scalar residue(const Field& f, long long n);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Rational value (only for Q scalars).
  const mpq_class& rational_value() const;
  /// Residue value in [0, p) (only for F_p scalars).
  std::uint64_t residue_value() const;

  /// "num/den" (or plain integer) for Q; decimal residue for F_p.
  std::string str() const;

  /// Inverse of str(); accepts "a/b" and plain integers for both fields.
  static Scalar parse(const Field& f, const std::string& text);

 private:
  Scalar(const Field& f, mpq_class q) : field_(f), rat_(std::move(q)), res_(0) {}
  Scalar(const Field& f, std::uint64_t r) : field_(f), rat_(0), res_(r) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;       // valid iff field_.is_rational()
  std::uint64_t res_ = 0;  // valid iff field_.is_modp()
};

}  // namespace ybx

#endif
