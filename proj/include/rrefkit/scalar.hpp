#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace rrefkit {

/// The concrete field a computation runs over: the rationals, or GF(p).
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  // Largest accepted modulus (exclusive). Primality is checked by trial
  // division, so moduli stay desk-scale.
  static constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 31;

  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws InvalidOperation unless `p` is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);

  [[nodiscard]] constexpr Kind kind() const { return kind_; }
  [[nodiscard]] constexpr bool is_rationals() const { return kind_ == Kind::Rationals; }
  [[nodiscard]] constexpr bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  /// Zero for the rationals.
  [[nodiscard]] constexpr std::uint32_t modulus() const { return modulus_; }

  [[nodiscard]] std::string name() const;

  friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  constexpr FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rationals;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec.
///
/// Rationals are kept canonical (coprime, positive denominator, zero is 0/1);
/// prime-field residues are kept in [0, p). Every operation between scalars of
/// different fields throws FieldMismatch.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
  /// num/den in `field`; throws DivisionByZero when den is zero in that field.
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  /// Precondition: field().is_rationals().
  [[nodiscard]] const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Precondition: field().is_prime_field().
  [[nodiscard]] std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

  /// Throws DivisionByZero for zero.
  [[nodiscard]] Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Scalar operator-(const Scalar& s);

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(const FieldSpec& field, std::uint32_t residue) : field_(field), value_(residue) {}
  Scalar(const FieldSpec& field, mpq_class value) : field_(field), value_(std::move(value)) {}

  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar neg(const Scalar& a) { return -a; }
inline Scalar inv(const Scalar& a) { return a.inverse(); }

/// Canonical text: "a" or "a/b" for rationals, the least nonnegative residue
/// for GF(p).
std::string format_scalar(const Scalar& s);

/// Grammar: optional '-', decimal digits, optional '/' and decimal digits.
/// Throws ParseError on malformed text and DivisionByZero on a zero
/// denominator (including a denominator divisible by p over GF(p)).
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace rrefkit
