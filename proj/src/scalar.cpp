#include "rrefkit/scalar.hpp"

#include <cctype>

#include "rrefkit/error.hpp"

namespace rrefkit {

namespace {

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

// Inverse of a nonzero residue by the extended Euclidean algorithm.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw InternalInvariantViolation("residue has no inverse; modulus is not prime");
  old_s %= static_cast<std::int64_t>(p);
  if (old_s < 0) old_s += p;
  return static_cast<std::uint32_t>(old_s);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= kModulusLimit) {
    throw InvalidOperation("modulus " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) throw InvalidOperation("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  return from_integer(field, mpz_class(static_cast<long>(value)));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
  if (field.is_prime_field()) return Scalar(field, reduce_mod(value, field.modulus()));
  return Scalar(field, mpq_class(value));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (field.is_prime_field()) {
    const std::uint32_t d = reduce_mod(den, field.modulus());
    if (d == 0) throw DivisionByZero("denominator is zero in " + field.name());
    return Scalar(field, reduce_mod(num, field.modulus())) * Scalar(field, d).inverse();
  }
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, std::move(q));
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return residue() == 1;
  return rational() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.is_prime_field()) return Scalar(field_, inverse_mod(residue(), field_.modulus()));
  return Scalar(field_, mpq_class(1) / rational());
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("cannot combine " + field_.name() + " with " + other.field_.name());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    const std::uint64_t sum = std::uint64_t{residue()} + rhs.residue();
    value_ = static_cast<std::uint32_t>(sum % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime_field()) {
    const std::uint64_t prod = std::uint64_t{residue()} * rhs.residue();
    value_ = static_cast<std::uint32_t>(prod % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar operator-(const Scalar& s) {
  if (s.field_.is_prime_field()) {
    const std::uint32_t r = s.residue();
    return Scalar(s.field_, r == 0 ? 0u : s.field_.modulus() - r);
  }
  return Scalar(s.field_, mpq_class(-s.rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string format_scalar(const Scalar& s) {
  if (s.field().is_prime_field()) return std::to_string(s.residue());
  const mpq_class& q = s.rational();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  const std::string literal(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_digits = body.substr(0, slash);
  const std::string_view den_digits =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num_digits) || (slash != std::string_view::npos && !all_digits(den_digits))) {
    throw ParseError("malformed scalar literal '" + literal + "'");
  }
  mpz_class num(std::string(num_digits), 10);
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Scalar::from_integer(field, num);
  return Scalar::from_fraction(field, num, mpz_class(std::string(den_digits), 10));
}

}  // namespace rrefkit
