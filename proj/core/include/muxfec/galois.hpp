// Arithmetic in a prime field GF(q) and its quadratic extension GF(q^2).
//
// Elements of GF(q^2) are stored as lo + hi*x with x a root of the monic
// quadratic x^2 + c1*x + c0. Base-field elements are exactly those with
// hi == 0, so one element type serves both fields.
#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace muxfec {

/// Raised when two operands come from different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the inverse of zero.
class ZeroInverse : public std::domain_error {
 public:
  ZeroInverse() : std::domain_error("no inverse of zero") {}
};

bool is_prime(std::uint32_t value);

/// Smallest prime >= value.
std::uint32_t next_prime(std::uint32_t value);

/// Smallest quadratic non-residue modulo an odd prime q.
std::uint32_t smallest_non_residue(std::uint32_t q);

/// GF(q) together with the quadratic x^2 + c1*x + c0 defining GF(q^2).
struct FieldSpec {
  std::uint32_t q = 2;
  std::uint32_t c1 = 1;
  std::uint32_t c0 = 1;

  /// Validated construction: q prime (< 2^16), c0/c1 reduced, and the
  /// quadratic has no root in GF(q).
  static FieldSpec make(std::uint32_t q, std::uint32_t c1, std::uint32_t c0);

  /// x^2 - r with r the smallest non-residue mod q; x^2 + x + 1 for q = 2.
  static FieldSpec with_default_extension(std::uint32_t q);

  std::uint32_t extension_order() const { return q * q; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec& field, std::uint32_t lo, std::uint32_t hi = 0);

  static FieldElement zero(const FieldSpec& field) { return {field, 0, 0}; }
  static FieldElement one(const FieldSpec& field) { return {field, 1, 0}; }
  /// The class of x itself, i.e. integer code q.
  static FieldElement generator(const FieldSpec& field) { return {field, 0, 1}; }
  /// Inverse of code(): decodes hi*q + lo.
  static FieldElement from_code(const FieldSpec& field, std::uint32_t code);

  std::uint32_t lo() const { return lo_; }
  std::uint32_t hi() const { return hi_; }
  const FieldSpec& field() const { return field_; }

  /// Integer display code hi*q + lo.
  std::uint32_t code() const { return hi_ * field_.q + lo_; }

  bool is_zero() const { return lo_ == 0 && hi_ == 0; }
  bool is_one() const { return lo_ == 1 && hi_ == 0; }
  bool in_base_field() const { return hi_ == 0; }

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void check_same_field(const FieldElement& other) const;

  FieldSpec field_{};
  std::uint32_t lo_ = 0;
  std::uint32_t hi_ = 0;
};

// Free-function spellings of the field operations.
FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_inv(const FieldElement& a);
bool in_base_field(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace muxfec
