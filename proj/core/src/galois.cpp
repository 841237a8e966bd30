#include "muxfec/galois.hpp"

#include <sstream>

namespace muxfec {
namespace {

constexpr std::uint32_t kMaxModulus = 1u << 16;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint32_t value) {
  if (value < 2) return false;
  for (std::uint32_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::uint32_t next_prime(std::uint32_t value) {
  while (!is_prime(value)) ++value;
  return value;
}

std::uint32_t smallest_non_residue(std::uint32_t q) {
  if (q < 3 || !is_prime(q)) {
    throw std::invalid_argument("smallest_non_residue needs an odd prime, got " + std::to_string(q));
  }
  for (std::uint32_t r = 2; r < q; ++r) {
    if (pow_mod(r, (q - 1) / 2, q) == q - 1) return r;
  }
  throw std::logic_error("no quadratic non-residue found");  // unreachable for odd primes
}

FieldSpec FieldSpec::make(std::uint32_t q, std::uint32_t c1, std::uint32_t c0) {
  if (!is_prime(q)) throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
  if (q >= kMaxModulus) throw std::invalid_argument("field modulus " + std::to_string(q) + " exceeds 2^16");
  if (c1 >= q || c0 >= q) throw std::invalid_argument("extension coefficients must lie in [0, q)");
  for (std::uint64_t r = 0; r < q; ++r) {
    if ((r * r + c1 * r + c0) % q == 0) {
      throw std::invalid_argument("extension polynomial has root " + std::to_string(r) + " in GF(" +
                                  std::to_string(q) + ")");
    }
  }
  FieldSpec spec;
  spec.q = q;
  spec.c1 = c1;
  spec.c0 = c0;
  return spec;
}

FieldSpec FieldSpec::with_default_extension(std::uint32_t q) {
  if (q == 2) return make(2, 1, 1);
  if (!is_prime(q)) throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
  // x^2 - r  ==  x^2 + 0*x + (q - r)
  return make(q, 0, q - smallest_non_residue(q));
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) {
  return os << "GF(" << spec.q << "^2)[x^2+" << spec.c1 << "x+" << spec.c0 << "]";
}

FieldElement::FieldElement(const FieldSpec& field, std::uint32_t lo, std::uint32_t hi)
    : field_(field), lo_(lo % field.q), hi_(hi % field.q) {}

FieldElement FieldElement::from_code(const FieldSpec& field, std::uint32_t code) {
  if (code >= field.extension_order()) {
    throw std::out_of_range("display code " + std::to_string(code) + " outside GF(" +
                            std::to_string(field.q) + "^2)");
  }
  return {field, code % field.q, code / field.q};
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    std::ostringstream msg;
    msg << "field mismatch: " << field_ << " vs " << other.field_;
    throw FieldMismatch(msg.str());
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  lo_ = (lo_ + rhs.lo_) % field_.q;
  hi_ = (hi_ + rhs.hi_) % field_.q;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  lo_ = (lo_ + field_.q - rhs.lo_) % field_.q;
  hi_ = (hi_ + field_.q - rhs.hi_) % field_.q;
  return *this;
}

FieldElement FieldElement::operator-() const {
  return {field_, (field_.q - lo_) % field_.q, (field_.q - hi_) % field_.q};
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  const std::uint64_t q = field_.q;
  const std::uint64_t a0 = lo_, a1 = hi_, b0 = rhs.lo_, b1 = rhs.hi_;
  // x^2 = -c1*x - c0
  const std::uint64_t top = a1 * b1 % q;
  const std::uint64_t lo = (a0 * b0 + (q - field_.c0) * top) % q;
  const std::uint64_t hi = (a0 * b1 + a1 * b0 + (q - field_.c1) * top) % q;
  lo_ = static_cast<std::uint32_t>(lo);
  hi_ = static_cast<std::uint32_t>(hi);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ZeroInverse();
  const std::uint64_t q = field_.q;
  const std::uint64_t a0 = lo_, a1 = hi_;
  // Conjugate (a0 - c1*a1) - a1*x; norm a0^2 - c1*a0*a1 + c0*a1^2 lies in GF(q).
  const std::uint64_t norm = (a0 * a0 + (q - field_.c1) * (a0 * a1 % q) + field_.c0 * (a1 * a1 % q)) % q;
  const std::uint64_t norm_inv = pow_mod(norm, q - 2, q);
  const std::uint64_t conj_lo = (a0 + (q - field_.c1) * a1) % q;
  const std::uint64_t conj_hi = (q - a1) % q;
  return {field_, static_cast<std::uint32_t>(conj_lo * norm_inv % q),
          static_cast<std::uint32_t>(conj_hi * norm_inv % q)};
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement ff_inv(const FieldElement& a) { return a.inverse(); }
bool in_base_field(const FieldElement& a) { return a.in_base_field(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.code(); }

}  // namespace muxfec
