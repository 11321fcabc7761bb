#pragma once

/**
 * @file field.hpp
 * @brief Exact scalars over GF(p) (p prime) and over the rationals.
 *
 * A FieldSpec names the field; a FieldElement carries its spec so that mixing
 * elements of different fields is caught at the operation rather than silently
 * producing garbage. Rationals are arbitrary precision (GMP), so elimination
 * over Q never overflows.
 *
 * Text grammar (shared with the matrix file format):
 *   - rationals:    [+-]digits[/[+-]digits]    e.g. "3", "-1/2", "2/-4"
 *   - prime fields: [+-]digits                 reduced mod p, e.g. "9" in GF(7) is 2
 * Formatting is canonical: "n" or "n/d" with d > 0 in lowest terms, and the
 * reduced residue for prime fields.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace isodim {

class FieldSpec {
 public:
  enum class Kind { prime, rationals };

  /// GF(p). Throws DomainError unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

  /// Parses "GF(p)" or "Q".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  /// p for GF(p); 0 for the rationals.
  std::uint64_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// Largest modulus accepted by FieldSpec::prime; keeps residue products in 64 bits.
inline constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;

bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  /// The integer `value` mapped into the field (reduced mod p for GF(p)).
  FieldElement(const FieldSpec& spec, std::int64_t value);
  /// Rational n/d; for GF(p) this is n * d^-1. Throws on d = 0.
  FieldElement(const FieldSpec& spec, const mpz_class& numerator, const mpz_class& denominator);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

  static FieldElement parse(std::string_view text, const FieldSpec& spec);
  std::string format() const;

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only meaningful for prime fields.
  std::uint64_t residue() const;
  /// Normalized rational value. Only meaningful for the rationals.
  const mpq_class& rational() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inv() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Arbitrary but fixed total order (residue order / rational order). Not a field order;
  /// exists so vectors can be stored in ordered sets.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  FieldSpec spec_;
  std::variant<std::uint64_t, mpq_class> value_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement div(const FieldElement& a, const FieldElement& b) { return a / b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }

/// Coordinate vector in F^m. All entries share one FieldSpec.
using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldSpec& spec, std::size_t length);
/// e_index in F^length.
Vector unit_vector(const FieldSpec& spec, std::size_t length, std::size_t index);
bool is_zero_vector(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const FieldElement& scalar, const Vector& v);

/// "(a,b,c)".
std::string format_vector(const Vector& v);
/// Comma-separated scalars, e.g. "1,-1/2,0". Empty text is the empty vector.
Vector parse_vector(std::string_view text, const FieldSpec& spec);

}  // namespace isodim
