#include "isodim/field.hpp"

#include <cctype>

#include "isodim/errors.hpp"

namespace isodim {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [+-]digits
bool parse_signed_integer(std::string_view text, mpz_class& out) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) return false;
  out = mpz_class(std::string(digits), 10);
  if (negative) out = -out;
  return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p < 2^32 so no overflow
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw FieldMismatchError("field mismatch: " + a.to_string() + " vs " + b.to_string());
  }
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

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxModulus) {
    throw UnsupportedFieldError("modulus too large: " + std::to_string(p));
  }
  if (!isodim::is_prime(p)) {
    throw DomainError("GF(" + std::to_string(p) + ") is not a field: modulus is not prime");
  }
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    if (all_digits(digits) && digits.size() <= 19) {
      return prime(std::stoull(std::string(digits)));
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected GF(p) or Q)");
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::rationals) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

FieldElement::FieldElement(const FieldSpec& spec, std::int64_t value) : spec_(spec) {
  if (spec.is_prime()) {
    const auto p = static_cast<std::int64_t>(spec.modulus());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpz_class& numerator,
                           const mpz_class& denominator)
    : spec_(spec) {
  if (denominator == 0) throw DivisionByZeroError("zero denominator");
  if (spec.is_prime()) {
    const std::uint64_t p = spec.modulus();
    const std::uint64_t d = reduce(denominator, p);
    if (d == 0) throw DivisionByZeroError("denominator is zero in " + spec.to_string());
    value_ = (reduce(numerator, p) * inverse_mod(d, p)) % p;
  } else {
    mpq_class q(numerator, denominator);
    q.canonicalize();
    value_ = std::move(q);
  }
}

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& spec) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_signed_integer(text, num)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
  } else {
    if (spec.is_prime()) {
      throw ParseError("fractions are not accepted in " + spec.to_string() + ": '" +
                       std::string(text) + "'");
    }
    if (!parse_signed_integer(text.substr(0, slash), num) ||
        !parse_signed_integer(text.substr(slash + 1), den)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    if (den == 0) throw DivisionByZeroError("zero denominator in '" + std::string(text) + "'");
  }
  return FieldElement(spec, num, den);
}

std::string FieldElement::format() const {
  if (spec_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool FieldElement::is_zero() const {
  if (spec_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (spec_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const {
  if (!spec_.is_prime()) throw UnsupportedFieldError("residue() on a rational");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& FieldElement::rational() const {
  if (spec_.is_prime()) throw UnsupportedFieldError("rational() on a prime-field element");
  return std::get<mpq_class>(value_);
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(spec_, rhs.spec_);
  FieldElement out = *this;
  if (spec_.is_prime()) {
    out.value_ = (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_)) %
                 spec_.modulus();
  } else {
    out.value_ = mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_));
  }
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(spec_, rhs.spec_);
  FieldElement out = *this;
  if (spec_.is_prime()) {
    out.value_ = (std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(rhs.value_)) %
                 spec_.modulus();
  } else {
    out.value_ = mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_));
  }
  return out;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(spec_, rhs.spec_);
  return *this * rhs.inv();
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (spec_.is_prime()) {
    const std::uint64_t r = std::get<std::uint64_t>(value_);
    out.value_ = r == 0 ? 0 : spec_.modulus() - r;
  } else {
    out.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return out;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in " + spec_.to_string());
  FieldElement out = *this;
  if (spec_.is_prime()) {
    out.value_ = inverse_mod(std::get<std::uint64_t>(value_), spec_.modulus());
  } else {
    const auto& q = std::get<mpq_class>(value_);
    mpq_class r(q.get_den(), q.get_num());
    r.canonicalize();
    out.value_ = std::move(r);
  }
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec_ == b.spec_)) return false;
  if (a.spec_.is_prime()) return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  if (a.spec_.is_prime()) return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

Vector zero_vector(const FieldSpec& spec, std::size_t length) {
  return Vector(length, FieldElement::zero(spec));
}

Vector unit_vector(const FieldSpec& spec, std::size_t length, std::size_t index) {
  Vector v = zero_vector(spec, length);
  v.at(index) = FieldElement::one(spec);
  return v;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
  }
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
  }
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vector operator*(const FieldElement& scalar, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar * x);
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].format();
  }
  return out + ")";
}

Vector parse_vector(std::string_view text, const FieldSpec& spec) {
  Vector out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    out.push_back(FieldElement::parse(token, spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace isodim
