#include <gtest/gtest.h>

#include <random>

#include "isodim/errors.hpp"
#include "isodim/field.hpp"
#include "test_util.hpp"

namespace isodim {
namespace {

using testing::frac;
using testing::gf;
using testing::q;

TEST(FieldSpec, PrimeCheck) {
  EXPECT_EQ(gf(7).modulus(), 7u);
  EXPECT_THROW(FieldSpec::prime(4), DomainError);
  EXPECT_THROW(FieldSpec::prime(1), DomainError);
  EXPECT_THROW(FieldSpec::prime(0), DomainError);
  EXPECT_NO_THROW(FieldSpec::prime(4294967291ull));
  EXPECT_THROW(FieldSpec::prime(4294967311ull), DomainError);
}

TEST(FieldSpec, Equality) {
  EXPECT_EQ(gf(5), gf(5));
  EXPECT_NE(gf(5), gf(7));
  EXPECT_NE(gf(2), q());
  EXPECT_EQ(q(), FieldSpec::rationals());
}

TEST(FieldSpec, ParseAndPrint) {
  EXPECT_EQ(FieldSpec::parse("GF(13)"), gf(13));
  EXPECT_EQ(FieldSpec::parse("Q"), q());
  EXPECT_EQ(gf(13).to_string(), "GF(13)");
  EXPECT_EQ(q().to_string(), "Q");
  EXPECT_THROW(FieldSpec::parse("GF(x)"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_THROW(FieldSpec::parse("GF(6)"), DomainError);
}

TEST(FieldElement, Examples) {
  const FieldElement one2(gf(2), 1);
  EXPECT_TRUE((one2 + one2).is_zero());
  EXPECT_EQ(frac(1, 2) + frac(1, 3), frac(5, 6));
  EXPECT_EQ((FieldElement(gf(5), 3) + FieldElement(gf(5), 4)).residue(), (3u + 4u) % 5u);

  EXPECT_EQ((FieldElement(gf(3), 2) * FieldElement(gf(3), 2)).residue(), (2u * 2u) % 3u);
  EXPECT_EQ(frac(2, 3) * frac(3, 4), frac(1, 2));

  EXPECT_EQ(inv(FieldElement(gf(7), 1)), FieldElement(gf(7), 1));
  EXPECT_EQ(inv(frac(3, 4)), frac(4, 3));
  EXPECT_EQ(neg(one2), one2);
  EXPECT_TRUE(sub(frac(1, 2), frac(1, 2)).is_zero());
  EXPECT_EQ(sub(frac(1, 2), frac(1, 2)).format(), "0");
}

// inverses and quotients against a residue scan
TEST(FieldElement, InverseByScan) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t scanned = 0;
      for (std::uint64_t x = 0; x < p; ++x) {
        if (a * x % p == 1) scanned = x;
      }
      EXPECT_EQ(FieldElement(gf(p), static_cast<std::int64_t>(a)).inv().residue(), scanned);
    }
  }
  std::uint64_t scanned = 0;
  for (std::uint64_t x = 0; x < 7; ++x) {
    if (5 * x % 7 == 3) scanned = x;
  }
  EXPECT_EQ(div(FieldElement(gf(7), 3), FieldElement(gf(7), 5)).residue(), scanned);
  EXPECT_EQ(FieldElement(gf(5), 2).inv().residue(), 3u);
}

TEST(FieldElement, DivisionByZero) {
  EXPECT_THROW(FieldElement::zero(gf(5)).inv(), DivisionByZeroError);
  EXPECT_THROW(FieldElement::zero(q()).inv(), DivisionByZeroError);
  EXPECT_THROW(FieldElement(gf(3), 1) / FieldElement(gf(3), 0), DivisionByZeroError);
  EXPECT_THROW(FieldElement(q(), mpz_class(1), mpz_class(0)), DivisionByZeroError);
}

TEST(FieldElement, FieldMismatch) {
  EXPECT_THROW(FieldElement(gf(2), 1) + FieldElement(gf(3), 1), FieldMismatchError);
  EXPECT_THROW(FieldElement(gf(2), 1) * FieldElement(q(), 1), FieldMismatchError);
  EXPECT_FALSE(FieldElement(gf(2), 1) == FieldElement(gf(3), 1));
}

TEST(FieldElement, ParseFormat) {
  EXPECT_EQ(FieldElement::parse("2/-4", q()).format(), "-1/2");
  EXPECT_EQ(FieldElement::parse("9", gf(7)).residue(), 9u % 7u);
  EXPECT_EQ(FieldElement::parse("0", q()).format(), "0");
  EXPECT_EQ(FieldElement::parse("-0/5", q()).format(), "0");
  EXPECT_EQ(FieldElement::parse("+6/4", q()).format(), "3/2");
  EXPECT_EQ(FieldElement::parse("-1", gf(5)).format(), "4");
  EXPECT_EQ(FieldElement::parse("123456789012345678901234567890", q()).format(),
            "123456789012345678901234567890");
  EXPECT_EQ(FieldElement::parse("123456789012345678901234567890", gf(7)).residue(),
            mpz_class(mpz_class("123456789012345678901234567890") % 7).get_ui());
}

TEST(FieldElement, ParseErrors) {
  EXPECT_THROW(FieldElement::parse("", q()), ParseError);
  EXPECT_THROW(FieldElement::parse("x", q()), ParseError);
  EXPECT_THROW(FieldElement::parse("1/", q()), ParseError);
  EXPECT_THROW(FieldElement::parse("1.5", q()), ParseError);
  EXPECT_THROW(FieldElement::parse("1/2", gf(5)), ParseError);
  EXPECT_THROW(FieldElement::parse("3/0", q()), DivisionByZeroError);
}

TEST(FieldElement, ReducedRepresentation) {
  for (std::int64_t x = -20; x <= 20; ++x) {
    const FieldElement a(gf(7), x);
    EXPECT_LT(a.residue(), 7u);
    EXPECT_EQ(a.residue(), static_cast<std::uint64_t>(((x % 7) + 7) % 7));
  }
  const FieldElement r(q(), mpz_class(-12), mpz_class(-18));
  EXPECT_EQ(r.rational().get_num(), 2);
  EXPECT_EQ(r.rational().get_den(), 3);
}

void check_axioms(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const FieldSpec& s = a.spec();
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a + FieldElement::zero(s), a);
  EXPECT_EQ(a * FieldElement::one(s), a);
  EXPECT_TRUE((a + (-a)).is_zero());
  if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
  EXPECT_EQ(FieldElement::parse(a.format(), s), a);
}

TEST(FieldElement, AxiomsExhaustiveSmallPrimes) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const auto s = gf(p);
    const auto n = static_cast<std::int64_t>(p);
    for (std::int64_t x = 0; x < n; ++x)
      for (std::int64_t y = 0; y < n; ++y)
        for (std::int64_t z = 0; z < n; ++z)
          check_axioms(FieldElement(s, x), FieldElement(s, y), FieldElement(s, z));
  }
}

TEST(FieldElement, AxiomsRandomRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  const auto pick = [&] { return FieldElement(q(), mpz_class(num(rng)), mpz_class(den(rng))); };
  for (int i = 0; i < 2000; ++i) check_axioms(pick(), pick(), pick());
}

TEST(FieldElement, LargeModulusNoOverflow) {
  const auto s = gf(4294967291ull);
  const FieldElement a(s, 4294967290);  // -1
  EXPECT_TRUE((a * a).is_one());
  EXPECT_TRUE((a * a.inv()).is_one());
}

TEST(Vectors, Helpers) {
  const auto s = gf(3);
  EXPECT_EQ(format_vector(testing::vec(s, {1, 2, 0})), "(1,2,0)");
  EXPECT_EQ(format_vector({}), "()");
  EXPECT_EQ(parse_vector("1,-1,4", s), testing::vec(s, {1, 2, 1}));
  EXPECT_TRUE(parse_vector("", s).empty());
  EXPECT_THROW(parse_vector("1,,2", s), ParseError);
  EXPECT_EQ(unit_vector(s, 3, 1), testing::vec(s, {0, 1, 0}));
  EXPECT_TRUE(is_zero_vector(zero_vector(s, 4)));
  EXPECT_EQ(FieldElement(s, 2) * testing::vec(s, {1, 2}), testing::vec(s, {2, 1}));
  EXPECT_THROW(testing::vec(s, {1}) + testing::vec(s, {1, 2}), DimensionMismatchError);
}

}  // namespace
}  // namespace isodim
