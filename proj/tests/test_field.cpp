#include <gtest/gtest.h>

#include "segre/field.hpp"
#include "support/random_poly.hpp"

using namespace segre;
using segre::testing::uniform;

TEST(Rational, AddsFractions) {
  EXPECT_EQ(Rational::parse("1/2") + Rational::parse("1/3"), Rational::parse("5/6"));
}

TEST(Rational, CanonicalForm) {
  auto r = Rational::parse("6/-4");
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational::parse("0/7").denominator(), 1);
  EXPECT_EQ(r.to_string(), "-3/2");
}

TEST(Rational, InverseAndErrors) {
  RationalField q;
  EXPECT_EQ(q.inv(Rational::parse("2/3")), Rational::parse("3/2"));
  EXPECT_THROW(q.inv(q.zero()), std::domain_error);
  EXPECT_THROW(q.div(q.one(), q.zero()), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), ParseError);
}

TEST(PrimeField, SmallExamples) {
  PrimeField f5(5), f7(7);
  EXPECT_EQ(f5.mul(f5.element(3), f5.element(4)), f5.element(2));
  EXPECT_EQ(f7.div(f7.one(), f7.element(3)), f7.element(5));
  EXPECT_EQ(f5.inv(f5.element(2)), f5.element(3));
  EXPECT_EQ(f7.inv(f7.one()), f7.one());
  EXPECT_THROW(f7.inv(f7.zero()), std::domain_error);
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(15), std::invalid_argument);
  EXPECT_THROW(PrimeField(2147483659ULL), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2147483647ULL));
}

TEST(PrimeField, ParsesAndPrintsSymmetric) {
  PrimeField f(7);
  EXPECT_EQ(f.parse("-1"), f.element(6));
  EXPECT_EQ(f.parse("1/3"), f.element(5));
  EXPECT_EQ(f.format(f.element(6)), "-1");
  EXPECT_EQ(f.format(f.element(3)), "3");
  EXPECT_THROW(f.parse("1/7"), std::domain_error);
}

TEST(FieldSpec, Parses) {
  EXPECT_EQ(field_spec_name(parse_field_spec("Q")), "Q");
  EXPECT_EQ(field_spec_name(parse_field_spec("Fp:32003")), "Fp:32003");
  EXPECT_THROW(parse_field_spec("Fp:32004"), ParseError);
  EXPECT_THROW(parse_field_spec("R"), ParseError);
}

TEST(FieldSpec, CharacteristicGuard) {
  EXPECT_THROW(require_characteristic_allowed(PrimeField(2), {2}, "conic"), CharacteristicError);
  EXPECT_NO_THROW(require_characteristic_allowed(PrimeField(3), {2}, "conic"));
  EXPECT_NO_THROW(require_characteristic_allowed(RationalField{}, {2}, "conic"));
}

TEST(Coerce, RationalToPrime) {
  RationalField q;
  PrimeField f(7);
  EXPECT_EQ(coerce(q, Rational::parse("1/3"), f), f.element(5));
  EXPECT_EQ(coerce(q, Rational::parse("-2"), f), f.element(5));
  EXPECT_THROW(coerce(q, Rational::parse("1/14"), f), CharacteristicError);
  EXPECT_THROW(coerce(PrimeField(5), PrimeField(5).one(), f), ContextMismatch);
}

template <class K>
void check_axioms(const K& k, std::function<typename K::Element()> draw) {
  for (int i = 0; i < 200; ++i) {
    auto a = draw(), b = draw(), c = draw();
    EXPECT_EQ(k.add(a, k.add(b, c)), k.add(k.add(a, b), c));
    EXPECT_EQ(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
    EXPECT_EQ(k.add(a, b), k.add(b, a));
    EXPECT_EQ(k.mul(a, b), k.mul(b, a));
    EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
    EXPECT_EQ(k.add(a, k.neg(a)), k.zero());
    EXPECT_EQ(k.sub(a, b), k.add(a, k.neg(b)));
    if (!k.is_zero(a)) {
      EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
    }
  }
}

TEST(FieldProperties, RationalAxioms) {
  RationalField q;
  check_axioms<RationalField>(q, [] { return Rational(uniform(-50, 50)) / Rational(uniform(1, 30)); });
}

TEST(FieldProperties, RationalStaysCanonical) {
  for (int i = 0; i < 200; ++i) {
    auto a = Rational(uniform(-90, 90)) / Rational(uniform(1, 40));
    auto b = Rational(uniform(-90, 90)) / Rational(uniform(1, 40));
    for (auto r : {a + b, a - b, a * b}) {
      EXPECT_GT(r.denominator(), 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(FieldProperties, PrimeAxioms) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 32003ULL, 2147483647ULL}) {
    PrimeField f(p);
    check_axioms<PrimeField>(f, [&] { return f.element(static_cast<std::uint64_t>(segre::testing::rng()()) % p); });
  }
}

TEST(FieldProperties, FermatLittleTheorem) {
  for (std::uint64_t p : {3ULL, 7ULL, 101ULL, 32003ULL, 2147483647ULL}) {
    PrimeField f(p);
    for (int i = 0; i < 50; ++i) {
      auto a = f.element(1 + static_cast<std::uint64_t>(segre::testing::rng()()) % (p - 1));
      EXPECT_EQ(f.pow(a, p - 1), f.one());
    }
  }
}
