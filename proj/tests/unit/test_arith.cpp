/*
 *   Copyright 2026 The trikernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "support/random.hpp"
#include "trikernel/arith.hpp"

namespace trikernel {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational a(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_TRUE(a.is_negative());
  EXPECT_EQ(a.abs().to_string(), "3/2");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST(Rational, InverseExamples) {
  EXPECT_EQ(field_inverse(Rational(2)), Rational(mpz_class(1), mpz_class(2)));
  EXPECT_THROW(field_inverse(Rational(0)), DivisionByZero);
}

TEST(Rational, FieldAxiomsOnSamples) {
  testing::Rng rng(11);
  RationalField q;
  for (int i = 0; i < 300; ++i) {
    const auto a = testing::random_scalar(q, rng), b = testing::random_scalar(q, rng), c = testing::random_scalar(q, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, q.zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), q.one());
  }
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(4), DomainMismatch);
  EXPECT_THROW(PrimeField(1), DomainMismatch);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, InverseExamples) {
  PrimeField f5(5);
  EXPECT_EQ(field_inverse(f5.from_int(2)), f5.from_int(3));
  EXPECT_THROW(field_inverse(f5.zero()), DivisionByZero);
}

// Integer arithmetic modulo p as the oracle, exhaustively.
TEST(PrimeField, MatchesIntegerArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto x = f.from_int(a), y = f.from_int(b);
        EXPECT_EQ((x + y).value(), (a + b) % p);
        EXPECT_EQ((x * y).value(), (a * b) % p);
        EXPECT_EQ((x - y).value(), (a + p - b) % p);
        if (b != 0) EXPECT_EQ(((x / y) * y).value(), a);
      }
  }
}

TEST(PrimeField, FromRationalReducesAndRejectsMultiplesOfP) {
  PrimeField f(5);
  EXPECT_EQ(f.from_rational(mpz_class(-1), mpz_class(1)).value(), 4u);
  EXPECT_EQ(f.from_rational(mpz_class(1), mpz_class(2)).value(), 3u);
  EXPECT_THROW(f.from_rational(mpz_class(1), mpz_class(10)), DivisionByZero);
}

TEST(PrimeField, FermatLittleTheorem) {
  PrimeField f(7);
  for (const auto& x : f.elements()) EXPECT_EQ(field_pow(x, 7, f.one()), x);
}

TEST(QuadraticField, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(QuadraticField(2), DomainMismatch);
  EXPECT_THROW(QuadraticField(9), DomainMismatch);
}

TEST(QuadraticField, NineElementsAndGeneratorSquare) {
  QuadraticField f(3);
  EXPECT_EQ(f.cardinality(), 9u);
  EXPECT_EQ(f.elements().size(), 9u);
  const auto g = f.generator();
  EXPECT_EQ(g * g, f.from_int(static_cast<long>(f.non_residue())));
  EXPECT_FALSE((g * g).is_zero());
}

// Field axioms exhaustively on F_9 and F_25.
TEST(QuadraticField, FieldAxiomsExhaustive) {
  for (std::uint32_t p : {3u, 5u}) {
    QuadraticField f(p);
    const auto el = f.elements();
    for (const auto& a : el)
      for (const auto& b : el) {
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
      }
    testing::Rng rng(p);
    for (int i = 0; i < 200; ++i) {
      const auto a = testing::random_scalar(f, rng), b = testing::random_scalar(f, rng), c = testing::random_scalar(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

// Frobenius agrees with x -> x^p, is an involution, and fixes exactly F_p.
TEST(QuadraticField, FrobeniusOracle) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    QuadraticField f(p);
    std::size_t fixed = 0;
    for (const auto& x : f.elements()) {
      EXPECT_EQ(f.frobenius(x), field_pow(x, p, f.one()));
      EXPECT_EQ(f.frobenius(f.frobenius(x)), x);
      if (f.frobenius(x) == x) {
        ++fixed;
        EXPECT_TRUE(x.in_prime_field());
      }
    }
    EXPECT_EQ(fixed, p);
  }
}

TEST(QuadraticField, Printing) {
  QuadraticField f(3);
  EXPECT_EQ(f.generator().to_string(), "g");
  EXPECT_EQ(f.make(1, 2).to_string(), "1 + 2*g");
  EXPECT_EQ(f.make(0, 2).to_string(), "2*g");
  EXPECT_EQ(f.make(2, 0).to_string(), "2");
}

}  // namespace
}  // namespace trikernel
