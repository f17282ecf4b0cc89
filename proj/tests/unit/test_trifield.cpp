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

#include "support/random.hpp"
#include "trikernel/trifield.hpp"

namespace trikernel {
namespace {

template <CoefficientField F>
TrifieldScalar<F> random_trifield_scalar(const TrifieldModelPtr<F>& m, testing::Rng& rng) {
  return {m, testing::random_scalar(m->field(), rng), testing::random_scalar(m->field(), rng)};
}

TEST(TrifieldScalar, AddExamples) {
  auto q = make_symmetric_model(RationalField{});
  using S = TrifieldScalar<RationalField>;
  EXPECT_EQ(scalar_add(S(q, 1, 0), S(q, 0, 1)), S(q, 1, 1));
  EXPECT_EQ(scalar_add(S(q, 2, 3), S(q, -2, -3)), S::zero(q));
  auto f3 = make_symmetric_model(PrimeField(3));
  const PrimeField& k = f3->field();
  TrifieldScalar<PrimeField> x(f3, k.from_int(2), k.from_int(2));
  EXPECT_EQ(scalar_add(x, x), TrifieldScalar<PrimeField>(f3, k.from_int(1), k.from_int(1)));
}

TEST(TrifieldScalar, MulExamples) {
  auto q = make_symmetric_model(RationalField{});
  using S = TrifieldScalar<RationalField>;
  const S a(q, Rational(mpz_class(3), mpz_class(2)), -2);
  EXPECT_EQ(scalar_mul(S::one(q), a), a);
  EXPECT_EQ(scalar_mul(S::local_identity(q), S::local_identity(q)), S::zero(q));

  // Twisted F_9: (0, 1#) * (g, 0) = (0, g^3 1#), with g^3 computed directly.
  auto f9 = make_twisted_model(QuadraticField(3));
  const auto& k = f9->field();
  const auto g = k.generator();
  const TrifieldScalar<QuadraticField> r =
      scalar_mul(TrifieldScalar<QuadraticField>::local_identity(f9), TrifieldScalar<QuadraticField>::even_part(f9, g));
  EXPECT_EQ(r, TrifieldScalar<QuadraticField>::odd_part(f9, g * g * g));
  EXPECT_NE(r.odd(), g);
}

TEST(TrifieldScalar, SharpExamples) {
  auto q = make_symmetric_model(RationalField{});
  using S = TrifieldScalar<RationalField>;
  const S c = S::odd_part(q, 7);
  EXPECT_EQ(scalar_sharp(S::local_identity(q), c), c);
  EXPECT_EQ(scalar_sharp(S::odd_part(q, 2), S::odd_part(q, 3)), S::odd_part(q, 6));
  EXPECT_THROW(scalar_sharp(S::one(q), S::local_identity(q)), SharpOnEvenPart);
}

TEST(TrifieldScalar, DifferentModelsDoNotMix) {
  auto a = make_symmetric_model(QuadraticField(3));
  auto b = make_twisted_model(QuadraticField(3));
  EXPECT_THROW(scalar_add(TrifieldScalar<QuadraticField>::one(a), TrifieldScalar<QuadraticField>::one(b)),
               DomainMismatch);
}

TEST(TrifieldScalar, InverseEven) {
  auto m = make_symmetric_model(RationalField{});
  using S = TrifieldScalar<RationalField>;
  EXPECT_EQ(scalar_inverse_even(S::even_part(m, 2)), S::even_part(m, Rational(mpz_class(1), mpz_class(2))));
  EXPECT_THROW(scalar_inverse_even(S::local_identity(m)), DivisionByZero);
  auto f5 = make_symmetric_model(PrimeField(5));
  EXPECT_EQ(scalar_inverse_even(TrifieldScalar<PrimeField>::even_part(f5, f5->field().from_int(2))).even(),
            f5->field().from_int(3));
}

template <CoefficientField F>
void check_ring_laws(const TrifieldModelPtr<F>& m, unsigned seed) {
  testing::Rng rng(seed);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_trifield_scalar(m, rng), y = random_trifield_scalar(m, rng), z = random_trifield_scalar(m, rng);
    EXPECT_EQ(scalar_mul(scalar_mul(x, y), z), scalar_mul(x, scalar_mul(y, z)));
    EXPECT_EQ(scalar_mul(x, scalar_add(y, z)), scalar_add(scalar_mul(x, y), scalar_mul(x, z)));
    EXPECT_EQ(scalar_mul(scalar_add(y, z), x), scalar_add(scalar_mul(y, x), scalar_mul(z, x)));
    // Triassociativity with x even and alpha, beta odd.
    const auto e = TrifieldScalar<F>::even_part(m, x.even());
    const auto a = TrifieldScalar<F>::odd_part(m, y.odd()), b = TrifieldScalar<F>::odd_part(m, z.odd());
    EXPECT_EQ(scalar_mul(e, scalar_sharp(a, b)), scalar_sharp(scalar_mul(e, a), b));
    EXPECT_EQ(scalar_mul(scalar_sharp(a, b), e), scalar_sharp(a, scalar_mul(b, e)));
    if (!x.even().is_zero()) {
      const auto inv = scalar_inverse_even(x);
      EXPECT_EQ(scalar_mul(x, inv), TrifieldScalar<F>::one(m));
      EXPECT_EQ(scalar_mul(inv, x), TrifieldScalar<F>::one(m));
    }
  }
}

TEST(TrifieldScalar, RingLawsSymmetricRational) { check_ring_laws(make_symmetric_model(RationalField{}), 1); }
TEST(TrifieldScalar, RingLawsSymmetricF5) { check_ring_laws(make_symmetric_model(PrimeField(5)), 2); }
TEST(TrifieldScalar, RingLawsTwistedF9) { check_ring_laws(make_twisted_model(QuadraticField(3)), 3); }
TEST(TrifieldScalar, RingLawsTwistedF49) { check_ring_laws(make_twisted_model(QuadraticField(7)), 4); }

TEST(TrifieldModel, SigmaIsInvolution) {
  auto m = make_twisted_model(QuadraticField(5));
  for (const auto& c : m->field().elements()) EXPECT_EQ(m->sigma(m->sigma(c)), c);
  auto s = make_symmetric_model(QuadraticField(5));
  for (const auto& c : s->field().elements()) EXPECT_EQ(s->sigma(c), c);
}

}  // namespace
}  // namespace trikernel
