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

/**
 * @file
 *
 * Executable 3-trifield models k = k0 + k1 over a base field K.
 *
 * Both k0 and k1 are copies of K; an odd scalar c*1# is stored as c. The
 * product is (a, alpha)(b, beta) = (ab, a*beta + alpha*sigma(b)) where sigma
 * is the identity (symmetric model) or the Frobenius of F_{p^2} (twisted
 * model). The local product on k1 is (alpha, beta) -> alpha*beta.
 */

#pragma once

#include <memory>
#include <string>
#include <utility>

#include "trikernel/arith.hpp"
#include "trikernel/error.hpp"

namespace trikernel {

enum class TrifieldKind { symmetric, twisted };

template <CoefficientField F>
class TrifieldModel {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  static TrifieldModel symmetric(F field) { return TrifieldModel(std::move(field), TrifieldKind::symmetric); }

  static TrifieldModel twisted(F field)
    requires FrobeniusField<F>
  {
    return TrifieldModel(std::move(field), TrifieldKind::twisted);
  }

  const F& field() const { return field_; }
  TrifieldKind kind() const { return kind_; }

  /** The automorphism twisting the right action: 1# * c = sigma(c) * 1#. */
  value_type sigma(const value_type& c) const {
    if constexpr (FrobeniusField<F>) {
      if (kind_ == TrifieldKind::twisted) return field_.frobenius(c);
    }
    return c;
  }

  std::string name() const {
    return field_.name() + (kind_ == TrifieldKind::twisted ? " (twisted)" : " (symmetric)");
  }

  friend bool operator==(const TrifieldModel& a, const TrifieldModel& b) {
    return a.kind_ == b.kind_ && a.field_ == b.field_;
  }

 private:
  TrifieldModel(F field, TrifieldKind kind) : field_(std::move(field)), kind_(kind) {}

  F field_;
  TrifieldKind kind_;
};

template <CoefficientField F>
using TrifieldModelPtr = std::shared_ptr<const TrifieldModel<F>>;

template <CoefficientField F>
TrifieldModelPtr<F> make_symmetric_model(F field) {
  return std::make_shared<const TrifieldModel<F>>(TrifieldModel<F>::symmetric(std::move(field)));
}

template <FrobeniusField F>
TrifieldModelPtr<F> make_twisted_model(F field) {
  return std::make_shared<const TrifieldModel<F>>(TrifieldModel<F>::twisted(std::move(field)));
}

/** a = a0 + a1 in k, with a1 = odd * 1#. */
template <CoefficientField F>
class TrifieldScalar {
 public:
  using value_type = typename F::value_type;

  TrifieldScalar(TrifieldModelPtr<F> model, value_type even, value_type odd)
      : model_(std::move(model)), even_(std::move(even)), odd_(std::move(odd)) {}

  static TrifieldScalar zero(const TrifieldModelPtr<F>& m) { return {m, m->field().zero(), m->field().zero()}; }
  static TrifieldScalar one(const TrifieldModelPtr<F>& m) { return {m, m->field().one(), m->field().zero()}; }
  /** The local identity 1#. */
  static TrifieldScalar local_identity(const TrifieldModelPtr<F>& m) {
    return {m, m->field().zero(), m->field().one()};
  }
  static TrifieldScalar even_part(const TrifieldModelPtr<F>& m, value_type c) { return {m, std::move(c), m->field().zero()}; }
  static TrifieldScalar odd_part(const TrifieldModelPtr<F>& m, value_type c) { return {m, m->field().zero(), std::move(c)}; }

  const TrifieldModelPtr<F>& model() const { return model_; }
  const value_type& even() const { return even_; }
  const value_type& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_purely_odd() const { return even_.is_zero(); }
  bool is_purely_even() const { return odd_.is_zero(); }

  friend bool operator==(const TrifieldScalar& a, const TrifieldScalar& b) {
    return same_model(a, b) && a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  static bool same_model(const TrifieldScalar& a, const TrifieldScalar& b) {
    return a.model_ == b.model_ || *a.model_ == *b.model_;
  }

 private:
  TrifieldModelPtr<F> model_;
  value_type even_;
  value_type odd_;
};

namespace detail {
template <CoefficientField F>
void require_same_model(const TrifieldScalar<F>& x, const TrifieldScalar<F>& y) {
  if (!TrifieldScalar<F>::same_model(x, y)) throw DomainMismatch("trifield scalars from different models");
}
}  // namespace detail

template <CoefficientField F>
TrifieldScalar<F> scalar_add(const TrifieldScalar<F>& x, const TrifieldScalar<F>& y) {
  detail::require_same_model(x, y);
  return {x.model(), x.even() + y.even(), x.odd() + y.odd()};
}

template <CoefficientField F>
TrifieldScalar<F> scalar_neg(const TrifieldScalar<F>& x) {
  return {x.model(), -x.even(), -x.odd()};
}

template <CoefficientField F>
TrifieldScalar<F> scalar_sub(const TrifieldScalar<F>& x, const TrifieldScalar<F>& y) {
  return scalar_add(x, scalar_neg(y));
}

/** The trivial-extension product; the odd*odd contribution vanishes. */
template <CoefficientField F>
TrifieldScalar<F> scalar_mul(const TrifieldScalar<F>& x, const TrifieldScalar<F>& y) {
  detail::require_same_model(x, y);
  const auto& m = *x.model();
  return {x.model(), x.even() * y.even(), x.even() * y.odd() + x.odd() * m.sigma(y.even())};
}

/** The local product on k1. */
template <CoefficientField F>
TrifieldScalar<F> scalar_sharp(const TrifieldScalar<F>& alpha, const TrifieldScalar<F>& beta) {
  detail::require_same_model(alpha, beta);
  if (!alpha.is_purely_odd() || !beta.is_purely_odd()) throw SharpOnEvenPart();
  return TrifieldScalar<F>::odd_part(alpha.model(), alpha.odd() * beta.odd());
}

/** Two-sided inverse of a unit (a, alpha), a != 0; the k0 inverse on purely even scalars. */
template <CoefficientField F>
TrifieldScalar<F> scalar_inverse_even(const TrifieldScalar<F>& x) {
  if (x.even().is_zero()) throw DivisionByZero("scalar with zero even component is not invertible");
  const auto& m = *x.model();
  auto inv = x.even().inverse();
  return {x.model(), inv, -(inv * x.odd() * m.sigma(inv))};
}

}  // namespace trikernel
