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
 * Exact coefficient domains: arbitrary-precision rationals, prime fields
 * F_p with p < 2^31, and quadratic extensions F_{p^2} = F_p[g]/(g^2 - r)
 * carrying the Frobenius automorphism.
 *
 * Every domain is described by a small field descriptor (RationalField,
 * PrimeField, QuadraticField) whose value_type is the element type. Elements
 * carry enough of their descriptor to do arithmetic on their own.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trikernel/error.hpp"

namespace trikernel {

// ---------------------------------------------------------------------------
// Rational

/** A rational number kept in lowest terms with positive denominator. */
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class value) : q_(std::move(value)) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
  }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  /** `n` or `n/d`. */
  std::string to_string() const { return q_.get_str(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

// ---------------------------------------------------------------------------
// Prime fields

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

inline std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace detail

/** An element of F_p; the modulus travels with the value. */
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  PrimeFieldElement operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_); }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    a.check(b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    return a.raw(static_cast<std::uint32_t>(s >= a.modulus_ ? s - a.modulus_ : s));
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a + (-b); }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    a.check(b);
    return a.raw(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_));
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a * b.inverse(); }
  PrimeFieldElement& operator+=(const PrimeFieldElement& b) { return *this = *this + b; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& b) { return *this = *this - b; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& b) { return *this = *this * b; }

  PrimeFieldElement inverse() const {
    if (value_ == 0) throw DivisionByZero();
    // Extended Euclid on (value, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = modulus_, new_r = value_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += modulus_;
    return raw(static_cast<std::uint32_t>(t));
  }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend auto operator<=>(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a.value_ <=> b.value_; }

  std::string to_string() const { return std::to_string(value_); }

 private:
  PrimeFieldElement raw(std::uint32_t v) const {
    PrimeFieldElement e;
    e.value_ = v;
    e.modulus_ = modulus_;
    return e;
  }
  void check(const PrimeFieldElement& b) const {
    if (modulus_ != b.modulus_) throw DomainMismatch("prime field moduli differ");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

// ---------------------------------------------------------------------------
// Quadratic extensions F_{p^2}

/** a + b*g in F_p[g]/(g^2 - r), r a quadratic non-residue mod an odd prime p. */
class QuadraticElement {
 public:
  QuadraticElement() = default;
  QuadraticElement(std::uint32_t re, std::uint32_t im, std::uint32_t modulus, std::uint32_t non_residue)
      : re_(re % modulus), im_(im % modulus), modulus_(modulus), non_residue_(non_residue) {}

  std::uint32_t re() const { return re_; }
  std::uint32_t im() const { return im_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t non_residue() const { return non_residue_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool in_prime_field() const { return im_ == 0; }

  QuadraticElement operator-() const { return make(neg(re_), neg(im_)); }

  friend QuadraticElement operator+(const QuadraticElement& a, const QuadraticElement& b) {
    a.check(b);
    return a.make(a.add(a.re_, b.re_), a.add(a.im_, b.im_));
  }
  friend QuadraticElement operator-(const QuadraticElement& a, const QuadraticElement& b) { return a + (-b); }
  friend QuadraticElement operator*(const QuadraticElement& a, const QuadraticElement& b) {
    a.check(b);
    const std::uint64_t p = a.modulus_;
    std::uint64_t re = (std::uint64_t{a.re_} * b.re_ % p + std::uint64_t{a.im_} * b.im_ % p * a.non_residue_) % p;
    std::uint64_t im = (std::uint64_t{a.re_} * b.im_ + std::uint64_t{a.im_} * b.re_) % p;
    return a.make(static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im));
  }
  friend QuadraticElement operator/(const QuadraticElement& a, const QuadraticElement& b) { return a * b.inverse(); }
  QuadraticElement& operator+=(const QuadraticElement& b) { return *this = *this + b; }
  QuadraticElement& operator-=(const QuadraticElement& b) { return *this = *this - b; }
  QuadraticElement& operator*=(const QuadraticElement& b) { return *this = *this * b; }

  /** Frobenius x -> x^p, which sends g to -g. */
  QuadraticElement frobenius() const { return make(re_, neg(im_)); }

  QuadraticElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    const std::uint64_t p = modulus_;
    // (a + bg)(a - bg) = a^2 - r b^2, the norm, lies in F_p.
    std::uint64_t norm = (std::uint64_t{re_} * re_ % p + p - std::uint64_t{im_} * im_ % p * non_residue_ % p) % p;
    std::uint64_t inv = detail::pow_mod(norm, p - 2, modulus_);
    return make(static_cast<std::uint32_t>(re_ * inv % p), static_cast<std::uint32_t>(neg(im_) * inv % p));
  }

  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.modulus_ == b.modulus_;
  }

  /** `a`, `b*g`, `g` or `a + b*g`; always parses back in the expression grammar. */
  std::string to_string() const {
    if (im_ == 0) return std::to_string(re_);
    std::string imag = im_ == 1 ? "g" : std::to_string(im_) + "*g";
    if (re_ == 0) return imag;
    return std::to_string(re_) + " + " + imag;
  }

 private:
  std::uint32_t neg(std::uint32_t v) const { return v == 0 ? 0 : modulus_ - v; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  }
  QuadraticElement make(std::uint32_t re, std::uint32_t im) const {
    QuadraticElement e;
    e.re_ = re;
    e.im_ = im;
    e.modulus_ = modulus_;
    e.non_residue_ = non_residue_;
    return e;
  }
  void check(const QuadraticElement& b) const {
    if (modulus_ != b.modulus_) throw DomainMismatch("quadratic field moduli differ");
  }

  std::uint32_t re_ = 0;
  std::uint32_t im_ = 0;
  std::uint32_t modulus_ = 3;
  std::uint32_t non_residue_ = 2;
};

// ---------------------------------------------------------------------------
// Field descriptors

/** The field Q. */
class RationalField {
 public:
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  Rational from_rational(const mpz_class& num, const mpz_class& den) const { return Rational(num, den); }

  bool is_finite() const { return false; }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/** The prime field F_p, p prime and below 2^31. */
class PrimeField {
 public:
  using value_type = PrimeFieldElement;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1U << 31) || !detail::is_prime(p))
      throw DomainMismatch("Fp modulus must be a prime below 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  PrimeFieldElement zero() const { return {0, p_}; }
  PrimeFieldElement one() const { return {1, p_}; }
  PrimeFieldElement from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
  }
  PrimeFieldElement from_rational(const mpz_class& num, const mpz_class& den) const {
    PrimeFieldElement d{detail::reduce_mpz(den, p_), p_};
    if (d.is_zero()) throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
    return PrimeFieldElement{detail::reduce_mpz(num, p_), p_} / d;
  }

  bool is_finite() const { return true; }
  std::uint64_t cardinality() const { return p_; }
  std::string name() const { return "Fp:" + std::to_string(p_); }

  /** All elements in increasing representative order. */
  std::vector<PrimeFieldElement> elements() const {
    std::vector<PrimeFieldElement> out;
    out.reserve(p_);
    for (std::uint32_t v = 0; v < p_; ++v) out.emplace_back(v, p_);
    return out;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/** F_{p^2} for an odd prime p, with distinguished generator g and Frobenius. */
class QuadraticField {
 public:
  using value_type = QuadraticElement;

  explicit QuadraticField(std::uint32_t p) : p_(p) {
    if (p >= (1U << 31) || !detail::is_prime(p) || p == 2)
      throw DomainMismatch("Fp2 modulus must be an odd prime below 2^31, got " + std::to_string(p));
    // Euler's criterion: r is a non-residue iff r^((p-1)/2) = -1.
    non_residue_ = 2;
    while (detail::pow_mod(non_residue_, (p - 1) / 2, p) != p - 1) ++non_residue_;
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t non_residue() const { return non_residue_; }

  QuadraticElement zero() const { return {0, 0, p_, non_residue_}; }
  QuadraticElement one() const { return {1, 0, p_, non_residue_}; }
  QuadraticElement generator() const { return {0, 1, p_, non_residue_}; }
  QuadraticElement make(std::uint32_t re, std::uint32_t im) const { return {re, im, p_, non_residue_}; }
  QuadraticElement from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return make(static_cast<std::uint32_t>(r), 0);
  }
  QuadraticElement from_rational(const mpz_class& num, const mpz_class& den) const {
    auto d = make(detail::reduce_mpz(den, p_), 0);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
    return make(detail::reduce_mpz(num, p_), 0) / d;
  }
  QuadraticElement frobenius(const QuadraticElement& x) const { return x.frobenius(); }

  bool is_finite() const { return true; }
  std::uint64_t cardinality() const { return std::uint64_t{p_} * p_; }
  std::string name() const { return "Fp2:" + std::to_string(p_); }

  /** All p^2 elements ordered by (im, re). */
  std::vector<QuadraticElement> elements() const {
    std::vector<QuadraticElement> out;
    out.reserve(cardinality());
    for (std::uint32_t im = 0; im < p_; ++im)
      for (std::uint32_t re = 0; re < p_; ++re) out.push_back(make(re, im));
    return out;
  }

  friend bool operator==(const QuadraticField& a, const QuadraticField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t non_residue_ = 2;
};

// ---------------------------------------------------------------------------
// Concepts and generic helpers

template <class F>
concept CoefficientField = requires(const F& field, const typename F::value_type& a, const typename F::value_type& b,
                                    const mpz_class& z) {
  typename F::value_type;
  { field.zero() } -> std::same_as<typename F::value_type>;
  { field.one() } -> std::same_as<typename F::value_type>;
  { field.from_int(1L) } -> std::same_as<typename F::value_type>;
  { field.from_rational(z, z) } -> std::same_as<typename F::value_type>;
  { field.is_finite() } -> std::convertible_to<bool>;
  { field.name() } -> std::convertible_to<std::string>;
  { a + b } -> std::same_as<typename F::value_type>;
  { a - b } -> std::same_as<typename F::value_type>;
  { a * b } -> std::same_as<typename F::value_type>;
  { a / b } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a.inverse() } -> std::same_as<typename F::value_type>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class F>
concept FiniteCoefficientField = CoefficientField<F> && requires(const F& field) {
  { field.elements() } -> std::same_as<std::vector<typename F::value_type>>;
  { field.cardinality() } -> std::convertible_to<std::uint64_t>;
};

/** Fields that carry an involutive automorphism usable for the twisted trifield. */
template <class F>
concept FrobeniusField = CoefficientField<F> && requires(const F& field, const typename F::value_type& a) {
  { field.frobenius(a) } -> std::same_as<typename F::value_type>;
};

template <class T>
T field_pow(T base, std::uint64_t exp, T one) {
  T result = std::move(one);
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

/** Inverse in the field; throws DivisionByZero on zero. */
template <class T>
T field_inverse(const T& x) {
  return x.inverse();
}

/** True when a coefficient prints with a leading minus sign. */
template <class T>
bool coefficient_is_negative(const T& x) {
  if constexpr (requires { x.is_negative(); }) {
    return x.is_negative();
  } else {
    return false;
  }
}

}  // namespace trikernel
