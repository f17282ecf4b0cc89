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
 * Sparse distributed multivariate polynomials over a CoefficientField.
 *
 * A Polynomial shares an immutable PolyRing (field, variable set, monomial
 * order) and stores its terms strictly descending in that order with no zero
 * coefficients, so structural equality is mathematical equality and the zero
 * polynomial is the empty term list.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trikernel/arith.hpp"
#include "trikernel/error.hpp"

namespace trikernel {

// ---------------------------------------------------------------------------
// Variables

/** Which graded part of the triring a variable set belongs to. */
enum class Part { even, odd };

/**
 * Names of the indeterminates of a polynomial ring.
 *
 * Even sets over n are x1..xn. Odd sets over n are u1..un, v1..vn, w1..wn,
 * standing for x_(j)0 1#, x_(j)1 and 1# x_(j)0. Extra variables (such as
 * the Rabinowitsch variable) are appended after these.
 */
class VariableSet {
 public:
  VariableSet() = default;

  VariableSet(std::vector<std::string> names, Part part, std::size_t base_n)
      : names_(std::move(names)), part_(part), base_n_(base_n) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names_)
      if (!seen.insert(name).second) throw DomainMismatch("duplicate variable name " + name);
    const std::size_t expected = part == Part::even ? base_n : 3 * base_n;
    if (names_.size() < expected) throw DomainMismatch("variable set smaller than its base size");
  }

  static VariableSet even(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    return {std::move(names), Part::even, n};
  }

  static VariableSet odd(std::size_t n) {
    std::vector<std::string> names;
    for (char prefix : {'u', 'v', 'w'})
      for (std::size_t j = 1; j <= n; ++j) names.push_back(prefix + std::to_string(j));
    return {std::move(names), Part::odd, n};
  }

  /** A copy with one fresh variable appended, named `preferred` unless taken. */
  VariableSet extended(const std::string& preferred) const {
    std::string name = preferred;
    for (int k = 1; index_of(name); ++k) name = preferred + "_" + std::to_string(k);
    auto names = names_;
    names.push_back(name);
    return {std::move(names), part_, base_n_};
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Part part() const { return part_; }
  std::size_t base_n() const { return base_n_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
  Part part_ = Part::even;
  std::size_t base_n_ = 0;
};

// ---------------------------------------------------------------------------
// Monomials

class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exps_(variable_count, 0) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  static Monomial variable(std::size_t variable_count, std::size_t index, exponent_type power = 1) {
    Monomial m(variable_count);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  std::span<const exponent_type> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
      if (e > std::numeric_limits<exponent_type>::max()) throw Overflow("monomial exponent overflow");
      m.exps_[i] = static_cast<exponent_type>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /** m^k with overflow checks. */
  Monomial pow(std::uint64_t k) const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (exps_[i] != 0 && k > std::numeric_limits<exponent_type>::max() / exps_[i])
        throw Overflow("monomial exponent overflow");
      m.exps_[i] = static_cast<exponent_type>(exps_[i] * k);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /** other / *this; requires divides(other). */
  Monomial quotient_of(const Monomial& other) const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) m.exps_[i] = other.exps_[i] - exps_[i];
    m.degree_ = other.degree_ - degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  bool coprime(const Monomial& b) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  /** The same monomial padded with zero exponents to `new_size` variables. */
  Monomial extended(std::size_t new_size) const {
    Monomial m = *this;
    m.exps_.resize(new_size, 0);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<exponent_type> exps_;
  std::uint64_t degree_ = 0;
};

/** Total term orders compatible with multiplication, with 1 minimal. */
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind) : kind_(kind) {}

  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static constexpr MonomialOrder grlex() { return MonomialOrder(Kind::grlex); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }

  static MonomialOrder parse(std::string_view name) {
    if (name == "lex") return lex();
    if (name == "grlex") return grlex();
    if (name == "grevlex") return grevlex();
    throw DomainMismatch("unknown monomial order '" + std::string(name) + "'");
  }

  Kind kind() const { return kind_; }
  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      case Kind::grevlex: return "grevlex";
    }
    return "grevlex";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::grlex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::grevlex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = n; i-- > 0;)
          if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::grevlex;
};

// ---------------------------------------------------------------------------
// Rings and polynomials

template <CoefficientField F>
class PolyRing {
 public:
  using field_type = F;
  using coefficient_type = typename F::value_type;

  PolyRing(F field, VariableSet vars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}

  const F& field() const { return field_; }
  const VariableSet& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  F field_;
  VariableSet vars_;
  MonomialOrder order_;
};

template <CoefficientField F>
using PolyRingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
PolyRingPtr<F> make_poly_ring(F field, VariableSet vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(vars), order);
}

template <CoefficientField F>
PolyRingPtr<F> with_order(const PolyRingPtr<F>& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_poly_ring(ring->field(), ring->variables(), order);
}

template <CoefficientField F>
bool same_ring(const PolyRingPtr<F>& a, const PolyRingPtr<F>& b) {
  return a == b || *a == *b;
}

template <CoefficientField F>
struct Term {
  typename F::value_type coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

template <CoefficientField F>
class Polynomial {
 public:
  using field_type = F;
  using coefficient_type = typename F::value_type;
  using term_type = Term<F>;

  /** The zero polynomial of `ring`. */
  explicit Polynomial(PolyRingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const PolyRingPtr<F>& ring, const coefficient_type& c) {
    return monomial(ring, c, Monomial(ring->variable_count()));
  }

  static Polynomial one(const PolyRingPtr<F>& ring) { return constant(ring, ring->field().one()); }

  static Polynomial variable(const PolyRingPtr<F>& ring, std::size_t index) {
    if (index >= ring->variable_count()) throw ArityMismatch("variable index out of range");
    return monomial(ring, ring->field().one(), Monomial::variable(ring->variable_count(), index));
  }

  static Polynomial monomial(const PolyRingPtr<F>& ring, const coefficient_type& c, Monomial m) {
    if (m.size() != ring->variable_count()) throw ArityMismatch("monomial length does not match the ring");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, std::move(m)});
    return p;
  }

  /** Builds a polynomial from arbitrary terms: sorts, merges duplicates and drops zeros. */
  static Polynomial from_terms(const PolyRingPtr<F>& ring, std::vector<term_type> terms) {
    for (const auto& t : terms)
      if (t.monomial.size() != ring->variable_count()) throw ArityMismatch("monomial length does not match the ring");
    const auto& order = ring->order();
    std::sort(terms.begin(), terms.end(),
              [&](const term_type& a, const term_type& b) { return order.less(b.monomial, a.monomial); });
    Polynomial p(ring);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const PolyRingPtr<F>& ring() const { return ring_; }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coefficient.is_one(); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  const term_type& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading_term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const coefficient_type& leading_coefficient() const { return leading_term().coefficient; }

  /** The constant coefficient (zero when absent). */
  coefficient_type constant_coefficient() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return ring_->field().zero();
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.add_scaled(b, a.ring_->field().one(), Monomial(a.ring_->variable_count()));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.add_scaled(b, -a.ring_->field().one(), Monomial(a.ring_->variable_count()));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<term_type> products;
    products.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) products.push_back({s.coefficient * t.coefficient, s.monomial * t.monomial});
    return from_terms(a.ring_, std::move(products));
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scale(const coefficient_type& c) const { return mul_term(c, Monomial(ring_->variable_count())); }

  /** c * m * (*this). */
  Polynomial mul_term(const coefficient_type& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coefficient * c, t.monomial * m});
    return p;
  }

  /** (*this) + c * m * q in one merge pass. */
  Polynomial add_scaled(const Polynomial& q, const coefficient_type& c, const Monomial& m) const {
    require_same(*this, q);
    if (c.is_zero() || q.is_zero()) return *this;
    const auto& order = ring_->order();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + q.terms_.size());
    auto i = terms_.begin();
    auto j = q.terms_.begin();
    while (i != terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end()) {
        out.terms_.push_back(*i++);
        continue;
      }
      Monomial mj = j->monomial * m;
      auto cmp = i == terms_.end() ? std::strong_ordering::less : order.compare(i->monomial, mj);
      if (cmp > 0) {
        out.terms_.push_back(*i++);
      } else if (cmp < 0) {
        out.terms_.push_back({j->coefficient * c, std::move(mj)});
        ++j;
      } else {
        auto sum = i->coefficient + j->coefficient * c;
        if (!sum.is_zero()) out.terms_.push_back({std::move(sum), std::move(mj)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /** All terms but the leading one. */
  Polynomial tail() const {
    Polynomial p(ring_);
    if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  /** Divides by the leading coefficient; zero stays zero. */
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(leading_coefficient().inverse());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  static void require_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw DomainMismatch("polynomials from different rings");
  }

 private:
  PolyRingPtr<F> ring_;
  std::vector<term_type> terms_;
};

template <CoefficientField F>
Polynomial<F> poly_add(const Polynomial<F>& p, const Polynomial<F>& q) { return p + q; }
template <CoefficientField F>
Polynomial<F> poly_mul(const Polynomial<F>& p, const Polynomial<F>& q) { return p * q; }
template <CoefficientField F>
Polynomial<F> poly_neg(const Polynomial<F>& p) { return -p; }
template <CoefficientField F>
Polynomial<F> poly_scale(const Polynomial<F>& p, const typename F::value_type& c) { return p.scale(c); }

/** Maximal term of p under the order of its ring. */
template <CoefficientField F>
const Term<F>& leading_term(const Polynomial<F>& p) {
  return p.leading_term();
}

/**
 * Re-expresses p in `target`, which must have the same field and whose
 * variable list extends that of p's ring; the order may differ.
 */
template <CoefficientField F>
Polynomial<F> rebase(const Polynomial<F>& p, const PolyRingPtr<F>& target) {
  if (same_ring(p.ring(), target)) return p;
  const auto& src = p.ring()->variables().names();
  const auto& dst = target->variables().names();
  if (!(p.ring()->field() == target->field()) || dst.size() < src.size() ||
      !std::equal(src.begin(), src.end(), dst.begin()))
    throw DomainMismatch("cannot rebase polynomial into an unrelated ring");
  std::vector<Term<F>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.coefficient, t.monomial.extended(dst.size())});
  return Polynomial<F>::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Division, evaluation, homomorphisms

template <CoefficientField F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;
  Polynomial<F> remainder;
};

/**
 * Multivariate division: f = sum q_i d_i + r with no term of r divisible by
 * any leading monomial lm(d_i). Divisors are scanned in list order.
 */
template <CoefficientField F>
DivisionResult<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  const auto& ring = f.ring();
  std::vector<Polynomial<F>> quotients;
  quotients.reserve(divisors.size());
  for (const auto& d : divisors) {
    Polynomial<F>::require_same(f, d);
    if (d.is_zero()) throw ZeroPolynomial("divide");
    quotients.emplace_back(ring);
  }
  std::vector<Term<F>> remainder_terms;
  Polynomial<F> p = f;
  while (!p.is_zero()) {
    const auto lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& d = divisors[i];
      if (!d.leading_monomial().divides(lt.monomial)) continue;
      auto c = lt.coefficient / d.leading_coefficient();
      auto m = d.leading_monomial().quotient_of(lt.monomial);
      quotients[i] = quotients[i] + Polynomial<F>::monomial(ring, c, m);
      p = p.add_scaled(d, -c, m);
      divided = true;
      break;
    }
    if (!divided) {
      remainder_terms.push_back(lt);
      p = p.tail();
    }
  }
  return {std::move(quotients), Polynomial<F>::from_terms(ring, std::move(remainder_terms))};
}

/** divide() after moving everything into `order`. */
template <CoefficientField F>
DivisionResult<F> divide(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors, MonomialOrder order) {
  auto ring = with_order(f.ring(), order);
  std::vector<Polynomial<F>> ds;
  for (const auto& d : divisors) ds.push_back(rebase(d, ring));
  return divide(rebase(f, ring), std::span<const Polynomial<F>>(ds));
}

/** Substitutes point[i] for variable i. */
template <CoefficientField F>
typename F::value_type evaluate(const Polynomial<F>& p, std::span<const typename F::value_type> point) {
  const auto& ring = *p.ring();
  if (point.size() != ring.variable_count())
    throw ArityMismatch("evaluate: expected " + std::to_string(ring.variable_count()) + " coordinates, got " +
                        std::to_string(point.size()));
  auto acc = ring.field().zero();
  for (const auto& t : p.terms()) {
    auto v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i] != 0) v = v * field_pow(point[i], t.monomial[i], ring.field().one());
    acc = acc + v;
  }
  return acc;
}

/**
 * The ring homomorphism extending the coefficient map `kappa` and sending
 * variable i to images[i], applied to p.
 */
template <CoefficientField F, CoefficientField G, class Kappa>
Polynomial<G> apply_map(const Polynomial<F>& p, Kappa&& kappa, std::span<const Polynomial<G>> images,
                        const PolyRingPtr<G>& target) {
  if (images.size() != p.ring()->variable_count())
    throw ArityMismatch("apply_map: one image per source variable required");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target)) throw DomainMismatch("apply_map: image outside the target ring");
  // Powers of each image, built lazily.
  std::vector<std::vector<Polynomial<G>>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial<G>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<G>::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial<G> result(target);
  for (const auto& t : p.terms()) {
    Polynomial<G> term = Polynomial<G>::constant(target, kappa(t.coefficient));
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) term = term * power_of(i, t.monomial[i]);
    result = result + term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Canonical text

namespace detail {

inline bool is_compound(const std::string& s) { return s.find(' ') != std::string::npos; }

inline std::string monomial_text(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/** One term without its sign; `magnitude` is already the absolute coefficient text. */
inline std::string term_text(const std::string& magnitude, bool unit, const std::string& mono, Part part) {
  const bool compound = is_compound(magnitude);
  const std::string wrapped = compound ? "(" + magnitude + ")" : magnitude;
  if (part == Part::even) {
    if (mono.empty()) return wrapped;
    return unit ? mono : wrapped + "*" + mono;
  }
  const bool plain = !compound && magnitude.find('g') == std::string::npos;
  const std::string odd_coeff = plain ? magnitude + "#" : wrapped + "*1#";
  if (mono.empty()) return odd_coeff;
  return unit ? mono : odd_coeff + "*" + mono;
}

}  // namespace detail

/** Appends the terms of p to `out` in canonical form, continuing a sum when out is nonempty. */
template <CoefficientField F>
void append_terms(std::string& out, const Polynomial<F>& p) {
  const auto& vars = p.ring()->variables();
  for (const auto& t : p.terms()) {
    const bool negative = coefficient_is_negative(t.coefficient);
    const auto magnitude = negative ? -t.coefficient : t.coefficient;
    const auto text = detail::term_text(magnitude.to_string(), magnitude.is_one(),
                                        detail::monomial_text(t.monomial, vars), vars.part());
    if (out.empty()) {
      out = (negative ? "-" : "") + text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
  }
}

/**
 * Canonical text: terms descending in the ring order, explicit `*`, `^` for
 * powers; over odd variable sets coefficients print as `c#`.
 */
template <CoefficientField F>
std::string to_string(const Polynomial<F>& p) {
  std::string out;
  append_terms(out, p);
  return out.empty() ? "0" : out;
}

}  // namespace trikernel
