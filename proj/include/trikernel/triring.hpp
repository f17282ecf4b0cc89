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
 * The Hu-Liu polynomial triring k#[n].
 *
 * The even part is k0[x1..xn]; the odd part is k1[u1..un, v1..vn, w1..wn]
 * with uj = x_(j)0 1#, vj = x_(j)1 and wj = 1# x_(j)0, and its ring product
 * is the local product #. The bimodule actions factor through the ring
 * homomorphisms
 *
 *   lambda: c -> c 1#,      xj -> uj     (x . alpha = lambda(x) # alpha)
 *   rho:    c -> sigma(c) 1#, xj -> wj   (alpha . x = alpha # rho(x))
 *
 * which is what the triassociative law forces once 1# is a #-identity.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/groebner.hpp"
#include "trikernel/poly.hpp"
#include "trikernel/trifield.hpp"

namespace trikernel {

template <CoefficientField F>
class TriPolyRing {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  TriPolyRing(TrifieldModelPtr<F> model, std::size_t n, MonomialOrder even_order = MonomialOrder::grevlex(),
              MonomialOrder odd_order = MonomialOrder::grevlex())
      : model_(std::move(model)),
        n_(n),
        even_(make_poly_ring(model_->field(), VariableSet::even(n), even_order)),
        odd_(make_poly_ring(model_->field(), VariableSet::odd(n), odd_order)) {}

  const TrifieldModelPtr<F>& model() const { return model_; }
  const F& field() const { return model_->field(); }
  std::size_t n() const { return n_; }
  const PolyRingPtr<F>& even_ring() const { return even_; }
  const PolyRingPtr<F>& odd_ring() const { return odd_; }

  // 1-based j, as in the variable names.
  std::size_t x_index(std::size_t j) const { return check(j) - 1; }
  std::size_t u_index(std::size_t j) const { return check(j) - 1; }
  std::size_t v_index(std::size_t j) const { return n_ + check(j) - 1; }
  std::size_t w_index(std::size_t j) const { return 2 * n_ + check(j) - 1; }

  friend bool operator==(const TriPolyRing& a, const TriPolyRing& b) {
    return a.n_ == b.n_ && *a.model_ == *b.model_ && *a.even_ == *b.even_ && *a.odd_ == *b.odd_;
  }

 private:
  std::size_t check(std::size_t j) const {
    if (j < 1 || j > n_) throw ArityMismatch("triring variable index out of range");
    return j;
  }

  TrifieldModelPtr<F> model_;
  std::size_t n_;
  PolyRingPtr<F> even_;
  PolyRingPtr<F> odd_;
};

template <CoefficientField F>
using TriPolyRingPtr = std::shared_ptr<const TriPolyRing<F>>;

template <CoefficientField F>
TriPolyRingPtr<F> make_tri_ring(TrifieldModelPtr<F> model, std::size_t n,
                                MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const TriPolyRing<F>>(std::move(model), n, order, order);
}

template <CoefficientField F>
bool same_tri_ring(const TriPolyRingPtr<F>& a, const TriPolyRingPtr<F>& b) {
  return a == b || *a == *b;
}

/** A graded element F0 + F1 of k#[n]. */
template <CoefficientField F>
class TriPolynomial {
 public:
  using value_type = typename F::value_type;

  explicit TriPolynomial(TriPolyRingPtr<F> ring)
      : ring_(std::move(ring)), even_(ring_->even_ring()), odd_(ring_->odd_ring()) {}

  TriPolynomial(TriPolyRingPtr<F> ring, Polynomial<F> even, Polynomial<F> odd)
      : ring_(std::move(ring)), even_(rebase(even, ring_->even_ring())), odd_(rebase(odd, ring_->odd_ring())) {
    if (even_.ring()->variables().part() != Part::even || odd_.ring()->variables().part() != Part::odd)
      throw DomainMismatch("graded parts placed in the wrong polynomial rings");
  }

  static TriPolynomial from_even(const TriPolyRingPtr<F>& ring, Polynomial<F> even) {
    return {ring, std::move(even), Polynomial<F>(ring->odd_ring())};
  }
  static TriPolynomial from_odd(const TriPolyRingPtr<F>& ring, Polynomial<F> odd) {
    return {ring, Polynomial<F>(ring->even_ring()), std::move(odd)};
  }
  static TriPolynomial one(const TriPolyRingPtr<F>& ring) {
    return from_even(ring, Polynomial<F>::one(ring->even_ring()));
  }
  /** The local identity 1#. */
  static TriPolynomial local_identity(const TriPolyRingPtr<F>& ring) {
    return from_odd(ring, Polynomial<F>::one(ring->odd_ring()));
  }
  static TriPolynomial constant(const TriPolyRingPtr<F>& ring, const TrifieldScalar<F>& c) {
    return {ring, Polynomial<F>::constant(ring->even_ring(), c.even()),
            Polynomial<F>::constant(ring->odd_ring(), c.odd())};
  }
  static TriPolynomial x(const TriPolyRingPtr<F>& ring, std::size_t j) {
    return from_even(ring, Polynomial<F>::variable(ring->even_ring(), ring->x_index(j)));
  }
  static TriPolynomial u(const TriPolyRingPtr<F>& ring, std::size_t j) {
    return from_odd(ring, Polynomial<F>::variable(ring->odd_ring(), ring->u_index(j)));
  }
  static TriPolynomial v(const TriPolyRingPtr<F>& ring, std::size_t j) {
    return from_odd(ring, Polynomial<F>::variable(ring->odd_ring(), ring->v_index(j)));
  }
  static TriPolynomial w(const TriPolyRingPtr<F>& ring, std::size_t j) {
    return from_odd(ring, Polynomial<F>::variable(ring->odd_ring(), ring->w_index(j)));
  }

  const TriPolyRingPtr<F>& ring() const { return ring_; }
  const Polynomial<F>& even() const { return even_; }
  const Polynomial<F>& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_purely_even() const { return odd_.is_zero(); }
  bool is_purely_odd() const { return even_.is_zero(); }

  TriPolynomial operator-() const { return {ring_, -even_, -odd_}; }
  friend TriPolynomial operator+(const TriPolynomial& a, const TriPolynomial& b) {
    require_same(a, b);
    return {a.ring_, a.even_ + b.even_, a.odd_ + b.odd_};
  }
  friend TriPolynomial operator-(const TriPolynomial& a, const TriPolynomial& b) { return a + (-b); }

  friend bool operator==(const TriPolynomial& a, const TriPolynomial& b) {
    return same_tri_ring(a.ring_, b.ring_) && a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  static void require_same(const TriPolynomial& a, const TriPolynomial& b) {
    if (!same_tri_ring(a.ring_, b.ring_)) throw DomainMismatch("tri-polynomials from different triring");
  }

 private:
  TriPolyRingPtr<F> ring_;
  Polynomial<F> even_;
  Polynomial<F> odd_;
};

template <CoefficientField F>
TriPolynomial<F> tri_add(const TriPolynomial<F>& a, const TriPolynomial<F>& b) {
  return a + b;
}

// ---------------------------------------------------------------------------
// Bimodule embeddings and products

template <CoefficientField F>
Polynomial<F> lambda_embed(const TriPolyRing<F>& ring, const Polynomial<F>& even) {
  const auto& odd = ring.odd_ring();
  std::vector<Polynomial<F>> images;
  for (std::size_t j = 1; j <= ring.n(); ++j) images.push_back(Polynomial<F>::variable(odd, ring.u_index(j)));
  return apply_map(
      rebase(even, ring.even_ring()), [](const typename F::value_type& c) { return c; },
      std::span<const Polynomial<F>>(images), odd);
}

template <CoefficientField F>
Polynomial<F> rho_embed(const TriPolyRing<F>& ring, const Polynomial<F>& even) {
  const auto& odd = ring.odd_ring();
  const auto& model = *ring.model();
  std::vector<Polynomial<F>> images;
  for (std::size_t j = 1; j <= ring.n(); ++j) images.push_back(Polynomial<F>::variable(odd, ring.w_index(j)));
  return apply_map(
      rebase(even, ring.even_ring()), [&](const typename F::value_type& c) { return model.sigma(c); },
      std::span<const Polynomial<F>>(images), odd);
}

/** (F0 + F1)(G0 + G1) = F0 G0 + (lambda(F0) # G1 + F1 # rho(G0)); F1 G1 contributes nothing. */
template <CoefficientField F>
TriPolynomial<F> tri_mul(const TriPolynomial<F>& a, const TriPolynomial<F>& b) {
  TriPolynomial<F>::require_same(a, b);
  const auto& ring = *a.ring();
  auto odd = lambda_embed(ring, a.even()) * b.odd() + a.odd() * rho_embed(ring, b.even());
  return {a.ring(), a.even() * b.even(), std::move(odd)};
}

/** The local product on the odd part. */
template <CoefficientField F>
TriPolynomial<F> sharp(const TriPolynomial<F>& a, const TriPolynomial<F>& b) {
  TriPolynomial<F>::require_same(a, b);
  if (!a.is_purely_odd() || !b.is_purely_odd()) throw SharpOnEvenPart();
  return TriPolynomial<F>::from_odd(a.ring(), a.odd() * b.odd());
}

/** The s-fold local product a # a # ... # a, s >= 1. */
template <CoefficientField F>
TriPolynomial<F> sharp_power(const TriPolynomial<F>& a, std::uint64_t s) {
  if (!a.is_purely_odd()) throw SharpOnEvenPart();
  if (s == 0) throw DomainMismatch("sharp_power: exponent must be positive");
  return TriPolynomial<F>::from_odd(a.ring(), a.odd().pow(s));
}

// ---------------------------------------------------------------------------
// Triideals

/** J = J0 + J1 given by generators of each part. */
template <CoefficientField F>
class TriIdeal {
 public:
  TriIdeal(TriPolyRingPtr<F> ring, std::vector<Polynomial<F>> even_gens, std::vector<Polynomial<F>> odd_gens)
      : ring_(std::move(ring)) {
    for (auto& g : even_gens) even_.push_back(rebase(g, ring_->even_ring()));
    for (auto& g : odd_gens) odd_.push_back(rebase(g, ring_->odd_ring()));
  }

  const TriPolyRingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& even_generators() const { return even_; }
  const std::vector<Polynomial<F>>& odd_generators() const { return odd_; }
  bool closed() const { return closed_; }

  void require_closed() const {
    if (!closed_) throw UnclosedTriideal();
  }

 private:
  template <CoefficientField G>
  friend TriIdeal<G> triideal_close(const TriPolyRingPtr<G>&, std::vector<Polynomial<G>>, std::vector<Polynomial<G>>);

  TriPolyRingPtr<F> ring_;
  std::vector<Polynomial<F>> even_;
  std::vector<Polynomial<F>> odd_;
  bool closed_ = false;
};

/**
 * Graded closure: R1 J0 and J0 R1 must lie in J1, so lambda(g) and rho(g)
 * join the odd generators for every even generator g.
 */
template <CoefficientField F>
TriIdeal<F> triideal_close(const TriPolyRingPtr<F>& ring, std::vector<Polynomial<F>> even_gens,
                           std::vector<Polynomial<F>> odd_gens) {
  TriIdeal<F> ideal(ring, std::move(even_gens), std::move(odd_gens));
  auto odd = ideal.odd_;
  auto push_unique = [&](Polynomial<F> p) {
    if (p.is_zero()) return;
    for (const auto& q : odd)
      if (q == p) return;
    odd.push_back(std::move(p));
  };
  std::vector<Polynomial<F>> unique_odd;
  std::swap(unique_odd, odd);
  for (auto& g : unique_odd) push_unique(std::move(g));
  for (const auto& g : ideal.even_) push_unique(lambda_embed(*ring, g));
  for (const auto& g : ideal.even_) push_unique(rho_embed(*ring, g));
  ideal.odd_ = std::move(odd);
  ideal.closed_ = true;
  return ideal;
}

template <CoefficientField F>
TriIdeal<F> triideal_close(const TriIdeal<F>& ideal) {
  return triideal_close(ideal.ring(), ideal.even_generators(), ideal.odd_generators());
}

template <CoefficientField F>
bool triideal_member(const TriPolynomial<F>& f, const TriIdeal<F>& ideal) {
  ideal.require_closed();
  if (!same_tri_ring(f.ring(), ideal.ring())) throw DomainMismatch("element and triideal in different trirings");
  return ideal_member(f.even(), std::span<const Polynomial<F>>(ideal.even_generators())) &&
         ideal_member(f.odd(), std::span<const Polynomial<F>>(ideal.odd_generators()));
}

/** The odd Rabinowitsch ideal J1 + <t # F1 - 1#> in k1[u, v, w, t]. */
template <CoefficientField F>
struct RabinowitschIdeal {
  PolyRingPtr<F> ring;
  std::vector<Polynomial<F>> generators;
};

template <CoefficientField F>
RabinowitschIdeal<F> odd_rabinowitsch_ideal(const TriIdeal<F>& ideal, const TriPolynomial<F>& f) {
  ideal.require_closed();
  if (!f.is_purely_odd()) throw SharpOnEvenPart();
  auto extended = rabinowitsch_ring(ideal.ring()->odd_ring(), "t");
  auto gens = rabinowitsch_generators(f.odd(), std::span<const Polynomial<F>>(ideal.odd_generators()), extended);
  return {std::move(extended), std::move(gens)};
}

/** F0 in rad(J0) and F1 in rad(J1); the odd test runs on the Rabinowitsch ideal. */
template <CoefficientField F>
bool graded_radical_member(const TriPolynomial<F>& f, const TriIdeal<F>& ideal) {
  ideal.require_closed();
  if (!same_tri_ring(f.ring(), ideal.ring())) throw DomainMismatch("element and triideal in different trirings");
  if (!radical_member(f.even(), std::span<const Polynomial<F>>(ideal.even_generators()))) return false;
  auto u = odd_rabinowitsch_ideal(ideal, TriPolynomial<F>::from_odd(f.ring(), f.odd()));
  return ideal_trivial(u.ring, std::span<const Polynomial<F>>(u.generators));
}

/** Least s <= bound with F1^{#s} in J1. */
template <CoefficientField F>
std::optional<std::uint64_t> minimal_sharp_power(const TriPolynomial<F>& f, const TriIdeal<F>& ideal,
                                                 std::uint64_t bound) {
  ideal.require_closed();
  if (!f.is_purely_odd()) throw SharpOnEvenPart();
  return minimal_power(f.odd(), std::span<const Polynomial<F>>(ideal.odd_generators()), bound);
}

// ---------------------------------------------------------------------------
// The affine n-trispace

template <CoefficientField F>
struct TriPoint {
  TriPolyRingPtr<F> ring;
  std::vector<TrifieldScalar<F>> coordinates;

  friend bool operator==(const TriPoint& a, const TriPoint& b) { return a.coordinates == b.coordinates; }
};

template <CoefficientField F>
struct ComponentMaps {
  using value_type = typename F::value_type;
  std::vector<value_type> even;   ///< a0
  std::vector<value_type> left;   ///< a0 1#, as coefficients of 1#
  std::vector<value_type> odd;    ///< a1
  std::vector<value_type> right;  ///< 1# a0

  /** (a0 1#, a1, 1# a0): the 3n coordinates at which odd polynomials are evaluated. */
  std::vector<value_type> odd_point() const {
    std::vector<value_type> out = left;
    out.insert(out.end(), odd.begin(), odd.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
};

template <CoefficientField F>
ComponentMaps<F> component_maps(const TriPoint<F>& a) {
  if (a.coordinates.size() != a.ring->n()) throw ArityMismatch("trispace point has the wrong number of coordinates");
  const auto& model = *a.ring->model();
  ComponentMaps<F> maps;
  for (const auto& c : a.coordinates) {
    if (!(*c.model() == model)) throw DomainMismatch("point coordinate from another trifield model");
    maps.even.push_back(c.even());
    maps.left.push_back(c.even());
    maps.odd.push_back(c.odd());
    maps.right.push_back(model.sigma(c.even()));
  }
  return maps;
}

/** F0(a0) + F1(a0 1#, a1, 1# a0). */
template <CoefficientField F>
TrifieldScalar<F> evaluate_tri(const TriPolynomial<F>& f, const TriPoint<F>& a) {
  if (!same_tri_ring(f.ring(), a.ring)) throw DomainMismatch("point and tri-polynomial in different trirings");
  const auto maps = component_maps(a);
  const auto odd_point = maps.odd_point();
  return {f.ring()->model(), evaluate(f.even(), std::span<const typename F::value_type>(maps.even)),
          evaluate(f.odd(), std::span<const typename F::value_type>(odd_point))};
}

/** Canonical text: even terms, then odd terms with `#` coefficients. */
template <CoefficientField F>
std::string to_string(const TriPolynomial<F>& f) {
  std::string out;
  append_terms(out, f.even());
  append_terms(out, f.odd());
  return out.empty() ? "0" : out;
}

template <CoefficientField F>
std::string to_string(const TriPolyRingPtr<F>& ring, const TrifieldScalar<F>& c) {
  return to_string(TriPolynomial<F>::constant(ring, c));
}

}  // namespace trikernel
