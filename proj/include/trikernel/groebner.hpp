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
 * Buchberger's algorithm with the normal selection strategy and the product
 * and chain criteria, producing reduced monic bases sorted by ascending
 * leading monomial. Optional cofactor tracking expresses every basis element
 * as a combination of the input generators.
 *
 * On top of the engine: normal forms, ideal membership, unit-ideal tests,
 * Rabinowitsch radical membership, minimal power search and explicit
 * membership certificates.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/poly.hpp"

namespace trikernel {

template <CoefficientField F>
struct GroebnerBasis {
  PolyRingPtr<F> ring;
  std::vector<Polynomial<F>> generators;
  std::vector<Polynomial<F>> basis;
  /// basis[i] = sum_j (*cofactors)[i][j] * generators[j], when tracked.
  std::optional<std::vector<std::vector<Polynomial<F>>>> cofactors;

  const MonomialOrder& order() const { return ring->order(); }
  bool is_unit() const { return basis.size() == 1 && basis.front().is_one(); }
  bool is_zero_ideal() const { return basis.empty(); }
};

struct GroebnerOptions {
  bool track_cofactors = false;
};

namespace detail {

template <CoefficientField F>
struct TrackedPolynomial {
  Polynomial<F> poly;
  std::vector<Polynomial<F>> row;

  void scale(const typename F::value_type& c) {
    poly = poly.scale(c);
    for (auto& r : row) r = r.scale(c);
  }

  void add_scaled(const TrackedPolynomial& other, const typename F::value_type& c, const Monomial& m) {
    poly = poly.add_scaled(other.poly, c, m);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = row[k].add_scaled(other.row[k], c, m);
  }
};

/** Full reduction of h modulo `basis`, skipping the element at index `skip`. */
template <CoefficientField F>
TrackedPolynomial<F> reduce_tracked(TrackedPolynomial<F> h, const std::vector<TrackedPolynomial<F>>& basis,
                                    bool track, std::size_t skip = static_cast<std::size_t>(-1)) {
  const auto& ring = h.poly.ring();
  std::vector<Term<F>> remainder;
  while (!h.poly.is_zero()) {
    const auto lt = h.poly.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip) continue;
      const auto& g = basis[i].poly;
      if (!g.leading_monomial().divides(lt.monomial)) continue;
      auto c = -(lt.coefficient / g.leading_coefficient());
      auto m = g.leading_monomial().quotient_of(lt.monomial);
      if (track) {
        h.add_scaled(basis[i], c, m);
      } else {
        h.poly = h.poly.add_scaled(g, c, m);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      h.poly = h.poly.tail();
    }
  }
  h.poly = Polynomial<F>::from_terms(ring, std::move(remainder));
  return h;
}

inline bool pair_pending(const std::vector<std::vector<bool>>& pending, std::size_t a, std::size_t b) {
  return a < b ? pending[a][b] : pending[b][a];
}

}  // namespace detail

/** S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm f, lm g). */
template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Polynomial<F>::require_same(f, g);
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s_polynomial");
  const auto L = lcm(f.leading_monomial(), g.leading_monomial());
  auto left = f.mul_term(f.leading_coefficient().inverse(), f.leading_monomial().quotient_of(L));
  return left.add_scaled(g, -g.leading_coefficient().inverse(), g.leading_monomial().quotient_of(L));
}

/**
 * Reduced Groebner basis of the ideal generated by `gens` in `ring`
 * (generators are moved into `ring`, so its order is the one used).
 */
template <CoefficientField F>
GroebnerBasis<F> buchberger(const PolyRingPtr<F>& ring, std::span<const Polynomial<F>> gens,
                            GroebnerOptions options = {}) {
  using Tracked = detail::TrackedPolynomial<F>;
  const bool track = options.track_cofactors;
  GroebnerBasis<F> result{ring, {}, {}, std::nullopt};
  for (const auto& g : gens) result.generators.push_back(rebase(g, ring));
  const std::size_t m = result.generators.size();
  const auto& order = ring->order();

  auto unit_row = [&](std::size_t j) {
    std::vector<Polynomial<F>> row;
    if (!track) return row;
    row.assign(m, Polynomial<F>(ring));
    row[j] = Polynomial<F>::one(ring);
    return row;
  };

  std::vector<Tracked> work;
  for (std::size_t j = 0; j < m; ++j) {
    if (result.generators[j].is_zero()) continue;
    Tracked t{result.generators[j], unit_row(j)};
    t.scale(t.poly.leading_coefficient().inverse());
    work.push_back(std::move(t));
  }

  auto finish_unit = [&](Tracked unit) {
    unit.scale(unit.poly.leading_coefficient().inverse());
    result.basis = {unit.poly};
    if (track) result.cofactors = std::vector<std::vector<Polynomial<F>>>{unit.row};
    return result;
  };

  for (auto& t : work)
    if (t.poly.is_constant()) return finish_unit(t);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> pending;
  auto grow_pending = [&] {
    for (auto& row : pending) row.resize(work.size(), false);
    pending.resize(work.size(), std::vector<bool>(work.size(), false));
  };
  grow_pending();
  for (std::size_t j = 0; j < work.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm(work[i].poly.leading_monomial(), work[j].poly.leading_monomial())});
      pending[i][j] = true;
    }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties broken by index for determinism.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
    Pair pair = *best;
    pairs.erase(best);
    pending[pair.i][pair.j] = false;

    const auto& lm_i = work[pair.i].poly.leading_monomial();
    const auto& lm_j = work[pair.j].poly.leading_monomial();
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < work.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = work[k].poly.leading_monomial().divides(pair.lcm) && !detail::pair_pending(pending, pair.i, k) &&
              !detail::pair_pending(pending, pair.j, k);
    }
    if (chain) continue;

    const auto& fi = work[pair.i];
    const auto& fj = work[pair.j];
    Tracked s{Polynomial<F>(ring), track ? std::vector<Polynomial<F>>(m, Polynomial<F>(ring))
                                         : std::vector<Polynomial<F>>{}};
    s.add_scaled(fi, fi.poly.leading_coefficient().inverse(), lm_i.quotient_of(pair.lcm));
    s.add_scaled(fj, -fj.poly.leading_coefficient().inverse(), lm_j.quotient_of(pair.lcm));
    Tracked h = detail::reduce_tracked(std::move(s), work, track);
    if (h.poly.is_zero()) continue;
    h.scale(h.poly.leading_coefficient().inverse());
    if (h.poly.is_constant()) return finish_unit(std::move(h));
    work.push_back(std::move(h));
    grow_pending();
    const std::size_t n = work.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({i, n, lcm(work[i].poly.leading_monomial(), work[n].poly.leading_monomial())});
      pending[i][n] = true;
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < work.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < work.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = work[j].poly.leading_monomial();
      const auto& b = work[i].poly.leading_monomial();
      redundant = a.divides(b) && (a != b || j < i);
    }
    if (!redundant) minimal.push_back(work[i]);
  }
  // Interreduce tails; leading monomials are fixed from here on.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Tracked reduced = detail::reduce_tracked(minimal[i], minimal, track, i);
    reduced.scale(reduced.poly.leading_coefficient().inverse());
    minimal[i] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Tracked& a, const Tracked& b) {
    return order.less(a.poly.leading_monomial(), b.poly.leading_monomial());
  });
  std::vector<std::vector<Polynomial<F>>> rows;
  for (auto& t : minimal) {
    result.basis.push_back(std::move(t.poly));
    if (track) rows.push_back(std::move(t.row));
  }
  if (track) result.cofactors = std::move(rows);
  return result;
}

/** Generators share a ring; the ring (and its order) of gens[0] is used. */
template <CoefficientField F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, GroebnerOptions options = {}) {
  if (gens.empty()) throw DomainMismatch("buchberger: no generators and no ring given");
  return buchberger(gens.front().ring(), gens, options);
}

/** Remainder of f modulo the basis; zero iff f lies in the ideal. */
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  std::vector<detail::TrackedPolynomial<F>> basis;
  basis.reserve(gb.basis.size());
  for (const auto& b : gb.basis) basis.push_back({b, {}});
  return detail::reduce_tracked(detail::TrackedPolynomial<F>{rebase(f, gb.ring), {}}, basis, false).poly;
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, std::span<const Polynomial<F>> gens) {
  return normal_form(f, buchberger(f.ring(), gens)).is_zero();
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, std::span<const Polynomial<F>> gens, MonomialOrder order) {
  auto ring = with_order(f.ring(), order);
  return normal_form(rebase(f, ring), buchberger(ring, gens)).is_zero();
}

/** True iff the reduced basis is {1}. */
template <CoefficientField F>
bool ideal_trivial(const PolyRingPtr<F>& ring, std::span<const Polynomial<F>> gens) {
  return buchberger(ring, gens).is_unit();
}

/** The Rabinowitsch ring: `ring` with one fresh variable appended last. */
template <CoefficientField F>
PolyRingPtr<F> rabinowitsch_ring(const PolyRingPtr<F>& ring, const std::string& fresh = "t") {
  return make_poly_ring(ring->field(), ring->variables().extended(fresh), ring->order());
}

/** gens together with t*f - 1 in the ring extended by the fresh variable t. */
template <CoefficientField F>
std::vector<Polynomial<F>> rabinowitsch_generators(const Polynomial<F>& f, std::span<const Polynomial<F>> gens,
                                                   const PolyRingPtr<F>& extended) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size() + 1);
  for (const auto& g : gens) out.push_back(rebase(g, extended));
  const auto t = Polynomial<F>::variable(extended, extended->variable_count() - 1);
  out.push_back(t * rebase(f, extended) - Polynomial<F>::one(extended));
  return out;
}

/** f in the radical of <gens>, decided by 1 in <gens, t*f - 1>. */
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, std::span<const Polynomial<F>> gens) {
  for (const auto& g : gens) Polynomial<F>::require_same(f, g);
  auto extended = rabinowitsch_ring(f.ring());
  auto ext_gens = rabinowitsch_generators(f, gens, extended);
  return ideal_trivial(extended, std::span<const Polynomial<F>>(ext_gens));
}

template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, std::span<const Polynomial<F>> gens, MonomialOrder order) {
  auto ring = with_order(f.ring(), order);
  std::vector<Polynomial<F>> moved;
  for (const auto& g : gens) moved.push_back(rebase(g, ring));
  return radical_member(rebase(f, ring), std::span<const Polynomial<F>>(moved));
}

/** Least m in [1, bound] with f^m in <gens>. */
template <CoefficientField F>
std::optional<std::uint64_t> minimal_power(const Polynomial<F>& f, std::span<const Polynomial<F>> gens,
                                           std::uint64_t bound) {
  const auto gb = buchberger(f.ring(), gens);
  const auto f_nf = normal_form(f, gb);
  Polynomial<F> power = f_nf;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (power.is_zero()) return m;
    power = normal_form(power * f_nf, gb);
  }
  return std::nullopt;
}

/** Cofactors h with f = sum h_j gens_j exactly, or nothing when f is not in the ideal. */
template <CoefficientField F>
std::optional<std::vector<Polynomial<F>>> representation(const Polynomial<F>& f,
                                                         std::span<const Polynomial<F>> gens) {
  const auto& ring = f.ring();
  const auto gb = buchberger(ring, gens, {.track_cofactors = true});
  auto division = divide(f, std::span<const Polynomial<F>>(gb.basis));
  if (!division.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial<F>> h(gb.generators.size(), Polynomial<F>(ring));
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) h[j] += division.quotients[i] * (*gb.cofactors)[i][j];
  return h;
}

}  // namespace trikernel
