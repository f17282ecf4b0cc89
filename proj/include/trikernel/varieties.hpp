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
 * Even and odd trialgebraic sets over finite trifield models, vanishing
 * ideals of finite point sets (Buchberger-Moeller), the ideal I#(V0, V1)
 * and the Nullstellensatz report.
 *
 * Over a finite field the equality I#(V0#(J), V1#(J)) = rad#(J) generally
 * fails (x^p - x vanishes everywhere), so the report asserts only the
 * inclusion rad#(J) in I#(...) and lists equality failures as diagnostics.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/groebner.hpp"
#include "trikernel/poly.hpp"
#include "trikernel/triring.hpp"

namespace trikernel {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/** The enumeration budget, overridden by TRIKERNEL_BUDGET when set to a positive integer. */
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("TRIKERNEL_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

/** A pair of point sets with V1 contained in V0. */
template <CoefficientField F>
struct VarietyPair {
  TriPolyRingPtr<F> ring;
  std::vector<TriPoint<F>> v0;
  std::vector<TriPoint<F>> v1;
};

namespace detail {

inline std::uint64_t element_key(const PrimeFieldElement& x) { return x.value(); }
inline std::uint64_t element_key(const QuadraticElement& x) {
  return x.re() + std::uint64_t{x.modulus()} * x.im();
}

template <CoefficientField F>
std::vector<std::uint64_t> point_key(const TriPoint<F>& a) {
  std::vector<std::uint64_t> key;
  for (const auto& c : a.coordinates) {
    key.push_back(element_key(c.even()));
    key.push_back(element_key(c.odd()));
  }
  return key;
}

inline std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

template <CoefficientField F>
bool all_vanish(std::span<const Polynomial<F>> gens, std::span<const typename F::value_type> point) {
  for (const auto& g : gens)
    if (!evaluate(g, point).is_zero()) return false;
  return true;
}

}  // namespace detail

/** Number of points of the affine n-trispace, (|K|^2)^n. */
template <FiniteCoefficientField F>
std::uint64_t trispace_size(const TriPolyRing<F>& ring, std::uint64_t limit = UINT64_MAX / 2) {
  return detail::checked_power(ring.field().cardinality(), 2 * ring.n(), limit);
}

/**
 * V0 = {a : every even generator vanishes at a0} and
 * V1 = {a : every odd generator vanishes at (a0 1#, a1, 1# a0)}, both in
 * canonical enumeration order. Vanishing of generators is vanishing of the ideal.
 */
template <CoefficientField F>
VarietyPair<F> enumerate_varieties(const TriIdeal<F>& ideal, std::uint64_t budget = enumeration_budget()) {
  ideal.require_closed();
  if constexpr (!FiniteCoefficientField<F>) {
    throw EnumerationUnsupported("point enumeration needs a finite trifield model, not " + ideal.ring()->field().name());
  } else {
    const auto& ring = ideal.ring();
    const auto& model = ring->model();
    const std::uint64_t total = trispace_size(*ring, budget);
    if (total > budget)
      throw BudgetExceeded("trispace has more than " + std::to_string(budget) + " points (budget exceeded)");
    const auto elements = ring->field().elements();
    const std::uint64_t q = elements.size();
    const std::size_t n = ring->n();
    const auto& even_gens = ideal.even_generators();
    const auto& odd_gens = ideal.odd_generators();

    auto point_at = [&](std::uint64_t index) {
      TriPoint<F> a{ring, {}};
      a.coordinates.reserve(n);
      std::vector<TrifieldScalar<F>> rev;
      for (std::size_t j = 0; j < n; ++j) {
        const auto odd = elements[index % q];
        index /= q;
        const auto even = elements[index % q];
        index /= q;
        rev.emplace_back(model, even, odd);
      }
      // Most significant digit belongs to the first coordinate.
      a.coordinates.assign(rev.rbegin(), rev.rend());
      return a;
    };

    struct Chunk {
      std::vector<TriPoint<F>> v0, v1;
    };
    auto scan = [&](std::uint64_t begin, std::uint64_t end, Chunk& out) {
      for (std::uint64_t i = begin; i < end; ++i) {
        auto a = point_at(i);
        const auto maps = component_maps(a);
        const auto odd_point = maps.odd_point();
        // Membership in V1 is decided on its own; V1 subset V0 is checked, not assumed.
        const bool in_v0 = detail::all_vanish(std::span<const Polynomial<F>>(even_gens),
                                              std::span<const typename F::value_type>(maps.even));
        const bool in_v1 = detail::all_vanish(std::span<const Polynomial<F>>(odd_gens),
                                              std::span<const typename F::value_type>(odd_point));
        if (in_v1) out.v1.push_back(a);
        if (in_v0) out.v0.push_back(std::move(a));
      }
    };

    // Disjoint index ranges, merged back in order.
    const std::uint64_t workers =
        total < 4096 ? 1 : std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), 8));
    std::vector<Chunk> chunks(workers);
    if (workers == 1) {
      scan(0, total, chunks[0]);
    } else {
      std::vector<std::thread> threads;
      const std::uint64_t step = (total + workers - 1) / workers;
      for (std::uint64_t w = 0; w < workers; ++w)
        threads.emplace_back(scan, w * step, std::min(total, (w + 1) * step), std::ref(chunks[w]));
      for (auto& t : threads) t.join();
    }
    VarietyPair<F> pair{ring, {}, {}};
    for (auto& c : chunks) {
      pair.v0.insert(pair.v0.end(), std::make_move_iterator(c.v0.begin()), std::make_move_iterator(c.v0.end()));
      pair.v1.insert(pair.v1.end(), std::make_move_iterator(c.v1.begin()), std::make_move_iterator(c.v1.end()));
    }
    return pair;
  }
}

/** V1 subset of V0. */
template <CoefficientField F>
bool check_containment(const VarietyPair<F>& pair) {
  if constexpr (FiniteCoefficientField<F>) {
    std::set<std::vector<std::uint64_t>> v0;
    for (const auto& a : pair.v0) v0.insert(detail::point_key(a));
    return std::all_of(pair.v1.begin(), pair.v1.end(),
                       [&](const TriPoint<F>& b) { return v0.count(detail::point_key(b)) > 0; });
  } else {
    return std::all_of(pair.v1.begin(), pair.v1.end(), [&](const TriPoint<F>& b) {
      return std::find(pair.v0.begin(), pair.v0.end(), b) != pair.v0.end();
    });
  }
}

/** F in I#(V0, V1): F0 vanishes on every a0 (a in V0) and F1 on every odd image of V1. */
template <CoefficientField F>
bool in_ideal_of(const TriPolynomial<F>& f, const VarietyPair<F>& pair) {
  if (!same_tri_ring(f.ring(), pair.ring)) throw DomainMismatch("element and point sets in different trirings");
  using V = typename F::value_type;
  if (!f.even().is_zero())
    for (const auto& a : pair.v0) {
      const auto maps = component_maps(a);
      if (!evaluate(f.even(), std::span<const V>(maps.even)).is_zero()) return false;
    }
  if (!f.odd().is_zero())
    for (const auto& b : pair.v1) {
      const auto odd_point = component_maps(b).odd_point();
      if (!evaluate(f.odd(), std::span<const V>(odd_point)).is_zero()) return false;
    }
  return true;
}

/**
 * Reduced Groebner basis of the ideal of all polynomials of `ring` vanishing
 * on `points`, by the Buchberger-Moeller algorithm: monomials are visited in
 * increasing order, their evaluation vectors eliminated against those of the
 * standard monomials found so far; a dependency yields a basis element.
 */
template <CoefficientField F>
std::vector<Polynomial<F>> vanishing_ideal(std::span<const std::vector<typename F::value_type>> points,
                                           const PolyRingPtr<F>& ring) {
  using V = typename F::value_type;
  const std::size_t nvars = ring->variable_count();
  if (nvars == 0) throw DomainMismatch("vanishing_ideal: empty variable set");
  const auto& field = ring->field();
  const auto& order = ring->order();

  std::vector<std::vector<V>> distinct;
  for (const auto& p : points) {
    if (p.size() != nvars) throw ArityMismatch("vanishing_ideal: point of the wrong dimension");
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  const std::size_t count = distinct.size();

  struct Row {
    std::vector<V> values;  // normalized: values[pivot] == 1
    std::size_t pivot;
    Polynomial<F> combination;
  };
  struct Candidate {
    Monomial monomial;
    std::vector<V> values;  // raw evaluation vector of the monomial
  };

  std::vector<Row> rows;
  std::vector<Polynomial<F>> basis;
  std::vector<Monomial> leading;
  std::vector<Monomial> seen;
  std::vector<Candidate> candidates{{Monomial(nvars), std::vector<V>(count, field.one())}};

  auto divisible = [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  while (!candidates.empty()) {
    auto best = std::min_element(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
      return order.less(a.monomial, b.monomial);
    });
    Candidate current = std::move(*best);
    candidates.erase(best);
    if (divisible(current.monomial)) continue;

    std::vector<V> vec = current.values;
    Polynomial<F> combination = Polynomial<F>::monomial(ring, field.one(), current.monomial);
    for (const auto& row : rows) {
      const V factor = vec[row.pivot];
      if (factor.is_zero()) continue;
      for (std::size_t k = 0; k < count; ++k) vec[k] = vec[k] - factor * row.values[k];
      combination = combination.add_scaled(row.combination, -factor, Monomial(nvars));
    }
    auto pivot = std::find_if(vec.begin(), vec.end(), [](const V& x) { return !x.is_zero(); });
    if (pivot == vec.end()) {
      basis.push_back(std::move(combination));
      leading.push_back(current.monomial);
      continue;
    }
    const auto pivot_index = static_cast<std::size_t>(pivot - vec.begin());
    const V inv = pivot->inverse();
    for (auto& x : vec) x = x * inv;
    rows.push_back({std::move(vec), pivot_index, combination.scale(inv)});
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next = current.monomial * Monomial::variable(nvars, i);
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
      seen.push_back(next);
      std::vector<V> values(count);
      for (std::size_t k = 0; k < count; ++k) values[k] = current.values[k] * distinct[k][i];
      candidates.push_back({std::move(next), std::move(values)});
    }
  }
  return basis;
}

/** I#(V0, V1) as a closed triideal generated by the two vanishing ideals. */
template <CoefficientField F>
TriIdeal<F> ideal_of_varieties(const VarietyPair<F>& pair) {
  if constexpr (!FiniteCoefficientField<F>) {
    throw EnumerationUnsupported("ideal_of_varieties needs a finite trifield model");
  } else {
    if (!check_containment(pair)) throw InvariantViolation("variety pair violates V1 subset of V0");
    using V = typename F::value_type;
    std::vector<std::vector<V>> even_points, odd_points;
    for (const auto& a : pair.v0) even_points.push_back(component_maps(a).even);
    for (const auto& b : pair.v1) odd_points.push_back(component_maps(b).odd_point());
    auto even = vanishing_ideal(std::span<const std::vector<V>>(even_points), pair.ring->even_ring());
    auto odd = vanishing_ideal(std::span<const std::vector<V>>(odd_points), pair.ring->odd_ring());
    return triideal_close(pair.ring, std::move(even), std::move(odd));
  }
}

// ---------------------------------------------------------------------------
// Nullstellensatz report

struct NullstellensatzReport {
  std::string triideal;  ///< canonical generator summary
  std::uint64_t v0_count = 0;
  std::uint64_t v1_count = 0;
  bool containment = false;        ///< V1 subset of V0
  bool inclusion = false;          ///< every sampled radical member lies in I#
  std::uint64_t samples_checked = 0;
  std::vector<std::string> inclusion_failures;
  std::vector<std::string> equality_failures;  ///< generators of I# outside rad#(J)
};

struct NssOptions {
  std::uint64_t budget = enumeration_budget();
  std::size_t samples = 10;
  std::uint64_t power_bound = 6;
  std::uint64_t seed = 0x5eed;
};

template <CoefficientField F>
std::string triideal_summary(const TriIdeal<F>& ideal) {
  auto list = [](const std::vector<Polynomial<F>>& gens) {
    std::string out = "{";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i]);
    return out + "}";
  };
  return "even " + list(ideal.even_generators()) + " odd " + list(ideal.odd_generators());
}

/** A member of rad(J) together with the power that certifies it. */
template <CoefficientField F>
struct RadicalSample {
  Polynomial<F> element;
  std::uint64_t power;
};

/**
 * Draws members of rad(<gens>) constructively: certified seeds (generators,
 * variables, low-degree forms whose power lands in the ideal), then random
 * combinations of seeds, each kept only with an explicit power witness.
 */
template <CoefficientField F>
std::vector<RadicalSample<F>> sample_radical_members(const PolyRingPtr<F>& ring, std::span<const Polynomial<F>> gens,
                                                     std::size_t count, std::uint64_t bound, std::mt19937_64& rng) {
  const auto& field = ring->field();
  const std::size_t nvars = ring->variable_count();
  const auto gb = buchberger(ring, gens);
  auto witness = [&](const Polynomial<F>& f) -> std::optional<std::uint64_t> {
    Polynomial<F> nf = normal_form(f, gb);
    Polynomial<F> power = nf;
    for (std::uint64_t m = 1; m <= bound; ++m) {
      if (power.is_zero()) return m;
      power = normal_form(power * nf, gb);
    }
    return std::nullopt;
  };
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<std::size_t> pick_var(0, nvars - 1);
  auto random_linear = [&] {
    Polynomial<F> p = Polynomial<F>::constant(ring, field.from_int(coeff(rng)));
    for (std::size_t i = 0; i < nvars; ++i)
      p += Polynomial<F>::variable(ring, i).scale(field.from_int(coeff(rng)));
    return p;
  };

  std::vector<RadicalSample<F>> seeds;
  for (const auto& g : gb.basis) seeds.push_back({g, 1});
  std::vector<Polynomial<F>> candidates;
  for (std::size_t i = 0; i < nvars; ++i) candidates.push_back(Polynomial<F>::variable(ring, i));
  for (int k = 0; k < 6; ++k) candidates.push_back(random_linear());
  for (int k = 0; k < 4; ++k)
    candidates.push_back(Polynomial<F>::variable(ring, pick_var(rng)) * Polynomial<F>::variable(ring, pick_var(rng)));
  for (const auto& c : candidates)
    if (auto m = witness(c)) seeds.push_back({c, *m});

  std::vector<RadicalSample<F>> out;
  if (seeds.empty()) {
    // rad(<>) = 0 over a field.
    out.assign(count, {Polynomial<F>(ring), 1});
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick_seed(0, seeds.size() - 1);
  for (std::size_t attempt = 0; out.size() < count && attempt < 20 * count; ++attempt) {
    Polynomial<F> g(ring);
    const std::size_t terms = out.size() % 3 == 0 ? 1 : 2;
    for (std::size_t k = 0; k < terms; ++k) g += random_linear() * seeds[pick_seed(rng)].element;
    if (auto m = witness(g)) out.push_back({std::move(g), *m});
  }
  while (out.size() < count) out.push_back(seeds[out.size() % seeds.size()]);
  return out;
}

/**
 * Enumerates V0#(J), V1#(J); checks rad#(J) in I#(V0#, V1#) on sampled members
 * of rad#(J); then lists generators of I# that fail graded radical membership.
 */
template <CoefficientField F>
NullstellensatzReport nss_check(const TriIdeal<F>& ideal, const NssOptions& options = {}) {
  ideal.require_closed();
  NullstellensatzReport report;
  report.triideal = triideal_summary(ideal);
  const auto pair = enumerate_varieties(ideal, options.budget);
  report.v0_count = pair.v0.size();
  report.v1_count = pair.v1.size();
  report.containment = check_containment(pair);

  const auto& ring = ideal.ring();
  std::mt19937_64 rng(options.seed);
  auto even = sample_radical_members(ring->even_ring(), std::span<const Polynomial<F>>(ideal.even_generators()),
                                     options.samples, options.power_bound, rng);
  auto odd = sample_radical_members(ring->odd_ring(), std::span<const Polynomial<F>>(ideal.odd_generators()),
                                    options.samples, options.power_bound, rng);
  report.inclusion = true;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const TriPolynomial<F> g(ring, even[i].element, odd[i].element);
    ++report.samples_checked;
    if (!in_ideal_of(g, pair)) {
      report.inclusion = false;
      report.inclusion_failures.push_back(to_string(g));
    }
  }

  const auto sharp_ideal = ideal_of_varieties(pair);
  for (const auto& g : sharp_ideal.even_generators()) {
    auto f = TriPolynomial<F>::from_even(ring, g);
    if (!graded_radical_member(f, ideal)) report.equality_failures.push_back(to_string(f));
  }
  for (const auto& g : sharp_ideal.odd_generators()) {
    auto f = TriPolynomial<F>::from_odd(ring, g);
    if (!graded_radical_member(f, ideal)) report.equality_failures.push_back(to_string(f));
  }
  return report;
}

}  // namespace trikernel
