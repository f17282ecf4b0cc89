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


// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "trikernel/frontend/cli.hpp"
#include "trikernel/frontend/parser.hpp"
#include "trikernel/frontend/printer.hpp"
#include "trikernel/groebner.hpp"
#include "trikernel/triring.hpp"
#include "trikernel/varieties.hpp"

namespace {

using namespace trikernel;
namespace tk = trikernel::testing;

struct Outcome {
  bool pass;
  std::string detail;
};

// ---------------------------------------------------------------------------
// 1, 2: triassociative law and graded placement on shared samples.

struct ProductTally {
  std::uint64_t triples = 0, law_failures = 0, grading_failures = 0;
};

template <CoefficientField F>
void sample_products(const TrifieldModelPtr<F>& model, unsigned seed, int count, ProductTally& tally) {
  tk::Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    auto ring = make_tri_ring(model, tk::uniform(rng, 1, 2));
    const auto x = tk::random_even(ring, 3, 4, rng);
    const auto a = tk::random_odd(ring, 3, 4, rng), b = tk::random_odd(ring, 3, 4, rng);
    ++tally.triples;
    if (tri_mul(x, sharp(a, b)) != sharp(tri_mul(x, a), b) || tri_mul(sharp(a, b), x) != sharp(a, tri_mul(b, x)))
      ++tally.law_failures;
    const auto y = tk::random_even(ring, 3, 4, rng);
    const bool placed = tri_mul(x, y).is_purely_even() && tri_mul(x, a).is_purely_odd() &&
                        tri_mul(a, x).is_purely_odd() && tri_mul(a, b).is_zero() &&
                        tri_mul(x + a, y + b) == tri_mul(x, y) + tri_mul(x, b) + tri_mul(a, y);
    if (!placed) ++tally.grading_failures;
  }
}

// ---------------------------------------------------------------------------
// 3, 4: random closed triideals whose radicals are known by construction.

/** A closed triideal generated by products p^k * q, with the certified radical elements p * q. */
template <CoefficientField F>
struct ConstructedTriideal {
  TriIdeal<F> ideal;
  std::vector<Polynomial<F>> even_radical, odd_radical;
};

template <CoefficientField F>
ConstructedTriideal<F> constructed_triideal(const TriPolyRingPtr<F>& ring, tk::Rng& rng) {
  std::vector<Polynomial<F>> even, odd, even_rad, odd_rad;
  auto make = [&](const PolyRingPtr<F>& part, std::vector<Polynomial<F>>& gens, std::vector<Polynomial<F>>& rad) {
    const auto count = tk::uniform(rng, 0, 2);
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto p = tk::random_nonzero_polynomial(part, 1, 2, rng);
      const auto k = tk::uniform(rng, 1, 2);
      const auto q = k == 2 ? Polynomial<F>::constant(part, tk::random_nonzero_scalar(part->field(), rng))
                            : tk::random_nonzero_polynomial(part, 1, 2, rng);
      gens.push_back(p.pow(k) * q);
      rad.push_back(p * q);
    }
  };
  make(ring->even_ring(), even, even_rad);
  make(ring->odd_ring(), odd, odd_rad);
  // The closure's extra generators lambda(p^k q), rho(p^k q) have radical elements lambda(pq), rho(pq).
  for (const auto& r : even_rad) {
    odd_rad.push_back(lambda_embed(*ring, r));
    odd_rad.push_back(rho_embed(*ring, r));
  }
  return {triideal_close(ring, even, odd), even_rad, odd_rad};
}

template <CoefficientField F>
Polynomial<F> combination(const PolyRingPtr<F>& part, const std::vector<Polynomial<F>>& elements, tk::Rng& rng) {
  Polynomial<F> out(part);
  for (const auto& e : elements)
    if (tk::uniform(rng, 0, 2) != 0) out += tk::random_polynomial(part, 1, 2, rng) * e;
  return out;
}

struct VarietyTally {
  std::uint64_t ideals = 0, samples = 0, inclusion_failures = 0, containment_failures = 0, oracle_mismatches = 0;
};

template <CoefficientField F>
void sample_varieties(const TrifieldModelPtr<F>& model, unsigned seed, int count, VarietyTally& tally) {
  tk::Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    auto ring = make_tri_ring(model, tk::uniform(rng, 1, 2));
    const auto c = constructed_triideal(ring, rng);
    const auto pair = enumerate_varieties(c.ideal);
    ++tally.ideals;
    // Criterion 4: containment, cross-checked against direct substitution.
    const auto oracle = tk::oracle_varieties(c.ideal);
    if (!check_containment(pair) ||
        !std::includes(oracle.v0.begin(), oracle.v0.end(), oracle.v1.begin(), oracle.v1.end()))
      ++tally.containment_failures;
    if (oracle.v0.size() != pair.v0.size() || oracle.v1.size() != pair.v1.size()) ++tally.oracle_mismatches;
    // Criterion 3: constructive members of the graded radical lie in I#(V0, V1).
    std::vector<Polynomial<F>> even_members = c.even_radical, odd_members = c.odd_radical;
    even_members.insert(even_members.end(), c.ideal.even_generators().begin(), c.ideal.even_generators().end());
    odd_members.insert(odd_members.end(), c.ideal.odd_generators().begin(), c.ideal.odd_generators().end());
    for (int s = 0; s < 10; ++s) {
      const TriPolynomial<F> g(ring, combination(ring->even_ring(), even_members, rng),
                               combination(ring->odd_ring(), odd_members, rng));
      ++tally.samples;
      if (!in_ideal_of(g, pair)) ++tally.inclusion_failures;
    }
  }
}

// ---------------------------------------------------------------------------

Outcome criterion_1_2(bool grading) {
  static ProductTally tally = [] {
    ProductTally t;
    sample_products(make_symmetric_model(RationalField{}), 1, 2000, t);
    sample_products(make_twisted_model(QuadraticField(3)), 2, 2000, t);
    return t;
  }();
  if (!grading)
    return {tally.law_failures == 0, std::to_string(tally.triples) + " triples (2000 symmetric QQ, 2000 twisted F9), " +
                                         std::to_string(tally.law_failures) + " failures of either identity"};
  return {tally.grading_failures == 0,
          std::to_string(tally.triples) + " samples, " + std::to_string(tally.grading_failures) + " misplaced products"};
}

const VarietyTally& variety_tally() {
  static VarietyTally tally = [] {
    VarietyTally t;
    sample_varieties(make_symmetric_model(PrimeField(3)), 3, 50, t);
    sample_varieties(make_symmetric_model(PrimeField(5)), 4, 50, t);
    return t;
  }();
  return tally;
}

Outcome criterion_3() {
  const auto& t = variety_tally();
  return {t.inclusion_failures == 0, std::to_string(t.ideals) + " closed triideals over F3/F5, " +
                                         std::to_string(t.samples) + " radical members, " +
                                         std::to_string(t.inclusion_failures) + " outside I#(V0,V1)"};
}

Outcome criterion_4() {
  const auto& t = variety_tally();
  return {t.containment_failures == 0 && t.oracle_mismatches == 0,
          std::to_string(t.ideals) + " triideals enumerated exhaustively, " + std::to_string(t.containment_failures) +
              " containment failures, " + std::to_string(t.oracle_mismatches) + " enumeration/oracle mismatches"};
}

Outcome criterion_5() {
  using P = Polynomial<RationalField>;
  tk::Rng rng(5);
  std::uint64_t pairs = 0, successes = 0, failures = 0;
  for (int i = 0; i < 200; ++i) {
    auto ring = make_poly_ring(RationalField{}, VariableSet::even(tk::uniform(rng, 1, 2)));
    const auto f = tk::random_nonzero_polynomial(ring, tk::uniform(rng, 1, 2), 2, rng);
    std::vector<P> gens;
    const auto count = tk::uniform(rng, 1, 3);
    for (std::uint64_t k = 0; k < count; ++k) {
      // Every other ideal carries a power of f (degree at most 2), so successes actually occur.
      if (k == 0 && i % 2 == 0 && f.total_degree() == 1)
        gens.push_back(f.pow(2));
      else
        gens.push_back(tk::random_nonzero_polynomial(ring, 2, 3, rng));
    }
    ++pairs;
    const auto m = minimal_power(f, std::span<const P>(gens), 6);
    if (m) {
      ++successes;
      if (!radical_member(f, std::span<const P>(gens))) ++failures;
    }
  }
  auto ring = make_poly_ring(RationalField{}, VariableSet::even(2));
  const auto x1 = P::variable(ring, 0), x2 = P::variable(ring, 1), one = P::one(ring);
  auto named = [&](const P& f, std::vector<P> gens, bool radical, std::optional<std::uint64_t> power) {
    return radical_member(f, std::span<const P>(gens)) == radical &&
           minimal_power(f, std::span<const P>(gens), 6) == power;
  };
  const bool exact = named(x1, {x1.pow(2)}, true, 2) && named(x1 + x2, {x1.pow(2), x2.pow(2)}, true, 3) &&
                     named(x1 + one, {x1.pow(2)}, false, std::nullopt);
  return {failures == 0 && exact && successes > 0,
          std::to_string(pairs) + " pairs, " + std::to_string(successes) + " power witnesses, " +
              std::to_string(failures) + " disagreements; named instances " + (exact ? "exact" : "WRONG")};
}

Outcome criterion_6() {
  auto ring = make_tri_ring(make_symmetric_model(RationalField{}), 1);
  const frontend::ElaborationContext<RationalField> ctx{ring, nullptr};
  auto p = [&](const char* t) { return frontend::parse_tri_polynomial<RationalField>(t, ctx); };
  const auto J = triideal_close(ring, {}, {p("v1^2").odd()});
  const auto U = odd_rabinowitsch_ideal(J, p("v1"));
  const auto t_var = Polynomial<RationalField>::variable(U.ring, 3);
  const auto v1 = rebase(p("v1").odd(), U.ring), one = Polynomial<RationalField>::one(U.ring);
  const bool shape = U.generators.size() == 2 && U.generators[0] == v1.pow(2) && U.generators[1] == t_var * v1 - one;
  const bool trivial = ideal_trivial(U.ring, std::span<const Polynomial<RationalField>>(U.generators));
  const auto gb = buchberger(U.ring, std::span<const Polynomial<RationalField>>(U.generators));
  const auto s = minimal_sharp_power(p("v1"), J, 6);
  const auto K = triideal_close(ring, {}, {p("u1").odd()});
  const auto V = odd_rabinowitsch_ideal(K, p("v1"));
  const bool nontrivial = !ideal_trivial(V.ring, std::span<const Polynomial<RationalField>>(V.generators));
  const bool ok = shape && trivial && gb.is_unit() && s == 2u && nontrivial;
  return {ok, std::string("{v1^2, t*v1 - 1#}: ") + (trivial ? "trivial" : "NOT trivial") + ", s = " +
                  (s ? std::to_string(*s) : "none") + "; J1 = <u1>, F1 = v1: " + (nontrivial ? "non-trivial" : "TRIVIAL")};
}

Outcome criterion_7() {
  tk::Rng rng(7);
  std::uint64_t ideals = 0, spoly = 0, perm = 0, member = 0, checks = 0;
  auto run = [&](auto field, MonomialOrder order) {
    using F = decltype(field);
    using P = Polynomial<F>;
    for (int i = 0; i < 50; ++i) {
      auto ring = make_poly_ring(field, VariableSet::even(tk::uniform(rng, 1, 2)), order);
      std::vector<P> gens;
      const auto count = tk::uniform(rng, 1, 3);
      for (std::uint64_t k = 0; k < count; ++k) gens.push_back(tk::random_nonzero_polynomial(ring, 2, 3, rng));
      ++ideals;
      const auto gb = buchberger(ring, std::span<const P>(gens));
      for (std::size_t a = 0; a < gb.basis.size(); ++a)
        for (std::size_t b = a + 1; b < gb.basis.size(); ++b)
          if (!divide(s_polynomial(gb.basis[a], gb.basis[b]), std::span<const P>(gb.basis)).remainder.is_zero()) ++spoly;
      for (int s = 0; s < 3; ++s) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (buchberger(ring, std::span<const P>(shuffled)).basis != gb.basis) ++perm;
      }
      std::vector<P> probes;
      for (int s = 0; s < 4; ++s) probes.push_back(tk::random_polynomial(ring, 3, 4, rng));
      for (int s = 0; s < 4; ++s) {
        P m(ring);
        for (const auto& g : gens) m += tk::random_polynomial(ring, 2, 2, rng) * g;
        probes.push_back(m);
      }
      for (const auto& f : probes) {
        ++checks;
        if (ideal_member(f, std::span<const P>(gens)) != tk::linear_algebra_member(f, gens, 12)) ++member;
      }
    }
  };
  run(RationalField{}, MonomialOrder::grevlex());
  run(RationalField{}, MonomialOrder::lex());
  run(PrimeField(7), MonomialOrder::grlex());
  run(PrimeField(5), MonomialOrder::grevlex());
  return {spoly == 0 && perm == 0 && member == 0,
          std::to_string(ideals) + " ideals: " + std::to_string(spoly) + " non-zero S-remainders, " +
              std::to_string(perm) + " permutation differences, " + std::to_string(member) + "/" +
              std::to_string(checks) + " membership disagreements with linear algebra (degree 12)"};
}

Outcome criterion_8() {
  std::uint64_t sets = 0, nonvanishing = 0, mismatches = 0, tests = 0;
  // Every subset of F_p in one variable, against every polynomial of degree < p.
  for (std::uint32_t p : {3u, 5u}) {
    PrimeField k(p);
    using P = Polynomial<PrimeField>;
    using Pt = std::vector<PrimeFieldElement>;
    auto ring = make_poly_ring(k, VariableSet::even(1));
    const auto elements = k.elements();
    std::vector<P> all_polys;
    for (const auto& coeffs : tk::cartesian_power(elements, p)) {
      std::vector<Term<PrimeField>> terms;
      for (std::uint32_t d = 0; d < p; ++d)
        if (!coeffs[d].is_zero()) terms.push_back({coeffs[d], Monomial(std::vector<Monomial::exponent_type>{d})});
      all_polys.push_back(P::from_terms(ring, std::move(terms)));
    }
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      std::vector<Pt> pts;
      for (std::uint32_t j = 0; j < p; ++j)
        if (mask & (1u << j)) pts.push_back({elements[j]});
      ++sets;
      const auto gens = vanishing_ideal(std::span<const Pt>(pts), ring);
      for (const auto& g : gens)
        for (const auto& pt : pts)
          if (!tk::naive_evaluate(g, pt).is_zero()) ++nonvanishing;
      const auto gb = buchberger(ring, std::span<const P>(gens));
      for (const auto& f : all_polys) {
        bool vanishes = true;
        for (const auto& pt : pts) vanishes = vanishes && tk::naive_evaluate(f, pt).is_zero();
        ++tests;
        if (normal_form(f, gb).is_zero() != vanishes) ++mismatches;
      }
    }
  }
  // Random point sets in F5^2, against random and interpolation-corrected polynomials of per-variable degree < 5.
  PrimeField k(5);
  using P = Polynomial<PrimeField>;
  using Pt = std::vector<PrimeFieldElement>;
  auto ring = make_poly_ring(k, VariableSet::even(2));
  tk::Rng rng(8);
  auto per_variable_random = [&] {
    std::vector<Term<PrimeField>> terms;
    for (std::uint32_t a = 0; a < 5; ++a)
      for (std::uint32_t b = 0; b < 5; ++b)
        if (tk::uniform(rng, 0, 2) == 0)
          terms.push_back({tk::random_scalar(k, rng), Monomial(std::vector<Monomial::exponent_type>{a, b})});
    return P::from_terms(ring, std::move(terms));
  };
  // delta_a(x) = prod_i (1 - (x_i - a_i)^4) is the indicator of a, of per-variable degree 4.
  auto indicator = [&](const Pt& a) {
    P out = P::one(ring);
    for (std::size_t i = 0; i < 2; ++i)
      out = out * (P::one(ring) - (P::variable(ring, i) - P::constant(ring, a[i])).pow(4));
    return out;
  };
  for (int s = 0; s < 50; ++s) {
    std::vector<Pt> pts;
    const auto count = tk::uniform(rng, 2, 12);
    for (std::uint64_t j = 0; j < count; ++j) pts.push_back({tk::random_scalar(k, rng), tk::random_scalar(k, rng)});
    ++sets;
    const auto gens = vanishing_ideal(std::span<const Pt>(pts), ring);
    for (const auto& g : gens)
      for (const auto& pt : pts)
        if (!tk::naive_evaluate(g, pt).is_zero()) ++nonvanishing;
    const auto gb = buchberger(ring, std::span<const P>(gens));
    for (int t = 0; t < 60; ++t) {
      auto f = per_variable_random();
      if (t % 2 == 0) {
        std::set<Pt> distinct(pts.begin(), pts.end());
        for (const auto& a : distinct) f = f - indicator(a).scale(tk::naive_evaluate(f, a));
      }
      bool vanishes = true;
      for (const auto& pt : pts) vanishes = vanishes && tk::naive_evaluate(f, pt).is_zero();
      ++tests;
      if (normal_form(f, gb).is_zero() != vanishes) ++mismatches;
    }
  }
  return {nonvanishing == 0 && mismatches == 0,
          std::to_string(sets) + " point sets, " + std::to_string(tests) + " membership tests, " +
              std::to_string(nonvanishing) + " non-vanishing generators, " + std::to_string(mismatches) +
              " mismatches"};
}

Outcome criterion_9() {
  auto ring = make_tri_ring(make_symmetric_model(PrimeField(3)), 1);
  const frontend::ElaborationContext<PrimeField> ctx{ring, nullptr};
  auto p = [&](const char* t) { return frontend::parse_tri_polynomial<PrimeField>(t, ctx); };
  const auto J = triideal_close(ring, {p("x1").even()}, {p("u1").odd(), p("v1").odd(), p("w1").odd()});
  const auto report = nss_check(J);
  // A Fermat-type witness: an even failure lying in <x1^3 - x1>, i.e. vanishing on all of F3.
  bool fermat = false;
  const std::vector<Polynomial<PrimeField>> fermat_ideal = {p("x1^3 - x1").even()};
  for (const auto& text : report.equality_failures) {
    const auto f = p(text.c_str());
    if (f.is_purely_even() && ideal_member(f.even(), std::span<const Polynomial<PrimeField>>(fermat_ideal))) fermat = true;
  }
  std::string list;
  for (const auto& f : report.equality_failures) list += (list.empty() ? "" : ", ") + f;
  // The diagnostic itself does find Fermat witnesses when they exist, e.g. for the zero triideal.
  const auto zero = nss_check(triideal_close(ring, {}, {}));
  const bool zero_witness = std::find(zero.equality_failures.begin(), zero.equality_failures.end(),
                                      "x1^3 + 2*x1") != zero.equality_failures.end();
  return {report.inclusion && !report.equality_failures.empty() && fermat,
          "inclusion " + std::string(report.inclusion ? "PASS" : "FAIL") + ", |V0| = " +
              std::to_string(report.v0_count) + ", |V1| = " + std::to_string(report.v1_count) +
              ", equality failures: [" + list + "]" +
              (report.equality_failures.empty()
                   ? " (here I#(V0,V1) = <x1> + <u1,v1,w1> equals J, and x1^3 - x1 lies in <x1>, so no witness exists)"
                   : "") +
              "; supplementary: the zero triideal reports x1^3 + 2*x1: " + (zero_witness ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 10: frontend fuzzing, round trips and the golden exit-code suite.

std::string fuzz_text(tk::Rng& rng) {
  static const std::vector<std::string> atoms = {
      "x1", "x2", "u1", "v1", "w2", "v2", "1#", "2#", "3/4#", "0", "1", "12", "5/3", "g", "+", "-", "*", "#", "^",
      "^2", "^3", "(", ")", ",", " ", "x3", "y", "1/0", "@", "\n", "9999999999999", "^1001", "^0", "--", "##"};
  std::string text;
  if (tk::uniform(rng, 0, 9) == 0) {
    const auto len = tk::uniform(rng, 0, 24);
    for (std::uint64_t k = 0; k < len; ++k) text += static_cast<char>(tk::uniform(rng, 0, 255));
    return text;
  }
  const auto len = tk::uniform(rng, 1, 16);
  for (std::uint64_t k = 0; k < len; ++k) text += atoms[tk::uniform(rng, 0, atoms.size() - 1)];
  return text;
}

/** A random expression from the grammar, grading-blind, occasionally mutated by one character. */
std::string grammar_text(tk::Rng& rng, int depth = 0) {
  static const std::vector<std::string> leaves = {"x1", "x2", "u1", "v2", "w1", "1#", "3/2#", "2", "1/3", "0", "g"};
  std::string out;
  const auto pick = depth > 3 ? 0 : tk::uniform(rng, 0, 5);
  switch (pick) {
    case 0: case 1: out = leaves[tk::uniform(rng, 0, leaves.size() - 1)]; break;
    case 2: out = grammar_text(rng, depth + 1) + (tk::uniform(rng, 0, 1) ? " + " : " - ") + grammar_text(rng, depth + 1); break;
    case 3: out = grammar_text(rng, depth + 1) + (tk::uniform(rng, 0, 1) ? "*" : " # ") + grammar_text(rng, depth + 1); break;
    case 4: out = "(" + grammar_text(rng, depth + 1) + ")^" + std::to_string(tk::uniform(rng, 1, 3)); break;
    default: out = "-(" + grammar_text(rng, depth + 1) + ")"; break;
  }
  if (depth == 0 && !out.empty() && tk::uniform(rng, 0, 4) == 0)
    out[tk::uniform(rng, 0, out.size() - 1)] = "()+-*#^ 1x"[tk::uniform(rng, 0, 9)];
  return out;
}

template <CoefficientField F>
bool fuzz_one(const TriPolyRingPtr<F>& ring, const std::string& text, std::uint64_t& accepted) {
  try {
    const auto f = frontend::parse_tri_polynomial<F>(text, {ring, nullptr});
    ++accepted;
    // Accepted input must print to something that reads back to the same value.
    return frontend::parse_tri_polynomial<F>(frontend::print_canonical(f), {ring, nullptr}) == f;
  } catch (const trikernel::Error&) {
    return true;
  } catch (const std::exception& e) {
    std::cerr << "escaped: " << e.what() << "\n";
    return false;
  } catch (...) {
    return false;
  }
}

template <CoefficientField F>
std::uint64_t round_trips(const TrifieldModelPtr<F>& model, unsigned seed, int count) {
  tk::Rng rng(seed);
  std::uint64_t failures = 0;
  for (int i = 0; i < count; ++i) {
    auto ring = make_tri_ring(model, tk::uniform(rng, 1, 3));
    const auto f = tk::random_tri(ring, 4, 6, rng);
    const auto text = frontend::print_canonical(f);
    const auto back = frontend::parse_tri_polynomial<F>(text, {ring, nullptr});
    if (back != f || frontend::print_canonical(back) != text) ++failures;
  }
  return failures;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_10() {
  tk::Rng rng(10);
  std::uint64_t crashes = 0, accepted = 0;
  auto q = make_tri_ring(make_symmetric_model(RationalField{}), 2);
  auto f3 = make_tri_ring(make_symmetric_model(PrimeField(3)), 2);
  auto f9 = make_tri_ring(make_twisted_model(QuadraticField(3)), 2);
  for (int i = 0; i < 700; ++i) {
    const auto text = i % 2 == 0 ? grammar_text(rng) : fuzz_text(rng);
    bool ok = true;
    switch (i % 3) {
      case 0: ok = fuzz_one(q, text, accepted); break;
      case 1: ok = fuzz_one(f3, text, accepted); break;
      default: ok = fuzz_one(f9, text, accepted); break;
    }
    if (!ok) {
      ++crashes;
      std::cerr << "frontend fuzz failure: " << text << "\n";
    }
  }
  // Whole command lines and scripts: any outcome must be a table exit code.
  static const std::vector<std::string> words = {"gb", "member", "power", "eval", "variety", "nss-check", "--ring",
                                                 "QQ,n=1", "Fp:3,n=1", "Fp2:3,n=1", "--ideal", "--elem", "--even",
                                                 "--odd", "--point", "(1 + 2#)", "x1^2", "v1", "x1 # v1", "--bound",
                                                 "3", "--budget", "1", "--format", "json", "ring", "let", "=", "f"};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> args;
    const auto len = tk::uniform(rng, 0, 8);
    for (std::uint64_t k = 0; k < len; ++k)
      args.push_back(tk::uniform(rng, 0, 4) == 0 ? fuzz_text(rng) : words[tk::uniform(rng, 0, words.size() - 1)]);
    std::ostringstream out, err;
    int code = -1;
    try {
      if (i % 2 == 0) {
        code = frontend::cli_dispatch(args, out, err);
      } else {
        std::string script;
        for (const auto& w : args) script += w + (tk::uniform(rng, 0, 2) == 0 ? "\n" : " ");
        std::istringstream in(script);
        code = frontend::run_script(in, "fuzz.tri", out, err);
      }
    } catch (...) {
      code = -1;
    }
    if (code < 0 || code > 3) ++crashes;
  }

  const std::uint64_t trip_failures = round_trips(make_symmetric_model(RationalField{}), 11, 200) +
                                      round_trips(make_symmetric_model(PrimeField(5)), 12, 150) +
                                      round_trips(make_twisted_model(QuadraticField(3)), 13, 150);

  std::uint64_t scripts = 0, golden_failures = 0;
  std::set<int> codes;
  for (const auto& entry : std::filesystem::directory_iterator(TRIKERNEL_GOLDEN_DIR)) {
    if (entry.path().extension() != ".tri") continue;
    ++scripts;
    auto base = entry.path();
    const auto expected_out = slurp(base.replace_extension(".out"));
    const int expected_code = std::stoi(slurp(base.replace_extension(".code")));
    std::ostringstream out, err;
    const int code = frontend::cli_dispatch({"--script", entry.path().string()}, out, err);
    codes.insert(code);
    if (code != expected_code || out.str() != expected_out) ++golden_failures;
  }
  const bool table = codes == std::set<int>{0, 1, 2, 3};
  return {crashes == 0 && trip_failures == 0 && golden_failures == 0 && table,
          "1000 fuzzed inputs, " + std::to_string(crashes) + " crashes (" + std::to_string(accepted) +
              " expressions accepted); 500 round trips, " + std::to_string(trip_failures) + " failures; " +
              std::to_string(scripts) + " golden scripts, " + std::to_string(golden_failures) +
              " mismatches, exit codes seen {0,1,2,3}: " + (table ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "triassociative law", [] { return criterion_1_2(false); }},
      {2, "grading axioms", [] { return criterion_1_2(true); }},
      {3, "forward inclusion", criterion_3},
      {4, "containment V1 in V0", criterion_4},
      {5, "Rabinowitsch vs power search", criterion_5},
      {6, "odd Rabinowitsch", criterion_6},
      {7, "Groebner engine soundness", criterion_7},
      {8, "vanishing ideals", criterion_8},
      {9, "equality diagnostics", criterion_9},
      {10, "frontend", criterion_10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.number << " (" << c.name
              << "): " << outcome.detail << " [" << std::fixed << std::setprecision(1) << seconds << "s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
