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
 * Canonical text for polynomials, part ideals, triideals, points and
 * Nullstellensatz reports. Every polynomial rendered here parses back to
 * the same value in the session ring.
 */

#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "trikernel/triring.hpp"
#include "trikernel/varieties.hpp"

namespace trikernel::frontend {

/** A polynomial of one part of the tri-ring, with `#` coefficients when odd. */
template <CoefficientField F>
std::string print_part(const TriPolyRingPtr<F>& ring, Part part, const Polynomial<F>& p) {
  return to_string(part == Part::even ? TriPolynomial<F>::from_even(ring, p) : TriPolynomial<F>::from_odd(ring, p));
}

template <CoefficientField F>
std::string print_canonical(const TriPolynomial<F>& f) {
  return to_string(f);
}

/** `g1, g2, ...`; the zero ideal prints as `0`. */
template <CoefficientField F>
std::string print_generators(const TriPolyRingPtr<F>& ring, Part part, const std::vector<Polynomial<F>>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    out += (out.empty() ? "" : ", ") + print_part(ring, part, g);
  }
  return out.empty() ? "0" : out;
}

/** Two lines, `even: ...` and `odd: ...`. */
template <CoefficientField F>
std::string print_canonical(const TriIdeal<F>& ideal) {
  return "even: " + print_generators(ideal.ring(), Part::even, ideal.even_generators()) + "\n" +
         "odd: " + print_generators(ideal.ring(), Part::odd, ideal.odd_generators()) + "\n";
}

template <CoefficientField F>
std::string print_canonical(const TriPoint<F>& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.coordinates.size(); ++i)
    out += (i ? ", " : "") + to_string(point.ring, point.coordinates[i]);
  return out + ")";
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

namespace detail {

inline std::string bullet_list(const std::vector<std::string>& items) {
  if (items.empty()) return " none\n";
  std::string out = "\n";
  for (const auto& item : items) out += "  - " + item + "\n";
  return out;
}

}  // namespace detail

inline std::string print_canonical(const NullstellensatzReport& report) {
  std::string out;
  out += "triideal: " + report.triideal + "\n";
  out += "v0_count: " + std::to_string(report.v0_count) + "\n";
  out += "v1_count: " + std::to_string(report.v1_count) + "\n";
  out += std::string("containment: ") + verdict(report.containment) + "\n";
  out += std::string("inclusion: ") + verdict(report.inclusion) + "\n";
  out += "samples_checked: " + std::to_string(report.samples_checked) + "\n";
  out += "inclusion_failures:" + detail::bullet_list(report.inclusion_failures);
  out += std::string("equality: ") + verdict(report.equality_failures.empty()) + "\n";
  out += "equality_failures:" + detail::bullet_list(report.equality_failures);
  return out;
}

inline nlohmann::ordered_json report_json(const NullstellensatzReport& report) {
  nlohmann::ordered_json j;
  j["triideal"] = report.triideal;
  j["v0_count"] = report.v0_count;
  j["v1_count"] = report.v1_count;
  j["containment"] = verdict(report.containment);
  j["inclusion"] = verdict(report.inclusion);
  j["samples_checked"] = report.samples_checked;
  j["inclusion_failures"] = report.inclusion_failures;
  j["equality"] = verdict(report.equality_failures.empty());
  j["equality_failures"] = report.equality_failures;
  return j;
}

inline std::string print_json(const NullstellensatzReport& report) { return report_json(report).dump(2) + "\n"; }

}  // namespace trikernel::frontend
