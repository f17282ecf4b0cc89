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
 * Session state: the declared ring and the named tri-polynomials and
 * triideals that live in it.
 *
 * A ring descriptor reads `QQ|Fp:<p>|Fp2:<p>, n=<n>, order=<grevlex|lex|grlex>`.
 * `QQ` and `Fp` use the symmetric trifield; `Fp2` uses the twisted trifield
 * over F_{p^2} with Frobenius as the twist. `order` defaults to grevlex.
 */

#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/frontend/parser.hpp"
#include "trikernel/triring.hpp"

namespace trikernel::frontend {

inline constexpr std::size_t kMaxTriVariables = 16;

enum class FieldKind { rational, prime, quadratic };

struct RingDescriptor {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  std::size_t n = 1;
  MonomialOrder order = MonomialOrder::grevlex();

  std::string canonical() const {
    std::string field = kind == FieldKind::rational ? "QQ"
                        : kind == FieldKind::prime  ? "Fp:" + std::to_string(p)
                                                    : "Fp2:" + std::to_string(p);
    return field + ", n=" + std::to_string(n) + ", order=" + order.name();
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_count(std::string_view digits, std::size_t column, const char* what) {
  if (digits.empty() || digits.size() > 10) throw ParseError(1, column, std::string("invalid ") + what);
  std::uint64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(1, column, std::string("invalid ") + what);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

inline bool valid_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/** Names the expression language already gives a meaning to. */
inline bool reserved_name(std::string_view name) {
  if (name == "g") return true;
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'u' || name[0] == 'v' || name[0] == 'w')) {
    for (char c : name.substr(1))
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }
  return false;
}

}  // namespace detail

inline RingDescriptor parse_ring_descriptor(std::string_view text) {
  RingDescriptor d;
  bool have_n = false, have_order = false;
  std::size_t start = 0, index = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    const std::string_view item = detail::trim(raw);
    const std::size_t column = start + (item.empty() ? 0 : static_cast<std::size_t>(item.data() - raw.data())) + 1;
    if (item.empty()) throw ParseError(1, column, "empty item in ring descriptor");
    if (index == 0) {
      if (item == "QQ") {
        d.kind = FieldKind::rational;
      } else if (item.starts_with("Fp2:")) {
        d.kind = FieldKind::quadratic;
        d.p = static_cast<std::uint32_t>(detail::parse_count(item.substr(4), column + 4, "characteristic"));
      } else if (item.starts_with("Fp:")) {
        d.kind = FieldKind::prime;
        d.p = static_cast<std::uint32_t>(detail::parse_count(item.substr(3), column + 3, "characteristic"));
      } else {
        throw ParseError(1, column, "expected QQ, Fp:<p> or Fp2:<p>, found '" + std::string(item) + "'");
      }
    } else {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError(1, column, "expected key=value in ring descriptor");
      const std::string_view key = detail::trim(item.substr(0, eq));
      const std::string_view value = detail::trim(item.substr(eq + 1));
      if (key == "n") {
        if (have_n) throw ParseError(1, column, "duplicate n in ring descriptor");
        have_n = true;
        d.n = detail::parse_count(value, column + eq + 1, "variable count");
        if (d.n < 1 || d.n > kMaxTriVariables)
          throw ParseError(1, column, "n must be between 1 and " + std::to_string(kMaxTriVariables));
      } else if (key == "order") {
        if (have_order) throw ParseError(1, column, "duplicate order in ring descriptor");
        have_order = true;
        if (value != "lex" && value != "grlex" && value != "grevlex")
          throw ParseError(1, column + eq + 1, "unknown monomial order '" + std::string(value) + "'");
        d.order = MonomialOrder::parse(value);
      } else {
        throw ParseError(1, column, "unknown ring descriptor key '" + std::string(key) + "'");
      }
    }
    ++index;
    start = end + 1;
  }
  if (!have_n) throw ParseError(1, text.size() + 1, "ring descriptor is missing n=<n>");
  return d;
}

template <CoefficientField F>
class Session {
 public:
  explicit Session(TriPolyRingPtr<F> ring) : ring_(std::move(ring)) {}

  const TriPolyRingPtr<F>& ring() const { return ring_; }
  ElaborationContext<F> context() const { return {ring_, &polynomials_}; }

  const std::map<std::string, TriPolynomial<F>>& polynomials() const { return polynomials_; }
  const std::map<std::string, TriIdeal<F>>& triideals() const { return triideals_; }

  void define_polynomial(const std::string& name, TriPolynomial<F> value) {
    check_fresh(name);
    polynomials_.emplace(name, std::move(value));
  }

  void define_triideal(const std::string& name, TriIdeal<F> ideal) {
    check_fresh(name);
    triideals_.emplace(name, std::move(ideal));
  }

  const TriIdeal<F>& triideal(const std::string& name) const {
    auto it = triideals_.find(name);
    if (it == triideals_.end()) throw DomainMismatch("unknown triideal '" + name + "'");
    return it->second;
  }

 private:
  void check_fresh(const std::string& name) const {
    if (!detail::valid_identifier(name)) throw DomainMismatch("invalid name '" + name + "'");
    if (detail::reserved_name(name)) throw DomainMismatch("name '" + name + "' is reserved");
    if (polynomials_.contains(name) || triideals_.contains(name))
      throw DomainMismatch("name '" + name + "' is already defined");
  }

  TriPolyRingPtr<F> ring_;
  std::map<std::string, TriPolynomial<F>> polynomials_;
  std::map<std::string, TriIdeal<F>> triideals_;
};

using AnySession = std::variant<Session<RationalField>, Session<PrimeField>, Session<QuadraticField>>;

inline AnySession make_session(const RingDescriptor& d) {
  switch (d.kind) {
    case FieldKind::rational:
      return Session<RationalField>(make_tri_ring(make_symmetric_model(RationalField{}), d.n, d.order));
    case FieldKind::prime:
      return Session<PrimeField>(make_tri_ring(make_symmetric_model(PrimeField(d.p)), d.n, d.order));
    case FieldKind::quadratic:
      return Session<QuadraticField>(make_tri_ring(make_twisted_model(QuadraticField(d.p)), d.n, d.order));
  }
  throw DomainMismatch("unknown field kind");
}

}  // namespace trikernel::frontend
