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
 * Command-line dispatch for the `trikernel` tool and its `.tri` scripts.
 *
 * Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
 * parse error, 3 resource budget exceeded. A script stops at the first error
 * and returns its code; otherwise it returns the largest verdict code of its
 * commands.
 *
 * Script lines, one per line, `//` starts a comment line:
 *
 *   ring Fp:3, n=1
 *   let f = x1^2 + v1
 *   triideal J --even "x1^2" --odd "v1^2"
 *   radical-member --triideal J --elem f
 */

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/frontend/parser.hpp"
#include "trikernel/frontend/printer.hpp"
#include "trikernel/frontend/session.hpp"
#include "trikernel/groebner.hpp"
#include "trikernel/triring.hpp"
#include "trikernel/varieties.hpp"

namespace trikernel::frontend {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitBudget = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

/** Options of one subcommand invocation, from argv or from a script line. */
struct CommandArgs {
  std::string command;
  std::optional<std::string> ring, ideal, even, odd, triideal, elem, point, out;
  std::string format = "text";
  std::uint64_t bound = 6;
  std::optional<std::uint64_t> budget;
  std::size_t samples = 10;
  std::uint64_t seed = 0x5eed;
  bool list = false;

  /** Where option values start, for error positions. */
  std::size_t line = 1;
  std::map<std::string, std::size_t> columns;
};

struct CommandResult {
  int code = kExitOk;
  std::string text;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gb",      "member",   "radical-member", "power",     "close",
                                                 "eval",    "variety",  "ideal-of",       "nss-check", "repr"};
  return names;
}

namespace detail {

/** Registers the subcommands and their options on `app`, writing into `a`. */
inline void build_subcommands(CLI::App& app, CommandArgs& a) {
  app.require_subcommand(0, 1);
  auto ring = [&](CLI::App* s) {
    s->add_option("--ring", a.ring, "ring descriptor: QQ|Fp:<p>|Fp2:<p>, n=<n>, order=<grevlex|lex|grlex>");
  };
  auto out = [&](CLI::App* s) { s->add_option("--out", a.out, "write the result to this file"); };
  auto ideal = [&](CLI::App* s) {
    s->add_option("--ideal", a.ideal, "comma-separated generators of an even or odd ideal");
  };
  auto tri = [&](CLI::App* s) {
    s->add_option("--even", a.even, "even generators of a triideal (closed automatically)");
    s->add_option("--odd", a.odd, "odd generators of a triideal (closed automatically)");
    s->add_option("--triideal", a.triideal, "a triideal named in the script session");
  };
  auto elem = [&](CLI::App* s) { s->add_option("--elem", a.elem, "the element to test")->required(); };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", a.budget, "maximum number of trispace points to enumerate")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto bound = [&](CLI::App* s, const char* what) {
    s->add_option("--bound", a.bound, what)->check(CLI::Range(std::uint64_t{1}, kMaxExponentLiteral));
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an even or odd ideal, or of a triideal");
  ring(gb), ideal(gb), tri(gb), out(gb);
  auto* member = app.add_subcommand("member", "ideal membership");
  ring(member), ideal(member), tri(member), elem(member), out(member);
  auto* radical = app.add_subcommand("radical-member", "radical membership (Rabinowitsch)");
  ring(radical), ideal(radical), tri(radical), elem(radical), out(radical);
  auto* power = app.add_subcommand("power", "least m <= bound with elem^m in the ideal");
  ring(power), ideal(power), tri(power), elem(power), out(power);
  bound(power, "largest exponent to try");
  auto* close = app.add_subcommand("close", "closure of a triideal");
  ring(close), tri(close), out(close);
  auto* eval = app.add_subcommand("eval", "evaluate a tri-polynomial at a point");
  ring(eval), elem(eval), out(eval);
  eval->add_option("--point", a.point, "point (a1 + b1#, ...)")->required();
  auto* variety = app.add_subcommand("variety", "enumerate the varieties V0, V1 of a triideal");
  ring(variety), tri(variety), out(variety), budget(variety), format(variety);
  variety->add_flag("--list", a.list, "list the points");
  auto* ideal_of = app.add_subcommand("ideal-of", "triideal of the enumerated varieties");
  ring(ideal_of), tri(ideal_of), out(ideal_of), budget(ideal_of);
  auto* nss = app.add_subcommand("nss-check", "Nullstellensatz inclusion and equality diagnostics");
  ring(nss), tri(nss), out(nss), budget(nss), format(nss);
  bound(nss, "largest power tried when certifying radical samples");
  nss->add_option("--samples", a.samples, "radical members sampled per part")->check(CLI::Range(0, 1000));
  nss->add_option("--seed", a.seed, "sampling seed");
  auto* repr = app.add_subcommand("repr", "cofactors h with elem = sum h_i g_i");
  ring(repr), ideal(repr), elem(repr), out(repr);
}

inline std::string selected_command(const CLI::App& app) {
  for (const auto* sub : app.get_subcommands()) return sub->get_name();
  return {};
}

/** Records where each option value begins in the source line. */
struct Word {
  std::string text;
  std::size_t column;
};

inline void record_columns(const std::vector<Word>& words, CommandArgs& a) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i].text;
    if (!w.starts_with("--")) continue;
    const auto eq = w.find('=');
    if (eq != std::string::npos) {
      a.columns[w.substr(2, eq - 2)] = words[i].column + eq + 1;
    } else if (i + 1 < words.size()) {
      a.columns[w.substr(2)] = words[i + 1].column;
    }
  }
}

/** Shell-like word splitting with single and double quotes. */
inline std::vector<Word> split_words(std::string_view line, std::size_t line_no) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    Word word{"", i + 1 + ((line[i] == '"' || line[i] == '\'') ? 1 : 0)};
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      const char c = line[i];
      if (c == '"' || c == '\'') {
        const std::size_t open = i++;
        while (i < line.size() && line[i] != c) {
          if (c == '"' && line[i] == '\\' && i + 1 < line.size() && (line[i + 1] == '"' || line[i + 1] == '\\')) ++i;
          word.text += line[i++];
        }
        if (i >= line.size()) throw ParseError(line_no, open + 1, "unterminated quote");
        ++i;
      } else {
        word.text += c;
        ++i;
      }
    }
    out.push_back(std::move(word));
  }
  return out;
}

/** Parses `words` (without program name) into `a`; returns an exit code when parsing ends the command. */
inline std::optional<int> parse_words(CLI::App& app, const std::vector<std::string>& words, std::ostream& out,
                                      std::ostream& err) {
  std::vector<std::string> reversed(words.rbegin(), words.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return std::nullopt;
}

// --- elaboration helpers ---------------------------------------------------

template <CoefficientField F>
struct PartIdeal {
  Part part;
  std::vector<Polynomial<F>> generators;
};

inline ParseError relocate(const ParseError& e, const CommandArgs& a, const std::string& option) {
  std::size_t column = e.column();
  if (auto it = a.columns.find(option); it != a.columns.end() && e.line() == a.line) column += it->second - 1;
  return ParseError(e.line(), column, "in --" + option + ": " + e.message());
}

template <CoefficientField F>
TriPolynomial<F> elaborate_option(const Session<F>& s, const CommandArgs& a, const std::string& option,
                                  const std::string& text) {
  try {
    return parse_tri_polynomial(text, s.context(), a.line);
  } catch (const ParseError& e) {
    throw relocate(e, a, option);
  }
}

template <CoefficientField F>
std::vector<TriPolynomial<F>> elaborate_list(const Session<F>& s, const CommandArgs& a, const std::string& option,
                                             const std::string& text) {
  try {
    return parse_tri_polynomials(text, s.context(), a.line);
  } catch (const ParseError& e) {
    throw relocate(e, a, option);
  }
}

inline bool has_tri_source(const CommandArgs& a) {
  return a.even || a.odd || a.triideal;
}

template <CoefficientField F>
TriIdeal<F> tri_source(const Session<F>& s, const CommandArgs& a) {
  if (a.ideal) throw UsageError("--ideal cannot be combined with --even/--odd/--triideal");
  if (a.triideal) {
    if (a.even || a.odd) throw UsageError("--triideal cannot be combined with --even/--odd");
    return s.triideal(*a.triideal);
  }
  std::vector<Polynomial<F>> even, odd;
  if (a.even)
    for (const auto& f : elaborate_list(s, a, "even", *a.even)) {
      if (!f.is_purely_even()) throw UsageError("--even generator " + to_string(f) + " has a nonzero odd part");
      even.push_back(f.even());
    }
  if (a.odd)
    for (const auto& f : elaborate_list(s, a, "odd", *a.odd)) {
      if (!f.is_purely_odd()) throw UsageError("--odd generator " + to_string(f) + " has a nonzero even part");
      odd.push_back(f.odd());
    }
  return triideal_close(s.ring(), std::move(even), std::move(odd));
}

/** Generators of --ideal; their grading decides whether they live in the even or odd ring. */
template <CoefficientField F>
PartIdeal<F> part_source(const Session<F>& s, const CommandArgs& a, std::optional<Part> hint) {
  const auto gens = elaborate_list(s, a, "ideal", *a.ideal);
  bool any_even = false, any_odd = false;
  for (const auto& g : gens) {
    if (!g.is_purely_even() && !g.is_purely_odd())
      throw UsageError("--ideal generator " + to_string(g) + " mixes even and odd parts");
    any_even = any_even || !g.even().is_zero();
    any_odd = any_odd || !g.odd().is_zero();
  }
  if (any_even && any_odd) throw UsageError("--ideal generators must be all even or all odd");
  const Part part = any_even ? Part::even : any_odd ? Part::odd : hint.value_or(Part::even);
  PartIdeal<F> out{part, {}};
  for (const auto& g : gens) out.generators.push_back(part == Part::even ? g.even() : g.odd());
  return out;
}

template <CoefficientField F>
std::optional<Part> grading_of(const TriPolynomial<F>& f) {
  if (f.is_zero()) return std::nullopt;
  if (f.is_purely_even()) return Part::even;
  if (f.is_purely_odd()) return Part::odd;
  throw UsageError("--elem " + to_string(f) + " mixes even and odd parts; a plain ideal needs a homogeneous element");
}

template <CoefficientField F>
const PolyRingPtr<F>& part_ring(const Session<F>& s, Part part) {
  return part == Part::even ? s.ring()->even_ring() : s.ring()->odd_ring();
}

template <CoefficientField F>
Polynomial<F> part_of(const TriPolynomial<F>& f, Part part) {
  return part == Part::even ? f.even() : f.odd();
}

template <CoefficientField F>
void require_part(const TriPolynomial<F>& f, Part part) {
  auto g = grading_of(f);
  if (g && *g != part)
    throw UsageError(std::string("--elem is ") + (*g == Part::even ? "even" : "odd") + " but the ideal is " +
                     (part == Part::even ? "even" : "odd"));
}

inline std::string bool_line(bool b) { return b ? "true\n" : "false\n"; }

inline std::uint64_t budget_of(const CommandArgs& a) {
  return a.budget ? *a.budget : enumeration_budget();
}

}  // namespace detail

/** Executes one subcommand against a session. */
template <CoefficientField F>
CommandResult run_command(const CommandArgs& a, const Session<F>& s) {
  using namespace detail;
  const auto& ring = s.ring();
  const std::string& cmd = a.command;
  const bool tri = has_tri_source(a);
  auto need_source = [&] {
    if (!tri && !a.ideal) throw UsageError(cmd + " needs --ideal, or --even/--odd, or --triideal");
  };

  if (cmd == "gb") {
    need_source();
    if (tri) {
      const auto J = tri_source(s, a);
      auto basis = [&](Part part, const std::vector<Polynomial<F>>& gens) {
        return buchberger(part_ring(s, part), std::span<const Polynomial<F>>(gens)).basis;
      };
      const auto even = basis(Part::even, J.even_generators());
      const auto odd = basis(Part::odd, J.odd_generators());
      return {kExitOk, "even: " + print_generators(ring, Part::even, even) + "\n" +
                           "odd: " + print_generators(ring, Part::odd, odd) + "\n"};
    }
    const auto I = part_source(s, a, std::nullopt);
    const auto gb = buchberger(part_ring(s, I.part), std::span<const Polynomial<F>>(I.generators));
    std::string text;
    for (const auto& g : gb.basis) text += print_part(ring, I.part, g) + "\n";
    return {kExitOk, text.empty() ? "0\n" : text};
  }

  if (cmd == "member" || cmd == "radical-member" || cmd == "power") {
    need_source();
    const auto f = elaborate_option(s, a, "elem", *a.elem);
    if (cmd == "power") {
      std::optional<std::uint64_t> m;
      if (tri) {
        const auto J = tri_source(s, a);
        const auto part = grading_of(f);
        if (!part || *part == Part::even)
          m = minimal_power(f.even(), std::span<const Polynomial<F>>(J.even_generators()), a.bound);
        else
          m = minimal_sharp_power(f, J, a.bound);
      } else {
        const auto I = part_source(s, a, grading_of(f));
        require_part(f, I.part);
        m = minimal_power(part_of(f, I.part), std::span<const Polynomial<F>>(I.generators), a.bound);
      }
      return m ? CommandResult{kExitOk, std::to_string(*m) + "\n"} : CommandResult{kExitNegative, "none\n"};
    }
    bool verdict_value;
    if (tri) {
      const auto J = tri_source(s, a);
      verdict_value = cmd == "member" ? triideal_member(f, J) : graded_radical_member(f, J);
    } else {
      const auto I = part_source(s, a, grading_of(f));
      require_part(f, I.part);
      const auto g = part_of(f, I.part);
      const std::span<const Polynomial<F>> gens(I.generators);
      verdict_value = cmd == "member" ? ideal_member(g, gens) : radical_member(g, gens);
    }
    return {verdict_value ? kExitOk : kExitNegative, bool_line(verdict_value)};
  }

  if (cmd == "close") {
    if (!tri) throw UsageError("close needs --even/--odd or --triideal");
    return {kExitOk, print_canonical(tri_source(s, a))};
  }

  if (cmd == "eval") {
    const auto f = elaborate_option(s, a, "elem", *a.elem);
    TriPoint<F> point{ring, {}};
    try {
      point = parse_tri_point(*a.point, s.context(), a.line);
    } catch (const ParseError& e) {
      throw relocate(e, a, "point");
    }
    return {kExitOk, to_string(ring, evaluate_tri(f, point)) + "\n"};
  }

  if (cmd == "variety" || cmd == "ideal-of" || cmd == "nss-check") {
    if (!tri) throw UsageError(cmd + " needs --even/--odd or --triideal");
    const auto J = tri_source(s, a);
    if (cmd == "nss-check") {
      NssOptions options;
      options.budget = budget_of(a);
      options.samples = a.samples;
      options.power_bound = a.bound;
      options.seed = a.seed;
      const auto report = nss_check(J, options);
      const bool ok = report.containment && report.inclusion;
      return {ok ? kExitOk : kExitNegative, a.format == "json" ? print_json(report) : print_canonical(report)};
    }
    const auto pair = enumerate_varieties(J, budget_of(a));
    if (cmd == "ideal-of") return {kExitOk, print_canonical(ideal_of_varieties(pair))};
    const bool contained = check_containment(pair);
    if (a.format == "json") {
      nlohmann::ordered_json j;
      j["v0_count"] = pair.v0.size();
      j["v1_count"] = pair.v1.size();
      j["containment"] = verdict(contained);
      if (a.list) {
        j["v0"] = nlohmann::json::array();
        j["v1"] = nlohmann::json::array();
        for (const auto& p : pair.v0) j["v0"].push_back(print_canonical(p));
        for (const auto& p : pair.v1) j["v1"].push_back(print_canonical(p));
      }
      return {contained ? kExitOk : kExitNegative, j.dump(2) + "\n"};
    }
    std::string text = "v0_count: " + std::to_string(pair.v0.size()) + "\n" +
                       "v1_count: " + std::to_string(pair.v1.size()) + "\n" +
                       "containment: " + verdict(contained) + "\n";
    if (a.list) {
      text += "v0:\n";
      for (const auto& p : pair.v0) text += "  " + print_canonical(p) + "\n";
      text += "v1:\n";
      for (const auto& p : pair.v1) text += "  " + print_canonical(p) + "\n";
    }
    return {contained ? kExitOk : kExitNegative, text};
  }

  if (cmd == "repr") {
    if (!a.ideal) throw UsageError("repr needs --ideal");
    const auto f = elaborate_option(s, a, "elem", *a.elem);
    const auto I = part_source(s, a, grading_of(f));
    require_part(f, I.part);
    const auto h = representation(part_of(f, I.part), std::span<const Polynomial<F>>(I.generators));
    if (!h) return {kExitNegative, "none\n"};
    std::string text;
    for (std::size_t i = 0; i < h->size(); ++i)
      text += "h" + std::to_string(i + 1) + " = " + print_part(ring, I.part, (*h)[i]) + "\n";
    return {kExitOk, text};
  }

  throw UsageError("unknown command '" + cmd + "'");
}

inline CommandResult run_command(const CommandArgs& a, const AnySession& session) {
  return std::visit([&](const auto& s) { return run_command(a, s); }, session);
}

namespace detail {

inline AnySession session_for_descriptor(const std::string& text, const CommandArgs& a, const std::string& option) {
  try {
    return make_session(parse_ring_descriptor(text));
  } catch (const ParseError& e) {
    throw relocate(ParseError(a.line, e.column(), e.message()), a, option);
  }
}

inline void emit(const CommandResult& result, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << result.text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + *path + "' for writing");
  file << result.text;
  if (!file) throw UsageError("failed writing '" + *path + "'");
}

/** Maps a failure to its exit code and reports it. */
inline int report_failure(std::ostream& err, const std::string& prefix) {
  try {
    throw;
  } catch (const BudgetExceeded& e) {
    err << "trikernel: " << prefix << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Overflow& e) {
    err << "trikernel: " << prefix << "resource limit: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::bad_alloc&) {
    err << "trikernel: " << prefix << "resource limit: out of memory\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "trikernel: " << prefix << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "trikernel: " << prefix << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline std::string_view trim_line(std::string_view s) { return trim(s); }

}  // namespace detail

/** Runs a `.tri` script read from `in`; `name` labels error messages. */
inline int run_script(std::istream& in, const std::string& name, std::ostream& out, std::ostream& err) {
  std::optional<AnySession> session;
  int worst = kExitOk;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string prefix = name + ": line " + std::to_string(line_no) + ": ";
    try {
      const std::string_view line = detail::trim_line(raw);
      if (line.empty() || line.starts_with("//")) continue;
      const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
      const std::size_t space = line.find_first_of(" \t");
      const std::string_view head = line.substr(0, space);
      const std::string_view rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
      const std::size_t rest_column =
          indent + (space == std::string_view::npos ? line.size() : space + 1) + 1;

      if (head == "ring") {
        try {
          session = make_session(parse_ring_descriptor(rest));
        } catch (const ParseError& e) {
          throw ParseError(line_no, rest_column + e.column() - 1, e.message());
        }
        continue;
      }
      if (!session) throw UsageError("no ring declared; start the script with 'ring <descriptor>'");

      if (head == "let") {
        const std::size_t eq = rest.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, rest_column, "expected 'let NAME = expression'");
        const std::string let_name(detail::trim(rest.substr(0, eq)));
        const std::string_view expr = rest.substr(eq + 1);
        std::visit(
            [&](auto& s) {
              try {
                auto value = parse_tri_polynomial(expr, s.context(), line_no);
                s.define_polynomial(let_name, std::move(value));
              } catch (const ParseError& e) {
                throw ParseError(line_no, rest_column + eq + e.column(), e.message());
              }
            },
            *session);
        continue;
      }

      const auto words = detail::split_words(line, line_no);
      std::vector<std::string> texts;
      for (const auto& w : words) texts.push_back(w.text);

      CommandArgs a;
      a.line = line_no;
      std::vector<detail::Word> shifted = words;
      for (auto& w : shifted) w.column += indent;
      detail::record_columns(shifted, a);

      if (head == "triideal") {
        CLI::App app{"declare a closed triideal", "triideal"};
        std::string tri_name;
        app.add_option("name", tri_name, "triideal name")->required();
        app.add_option("--even", a.even, "even generators");
        app.add_option("--odd", a.odd, "odd generators");
        std::ostringstream help;
        if (auto code = detail::parse_words(app, {texts.begin() + 1, texts.end()}, help, help)) {
          if (*code == kExitOk) continue;
          throw UsageError("triideal: " + help.str());
        }
        std::visit([&](auto& s) { s.define_triideal(tri_name, detail::tri_source(s, a)); }, *session);
        continue;
      }

      if (std::find(command_names().begin(), command_names().end(), std::string(head)) == command_names().end())
        throw UsageError("unknown directive '" + std::string(head) + "'");

      CLI::App app{"trikernel script command", "trikernel"};
      detail::build_subcommands(app, a);
      std::ostringstream messages;
      if (auto code = detail::parse_words(app, texts, out, messages)) {
        if (*code == kExitOk) continue;
        std::string text = messages.str();
        while (!text.empty() && text.back() == '\n') text.pop_back();
        throw UsageError(text);
      }
      a.command = detail::selected_command(app);
      CommandResult result;
      if (a.ring) {
        result = run_command(a, detail::session_for_descriptor(*a.ring, a, "ring"));
      } else {
        result = run_command(a, *session);
      }
      detail::emit(result, a.out, out);
      worst = std::max(worst, result.code);
    } catch (...) {
      return detail::report_failure(err, prefix);
    }
  }
  return worst;
}

/** Entry point: `args` excludes the program name. */
inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"trikernel: polynomial triring kernel", "trikernel"};
    CommandArgs a;
    std::optional<std::string> script;
    app.add_option("--script", script, "run a .tri session script");
    detail::build_subcommands(app, a);
    std::ostringstream messages;
    if (auto code = detail::parse_words(app, args, out, messages)) {
      err << messages.str();
      return *code;
    }
    a.command = detail::selected_command(app);
    if (script) {
      if (!a.command.empty()) throw UsageError("--script cannot be combined with a subcommand");
      std::ifstream file(*script, std::ios::binary);
      if (!file) throw UsageError("cannot open script '" + *script + "'");
      return run_script(file, *script, out, err);
    }
    if (a.command.empty()) {
      err << app.help();
      return kExitUsage;
    }
    if (!a.ring) throw UsageError("--ring is required");
    const auto session = detail::session_for_descriptor(*a.ring, a, "ring");
    const auto result = run_command(a, session);
    detail::emit(result, a.out, out);
    return result.code;
  } catch (...) {
    return detail::report_failure(err, "");
  }
}

}  // namespace trikernel::frontend
