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
 * Recursive-descent parser for tri-polynomial expressions and the
 * elaborator that turns syntax trees into TriPolynomial values.
 *
 * Grammar:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '#') unary)*
 *   unary  := '-' unary | factor
 *   factor := base ('^' posint)?
 *   base   := rational | rational'#' | name | '(' expr ')'
 *
 * A rational is `n` or `n/d`; `1#` is the local identity and `c#` is c*1#.
 * Names are the variables x<j>, u<j>, v<j>, w<j>, the generator `g` of
 * F_{p^2}, or session names.
 *
 * Elaboration is graded. Operands of `*`, `#` and `^` must be homogeneous
 * (purely even or purely odd); mixed values arise only through `+` and `-`.
 * `*` is the ordinary product on even operands, the bimodule action when
 * exactly one side is odd, and the local product when both are odd, so that
 * canonical output such as `u1*v1` and `2#*w1` reads back unchanged. `#`
 * requires odd operands, and `^` on an odd base is a #-power.
 */

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trikernel/error.hpp"
#include "trikernel/triring.hpp"

namespace trikernel::frontend {

inline constexpr std::uint64_t kMaxExponentLiteral = 1000;
inline constexpr std::size_t kMaxNesting = 200;
/** Products whose term-count bound exceeds this are refused rather than expanded. */
inline constexpr std::size_t kMaxElaboratedTerms = 200000;

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { number, odd_number, name, plus, minus, star, sharp, caret, lparen, rparen, comma, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    const std::size_t l = line, col = column;
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j < text.size() && text[j] == '/') {
        std::size_t k = j + 1;
        if (k >= text.size() || !is_digit(text[k])) throw ParseError(l, col + (k - i), "expected digits after '/'");
        while (k < text.size() && is_digit(text[k])) ++k;
        j = k;
      }
      if (j < text.size() && is_name_char(text[j]))
        throw ParseError(l, col + (j - i), "unexpected character '" + std::string(1, text[j]) + "' in number");
      std::string lexeme(text.substr(i, j - i));
      if (j < text.size() && text[j] == '#') {
        out.push_back({TokenKind::odd_number, lexeme, l, col});
        advance(j - i + 1);
      } else {
        out.push_back({TokenKind::number, lexeme, l, col});
        advance(j - i);
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      out.push_back({TokenKind::name, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '#': kind = TokenKind::sharp; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c)
                                                                         : "\\x" + std::to_string(static_cast<unsigned char>(c));
        throw ParseError(l, col, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({TokenKind::end, "", line, column});
  return out;
}

// ---------------------------------------------------------------------------
// Syntax tree

struct SyntaxNode {
  enum class Kind { number, odd_number, name, add, sub, mul, sharp, neg, pow };

  Kind kind;
  std::string text;           ///< literal or name
  std::uint64_t exponent = 0; ///< for pow
  std::vector<SyntaxNode> children;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SyntaxNode expression() {
    Guard guard(*this);
    SyntaxNode left = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token op = next();
      SyntaxNode right = term();
      left = binary(op.kind == TokenKind::plus ? SyntaxNode::Kind::add : SyntaxNode::Kind::sub, std::move(left),
                    std::move(right), op);
    }
    return left;
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    next();
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    if (at.kind == TokenKind::end) throw ParseError(at.line, at.column, message + " at end of input");
    throw ParseError(at.line, at.column, message + ", found '" + at.text + "'");
  }

 private:
  struct Guard {
    explicit Guard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) throw ParseError(p.peek().line, p.peek().column, "expression nested too deeply");
    }
    ~Guard() { --parser.depth_; }
    Parser& parser;
  };

  static SyntaxNode binary(SyntaxNode::Kind kind, SyntaxNode left, SyntaxNode right, const Token& op) {
    SyntaxNode node{kind, op.text, 0, {}, op.line, op.column};
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }

  SyntaxNode term() {
    SyntaxNode left = unary();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::sharp) {
      const Token op = next();
      SyntaxNode right = unary();
      left = binary(op.kind == TokenKind::star ? SyntaxNode::Kind::mul : SyntaxNode::Kind::sharp, std::move(left),
                    std::move(right), op);
    }
    return left;
  }

  SyntaxNode unary() {
    if (peek().kind == TokenKind::minus) {
      Guard guard(*this);
      const Token op = next();
      SyntaxNode node{SyntaxNode::Kind::neg, "-", 0, {}, op.line, op.column};
      node.children.push_back(unary());
      return node;
    }
    return factor();
  }

  SyntaxNode factor() {
    SyntaxNode base_node = base();
    if (peek().kind != TokenKind::caret) return base_node;
    const Token op = next();
    const Token exp = next();
    if (exp.kind != TokenKind::number || exp.text.find('/') != std::string::npos)
      fail(exp, "expected a positive integer exponent");
    if (exp.text.size() > 6 || std::stoull(exp.text) == 0 || std::stoull(exp.text) > kMaxExponentLiteral)
      throw ParseError(exp.line, exp.column,
                       "exponent must be between 1 and " + std::to_string(kMaxExponentLiteral));
    SyntaxNode node{SyntaxNode::Kind::pow, "^", std::stoull(exp.text), {}, op.line, op.column};
    node.children.push_back(std::move(base_node));
    return node;
  }

  SyntaxNode base() {
    const Token t = next();
    switch (t.kind) {
      case TokenKind::number: return {SyntaxNode::Kind::number, t.text, 0, {}, t.line, t.column};
      case TokenKind::odd_number: return {SyntaxNode::Kind::odd_number, t.text, 0, {}, t.line, t.column};
      case TokenKind::name: return {SyntaxNode::Kind::name, t.text, 0, {}, t.line, t.column};
      case TokenKind::lparen: {
        SyntaxNode inner = expression();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      default: fail(t, "expected a number, name or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

/** Parses one expression occupying the whole text. */
inline SyntaxNode parse(std::string_view text, std::size_t first_line = 1) {
  Parser parser(tokenize(text, first_line));
  SyntaxNode node = parser.expression();
  if (parser.peek().kind != TokenKind::end) Parser::fail(parser.peek(), "unexpected token");
  return node;
}

/** Comma-separated expressions; blank text is the empty list. */
inline std::vector<SyntaxNode> parse_list(std::string_view text, std::size_t first_line = 1) {
  Parser parser(tokenize(text, first_line));
  std::vector<SyntaxNode> out;
  if (parser.peek().kind == TokenKind::end) return out;
  out.push_back(parser.expression());
  while (parser.peek().kind == TokenKind::comma) {
    parser.next();
    out.push_back(parser.expression());
  }
  if (parser.peek().kind != TokenKind::end) Parser::fail(parser.peek(), "expected ',' or end of list");
  return out;
}

/** `(<scalar>, ...)`. */
inline std::vector<SyntaxNode> parse_point(std::string_view text, std::size_t first_line = 1) {
  Parser parser(tokenize(text, first_line));
  parser.expect(TokenKind::lparen, "'(' opening a point");
  std::vector<SyntaxNode> out;
  out.push_back(parser.expression());
  while (parser.peek().kind == TokenKind::comma) {
    parser.next();
    out.push_back(parser.expression());
  }
  parser.expect(TokenKind::rparen, "')' closing a point");
  if (parser.peek().kind != TokenKind::end) Parser::fail(parser.peek(), "unexpected token after point");
  return out;
}

// ---------------------------------------------------------------------------
// Elaboration

template <CoefficientField F>
struct ElaborationContext {
  TriPolyRingPtr<F> ring;
  const std::map<std::string, TriPolynomial<F>>* names = nullptr;
};

namespace detail {

/** j from x<j> etc., or nothing when the suffix is not a canonical positive integer. */
inline std::optional<std::size_t> variable_suffix(std::string_view name) {
  if (name.size() < 2 || name[1] == '0' || name.size() > 8) return std::nullopt;
  std::size_t j = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    j = j * 10 + static_cast<std::size_t>(c - '0');
  }
  return j;
}

template <CoefficientField F>
typename F::value_type literal_value(const F& field, const SyntaxNode& node) {
  const auto slash = node.text.find('/');
  try {
    if (slash == std::string::npos) return field.from_rational(mpz_class(node.text, 10), mpz_class(1));
    return field.from_rational(mpz_class(node.text.substr(0, slash), 10), mpz_class(node.text.substr(slash + 1), 10));
  } catch (const DivisionByZero& e) {
    throw ParseError(node.line, node.column, e.what());
  }
}

template <CoefficientField F>
void check_product_size(const TriPolynomial<F>& a, const TriPolynomial<F>& b, const SyntaxNode& node) {
  const std::size_t sa = a.even().size() + a.odd().size(), sb = b.even().size() + b.odd().size();
  if (sa != 0 && sb > kMaxElaboratedTerms / sa)
    throw Overflow("line " + std::to_string(node.line) + ", column " + std::to_string(node.column) +
                   ": expression too large to expand");
}

template <CoefficientField F>
void require_homogeneous(const TriPolynomial<F>& value, const SyntaxNode& node, const char* op) {
  if (!value.is_purely_even() && !value.is_purely_odd())
    throw ParseError(node.line, node.column,
                     std::string("grading error: mixed even/odd operand of '") + op +
                         "'; mixing is only allowed through '+' and '-'");
}

}  // namespace detail

template <CoefficientField F>
TriPolynomial<F> elaborate(const SyntaxNode& node, const ElaborationContext<F>& ctx) {
  using Kind = SyntaxNode::Kind;
  const auto& ring = ctx.ring;
  switch (node.kind) {
    case Kind::number:
      return TriPolynomial<F>::from_even(ring,
                                         Polynomial<F>::constant(ring->even_ring(), detail::literal_value(ring->field(), node)));
    case Kind::odd_number:
      return TriPolynomial<F>::from_odd(ring,
                                        Polynomial<F>::constant(ring->odd_ring(), detail::literal_value(ring->field(), node)));
    case Kind::name: {
      const std::string& name = node.text;
      if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'u' || name[0] == 'v' || name[0] == 'w')) {
        if (auto j = detail::variable_suffix(name)) {
          if (*j < 1 || *j > ring->n())
            throw ParseError(node.line, node.column,
                             "variable " + name + " out of range for n=" + std::to_string(ring->n()));
          switch (name[0]) {
            case 'x': return TriPolynomial<F>::x(ring, *j);
            case 'u': return TriPolynomial<F>::u(ring, *j);
            case 'v': return TriPolynomial<F>::v(ring, *j);
            default: return TriPolynomial<F>::w(ring, *j);
          }
        }
      }
      if (name == "g") {
        if constexpr (requires(const F& f) { f.generator(); }) {
          return TriPolynomial<F>::from_even(ring, Polynomial<F>::constant(ring->even_ring(), ring->field().generator()));
        } else {
          throw ParseError(node.line, node.column, "the generator g exists only over Fp2 fields");
        }
      }
      if (ctx.names) {
        auto it = ctx.names->find(name);
        if (it != ctx.names->end()) return it->second;
      }
      throw ParseError(node.line, node.column, "unknown name '" + name + "'");
    }
    case Kind::add: return elaborate(node.children[0], ctx) + elaborate(node.children[1], ctx);
    case Kind::sub: return elaborate(node.children[0], ctx) - elaborate(node.children[1], ctx);
    case Kind::neg: return -elaborate(node.children[0], ctx);
    case Kind::mul: {
      auto a = elaborate(node.children[0], ctx);
      auto b = elaborate(node.children[1], ctx);
      detail::require_homogeneous(a, node, "*");
      detail::require_homogeneous(b, node, "*");
      if (a.is_zero() || b.is_zero()) return TriPolynomial<F>(ring);
      detail::check_product_size(a, b, node);
      if (a.is_purely_odd() && b.is_purely_odd()) return sharp(a, b);
      return tri_mul(a, b);
    }
    case Kind::sharp: {
      auto a = elaborate(node.children[0], ctx);
      auto b = elaborate(node.children[1], ctx);
      if (!a.is_purely_odd() || !b.is_purely_odd())
        throw ParseError(node.line, node.column, "grading error: '#' applied to an even operand");
      detail::check_product_size(a, b, node);
      return sharp(a, b);
    }
    case Kind::pow: {
      auto base = elaborate(node.children[0], ctx);
      detail::require_homogeneous(base, node, "^");
      if (base.is_zero()) return base;
      const bool odd = base.is_purely_odd();
      auto result = base;
      for (std::uint64_t k = 1; k < node.exponent; ++k) {
        detail::check_product_size(result, base, node);
        result = odd ? sharp(result, base) : tri_mul(result, base);
      }
      return result;
    }
  }
  throw ParseError(node.line, node.column, "unsupported syntax node");
}

/** Parses and elaborates one expression. */
template <CoefficientField F>
TriPolynomial<F> parse_tri_polynomial(std::string_view text, const ElaborationContext<F>& ctx,
                                      std::size_t first_line = 1) {
  return elaborate(parse(text, first_line), ctx);
}

template <CoefficientField F>
std::vector<TriPolynomial<F>> parse_tri_polynomials(std::string_view text, const ElaborationContext<F>& ctx,
                                                    std::size_t first_line = 1) {
  std::vector<TriPolynomial<F>> out;
  for (const auto& node : parse_list(text, first_line)) out.push_back(elaborate(node, ctx));
  return out;
}

/** A point of the affine n-trispace written `(a + b#, ...)`. */
template <CoefficientField F>
TriPoint<F> parse_tri_point(std::string_view text, const ElaborationContext<F>& ctx, std::size_t first_line = 1) {
  const auto nodes = parse_point(text, first_line);
  TriPoint<F> point{ctx.ring, {}};
  for (const auto& node : nodes) {
    auto value = elaborate(node, ctx);
    if (!value.even().is_constant() || !value.odd().is_constant())
      throw ParseError(node.line, node.column, "point coordinate must be a scalar");
    point.coordinates.emplace_back(ctx.ring->model(), value.even().constant_coefficient(),
                                   value.odd().constant_coefficient());
  }
  if (point.coordinates.size() != ctx.ring->n())
    throw ParseError(nodes.front().line, 1,
                     "point has " + std::to_string(point.coordinates.size()) + " coordinates, expected " +
                         std::to_string(ctx.ring->n()));
  return point;
}

}  // namespace trikernel::frontend
