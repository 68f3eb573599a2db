#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/term.hpp"

// Text syntax for terms, equations and systems:
//
//   system   = "vars" varlist ";" { equation ";" } ;
//   equation = term "=" term ;
//   term     = factor { ("*" | "+") factor } ;
//   factor   = atom [ "^-1" ] ;
//   atom     = ident | "e" | "0" | "c(" intlist ")" | "#" int
//            | "[" term "," term "]" | "(" term ")" | "-" atom ;
//
// "*" binds tighter than "+", both associate to the left.  "e" and "0" both
// name the neutral constant; "#k" is base element k (over a direct power, the
// diagonal tuple); c(...) is an explicit power tuple.  [s, t] expands to
// s^-1 * t^-1 * s * t.  An identifier that is not a declared variable may name
// an element of the target algebra through its element_names, and f(a, b)
// applies any other symbol of the signature.
namespace uag {

namespace detail {

enum class Tok { ident, integer, hash, lparen, rparen, lbracket, rbracket, comma, semicolon, equals,
                 star, plus, minus, inverse, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const auto line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          id += text_[pos_];
          advance();
        }
        out.push_back({Tok::ident, std::move(id), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          num += text_[pos_];
          advance();
        }
        out.push_back({Tok::integer, std::move(num), line, col});
      } else if (c == '^') {
        if (text_.substr(pos_, 3) != "^-1") throw ParseError(line, col, "expected '^-1'");
        advance();
        advance();
        advance();
        out.push_back({Tok::inverse, "^-1", line, col});
      } else {
        Tok kind;
        switch (c) {
          case '#': kind = Tok::hash; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          case '[': kind = Tok::lbracket; break;
          case ']': kind = Tok::rbracket; break;
          case ',': kind = Tok::comma; break;
          case ';': kind = Tok::semicolon; break;
          case '=': kind = Tok::equals; break;
          case '*': kind = Tok::star; break;
          case '+': kind = Tok::plus; break;
          case '-': kind = Tok::minus; break;
          default:
            throw ParseError(line, col, "unexpected character '" + std::string(1, c) + "'");
        }
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const FiniteAlgebra& target)
      : tokens_(Lexer(text).run()), target_(target) {}

  EqSystem system() {
    const auto& kw = peek();
    if (kw.kind != Tok::ident || kw.text != "vars") fail(kw, "expected 'vars'");
    next();
    while (peek().kind == Tok::ident) {
      const auto& t = next();
      declare(t);
      if (peek().kind == Tok::comma) {
        next();
        if (peek().kind != Tok::ident) fail(peek(), "expected a variable name");
      }
    }
    expect(Tok::semicolon, "';' after the variable list");
    std::vector<Equation> equations;
    while (peek().kind != Tok::end) {
      equations.push_back(equation());
      if (peek().kind == Tok::end) break;
      expect(Tok::semicolon, "';' after an equation");
    }
    return EqSystem(variables_, std::move(equations));
  }

  Equation single_equation(std::vector<std::string> variables) {
    variables_ = std::move(variables);
    auto e = equation();
    if (peek().kind == Tok::semicolon) next();
    expect(Tok::end, "end of input");
    return e;
  }

  Term single_term(std::vector<std::string> variables) {
    variables_ = std::move(variables);
    auto t = sum();
    expect(Tok::end, "end of input");
    return t;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, what);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + what + (peek().kind == Tok::end ? ", found end of input"
                                                                 : ", found '" + peek().text + "'"));
    }
    return next();
  }

  bool names_element(std::string_view id) const {
    return element_by_name(id).has_value();
  }

  std::optional<Element> element_by_name(std::string_view id) const {
    const FiniteAlgebra* a = &target_;
    if (a->element_names().empty() && a->power()) a = a->power()->base.get();
    const auto& names = a->element_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == id) return static_cast<Element>(i);
    }
    return std::nullopt;
  }

  void declare(const Token& t) {
    if (t.text == "vars" || t.text == "e" || names_element(t.text)) {
      fail(t, "variable '" + t.text + "' is named like a constant");
    }
    if (target_.signature().has(t.text)) fail(t, "variable '" + t.text + "' is named like a symbol");
    for (const auto& v : variables_) {
      if (v == t.text) fail(t, "variable '" + t.text + "' declared twice");
    }
    variables_.push_back(t.text);
  }

  void require_symbol(const Token& at, std::string_view symbol, int arity) const {
    auto idx = target_.signature().find(symbol);
    if (!idx || target_.signature()[*idx].arity != arity) {
      fail(at, "symbol '" + std::string(symbol) + "' is not in the signature of '" + target_.name() +
                   "'");
    }
  }

  Equation equation() {
    auto lhs = sum();
    expect(Tok::equals, "'='");
    auto rhs = sum();
    return {std::move(lhs), std::move(rhs)};
  }

  Term sum() {
    Term t = product();
    while (peek().kind == Tok::plus) {
      require_symbol(next(), sym::add, 2);
      t = add(std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = factor();
    while (peek().kind == Tok::star) {
      require_symbol(next(), sym::mul, 2);
      t = mul(std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    Term t = atom();
    if (peek().kind == Tok::inverse) {
      require_symbol(next(), sym::inv, 1);
      t = inv(std::move(t));
    }
    return t;
  }

  Element integer(const Token& t) const {
    if (t.text.size() > 9) fail(t, "integer '" + t.text + "' is too large");
    return static_cast<Element>(std::stoul(t.text));
  }

  Term neutral(const Token& at) const {
    auto idx = target_.signature().neutral_symbol();
    if (!idx) fail(at, "'" + at.text + "': algebra '" + target_.name() + "' has no neutral constant");
    return apply(target_.signature()[*idx].name);
  }

  Term base_constant(const Token& at, Element k) const {
    const auto limit = target_.power() ? target_.power()->codec.base_size() : target_.size();
    if (k >= limit) fail(at, "element #" + std::to_string(k) + " is outside the carrier");
    return element(k);
  }

  Term tuple_constant(const Token& at) {
    expect(Tok::lparen, "'(' after 'c'");
    std::vector<Element> coords;
    if (peek().kind != Tok::rparen) {
      coords.push_back(integer(expect(Tok::integer, "an element index")));
      while (peek().kind == Tok::comma) {
        next();
        coords.push_back(integer(expect(Tok::integer, "an element index")));
      }
    }
    expect(Tok::rparen, "')' closing the tuple");
    const auto* p = target_.power();
    if (!p) fail(at, "tuple constant over '" + target_.name() + "', which is not a direct power");
    if (coords.size() != p->codec.width()) {
      fail(at, "tuple has width " + std::to_string(coords.size()) + ", algebra '" + target_.name() +
                   "' has width " + std::to_string(p->codec.width()));
    }
    for (Element c : coords) {
      if (c >= p->codec.base_size()) fail(at, "tuple entry " + std::to_string(c) + " is outside the carrier");
    }
    return tuple(std::move(coords));
  }

  Term atom() {
    const Token t = next();
    switch (t.kind) {
      case Tok::integer:
        if (t.text == "0") return neutral(t);
        fail(t, "bare integer '" + t.text + "'; write #" + t.text + " for a carrier element");
      case Tok::hash: return base_constant(t, integer(expect(Tok::integer, "an element index after '#'")));
      case Tok::minus:
        require_symbol(t, sym::neg, 1);
        return neg(atom());
      case Tok::lparen: {
        Term inner = sum();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::lbracket: {
        require_symbol(t, sym::mul, 2);
        require_symbol(t, sym::inv, 1);
        Term s = sum();
        expect(Tok::comma, "',' in commutator");
        Term u = sum();
        expect(Tok::rbracket, "']' closing the commutator");
        return commutator(std::move(s), std::move(u));
      }
      case Tok::ident: return identifier(t);
      default: fail(t, t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  Term identifier(const Token& t) {
    for (const auto& v : variables_) {
      if (v == t.text) return var(t.text);
    }
    if (t.text == "e") return neutral(t);
    if (peek().kind == Tok::lparen) {
      if (t.text == "c") return tuple_constant(t);
      auto idx = target_.signature().find(t.text);
      if (!idx) fail(t, "unknown symbol '" + t.text + "'");
      next();
      std::vector<Term> args;
      if (peek().kind != Tok::rparen) {
        args.push_back(sum());
        while (peek().kind == Tok::comma) {
          next();
          args.push_back(sum());
        }
      }
      expect(Tok::rparen, "')' closing the argument list");
      if (static_cast<int>(args.size()) != target_.signature()[*idx].arity) {
        fail(t, "symbol '" + t.text + "' takes " + std::to_string(target_.signature()[*idx].arity) +
                    " arguments");
      }
      return apply(t.text, std::move(args));
    }
    if (auto idx = target_.signature().find(t.text); idx && target_.signature()[*idx].arity == 0) {
      return apply(t.text);
    }
    if (auto k = element_by_name(t.text)) return element(*k);
    fail(t, "variable '" + t.text + "' is not declared");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const FiniteAlgebra& target_;
  std::vector<std::string> variables_;
};

// Precedence levels for printing: sums, products, postfix inverse, atoms.
inline int print_level(const Term& t) {
  const auto* a = t.as_apply();
  if (!a) return 4;
  if (a->args.size() == 2 && a->symbol == sym::add) return 1;
  if (a->args.size() == 2 && a->symbol == sym::mul) return 2;
  if (a->args.size() == 1 && a->symbol == sym::inv) return 3;
  return 4;
}

inline void print(const Term& t, std::string& out);

inline void print_at(const Term& t, int min_level, std::string& out) {
  if (print_level(t) < min_level) {
    out += '(';
    print(t, out);
    out += ')';
  } else {
    print(t, out);
  }
}

inline void print(const Term& t, std::string& out) {
  if (const auto* v = t.as_var()) {
    out += v->name;
    return;
  }
  if (const auto* c = t.as_const()) {
    if (c->tuple) {
      out += "c(";
      for (std::size_t i = 0; i < c->coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c->coords[i]);
      }
      out += ')';
    } else {
      out += '#';
      out += std::to_string(c->coords.at(0));
    }
    return;
  }
  const auto& a = *t.as_apply();
  const int level = print_level(t);
  if (level == 1 || level == 2) {
    print_at(a.args[0], level, out);
    out += level == 1 ? " + " : " * ";
    print_at(a.args[1], level + 1, out);
  } else if (level == 3) {
    print_at(a.args[0], 4, out);
    out += "^-1";
  } else if (a.symbol == sym::neg && a.args.size() == 1) {
    out += '-';
    print_at(a.args[0], 4, out);
  } else if (a.args.empty()) {
    out += a.symbol;
  } else {
    out += a.symbol;
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ", ";
      print(a.args[i], out);
    }
    out += ')';
  }
}

}  // namespace detail

inline EqSystem parse_system(std::string_view text, const FiniteAlgebra& target) {
  return detail::Parser(text, target).system();
}

inline Equation parse_equation(std::string_view text, const FiniteAlgebra& target,
                               std::vector<std::string> variables) {
  return detail::Parser(text, target).single_equation(std::move(variables));
}

inline Term parse_term(std::string_view text, const FiniteAlgebra& target,
                       std::vector<std::string> variables) {
  return detail::Parser(text, target).single_term(std::move(variables));
}

inline std::string print_term(const Term& t) {
  std::string out;
  detail::print(t, out);
  return out;
}

inline std::string print_equation(const Equation& e) {
  return print_term(e.lhs) + " = " + print_term(e.rhs);
}

// Canonical text: the variables clause, then one equation per line, each
// terminated by ';'. No trailing newline.
inline std::string print_system(const EqSystem& s) {
  std::string out = "vars";
  for (std::size_t i = 0; i < s.variables().size(); ++i) {
    out += i ? ", " : " ";
    out += s.variables()[i];
  }
  out += ';';
  for (const auto& e : s.equations()) {
    out += '\n';
    out += print_equation(e);
    out += ';';
  }
  return out;
}

}  // namespace uag
