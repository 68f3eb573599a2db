#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/signature.hpp"

namespace uag {

class Term;

struct Var {
  std::string name;

  bool operator==(const Var&) const = default;
};

// A constant of L(A). A base constant names one carrier element (over a direct
// power it stands for the diagonal tuple); a tuple constant lists every
// coordinate of a power element explicitly.
struct Const {
  std::vector<Element> coords;
  bool tuple = false;

  bool operator==(const Const&) const = default;
};

struct Apply {
  std::string symbol;
  std::vector<Term> args;
};

class Term {
 public:
  using Node = std::variant<Var, Const, Apply>;

  Term(Var v) : node_(std::move(v)) {}
  Term(Const c) : node_(std::move(c)) {}
  Term(Apply a) : node_(std::move(a)) {}

  const Node& node() const noexcept { return node_; }

  const Var* as_var() const noexcept { return std::get_if<Var>(&node_); }
  const Const* as_const() const noexcept { return std::get_if<Const>(&node_); }
  const Apply* as_apply() const noexcept { return std::get_if<Apply>(&node_); }

  bool is_apply_of(std::string_view symbol) const {
    const auto* a = as_apply();
    return a && a->symbol == symbol;
  }

  std::size_t depth() const {
    const auto* a = as_apply();
    if (!a) return 0;
    std::size_t d = 0;
    for (const auto& arg : a->args) d = std::max(d, arg.depth());
    return d + 1;
  }

  friend bool operator==(const Term& a, const Term& b);

 private:
  Node node_;
};

inline bool operator==(const Apply& a, const Apply& b) {
  return a.symbol == b.symbol && a.args == b.args;
}

inline bool operator==(const Term& a, const Term& b) { return a.node_ == b.node_; }

// Builders.
inline Term var(std::string name) { return Var{std::move(name)}; }
inline Term element(Element k) { return Const{{k}, false}; }
inline Term tuple(std::vector<Element> coords) { return Const{std::move(coords), true}; }
inline Term apply(std::string symbol, std::vector<Term> args = {}) {
  return Apply{std::move(symbol), std::move(args)};
}
inline Term mul(Term a, Term b) { return apply(std::string(sym::mul), {std::move(a), std::move(b)}); }
inline Term add(Term a, Term b) { return apply(std::string(sym::add), {std::move(a), std::move(b)}); }
inline Term neg(Term a) { return apply(std::string(sym::neg), {std::move(a)}); }
inline Term inv(Term a) { return apply(std::string(sym::inv), {std::move(a)}); }
inline Term one() { return apply(std::string(sym::one)); }
inline Term zero() { return apply(std::string(sym::zero)); }

// [s, t] = s^-1 t^-1 s t, left-nested.
inline Term commutator(Term s, Term t) {
  return mul(mul(mul(inv(s), inv(t)), s), t);
}

// t^n as a left-nested product; t^0 is the identity constant.
inline Term power(const Term& t, std::size_t n) {
  if (n == 0) return one();
  Term out = t;
  for (std::size_t i = 1; i < n; ++i) out = mul(std::move(out), t);
  return out;
}

struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(const Equation&) const = default;
};

namespace detail {
inline void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (const auto* v = t.as_var()) {
    if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
  } else if (const auto* a = t.as_apply()) {
    for (const auto& arg : a->args) collect_variables(arg, out);
  }
}
}  // namespace detail

// Variable names in order of first occurrence.
inline std::vector<std::string> free_variables(const Term& t) {
  std::vector<std::string> out;
  detail::collect_variables(t, out);
  return out;
}

inline std::vector<std::string> free_variables(const Equation& e) {
  std::vector<std::string> out;
  detail::collect_variables(e.lhs, out);
  detail::collect_variables(e.rhs, out);
  return out;
}

// An ordered list of equations over an ordered, finite list of variables.
// Variable order fixes the coordinate order of solution tuples.
class EqSystem {
 public:
  EqSystem() = default;

  EqSystem(std::vector<std::string> variables, std::vector<Equation> equations)
      : variables_(std::move(variables)), equations_(std::move(equations)) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (variables_[i] == variables_[j]) {
          throw InvalidSystemError("variable '" + variables_[i] + "' declared twice");
        }
      }
    }
    for (const auto& e : equations_) require_declared(e);
  }

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  std::size_t size() const noexcept { return equations_.size(); }
  bool empty() const noexcept { return equations_.empty(); }

  bool declares(std::string_view name) const {
    return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
  }

  void require_declared(const Equation& e) const {
    for (const auto& v : free_variables(e)) {
      if (!declares(v)) throw InvalidSystemError("variable '" + v + "' is not declared");
    }
  }

  void add(Equation e) {
    require_declared(e);
    equations_.push_back(std::move(e));
  }

  // The first k equations over the same variables.
  EqSystem prefix(std::size_t k) const {
    EqSystem out;
    out.variables_ = variables_;
    out.equations_.assign(equations_.begin(),
                          equations_.begin() + static_cast<std::ptrdiff_t>(std::min(k, size())));
    return out;
  }

  bool operator==(const EqSystem&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Equation> equations_;
};

using Binding = std::map<std::string, Term, std::less<>>;

// Simultaneous substitution; unbound variables are left alone.
inline Term substitute(const Term& t, const Binding& binding) {
  if (const auto* v = t.as_var()) {
    auto it = binding.find(v->name);
    return it == binding.end() ? t : it->second;
  }
  if (const auto* a = t.as_apply()) {
    std::vector<Term> args;
    args.reserve(a->args.size());
    for (const auto& arg : a->args) args.push_back(substitute(arg, binding));
    return apply(a->symbol, std::move(args));
  }
  return t;
}

inline Equation substitute(const Equation& e, const Binding& binding) {
  return {substitute(e.lhs, binding), substitute(e.rhs, binding)};
}

// Drops identity factors (e * t, t * e, e^-1) and zero summands
// (0 + t, t + 0, -0). Sound in any monoid, group or ring.
inline Term drop_neutral(const Term& t) {
  const auto* a = t.as_apply();
  if (!a) return t;
  std::vector<Term> args;
  for (const auto& arg : a->args) args.push_back(drop_neutral(arg));
  const Term e = one();
  const Term z = zero();
  if (a->symbol == sym::mul && args.size() == 2) {
    if (args[0] == e) return args[1];
    if (args[1] == e) return args[0];
  } else if (a->symbol == sym::add && args.size() == 2) {
    if (args[0] == z) return args[1];
    if (args[1] == z) return args[0];
  } else if (a->symbol == sym::inv && args.size() == 1 && args[0] == e) {
    return e;
  } else if (a->symbol == sym::neg && args.size() == 1 && args[0] == z) {
    return z;
  }
  return apply(a->symbol, std::move(args));
}

}  // namespace uag
