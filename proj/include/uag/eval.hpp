#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/term.hpp"

namespace uag {

// The carrier element a constant denotes in `a`.
inline Element resolve_constant(const Const& c, const FiniteAlgebra& a) {
  const auto* p = a.power();
  if (c.tuple) {
    if (!p) throw EvaluationError("tuple constant over '" + a.name() + "', which is not a direct power");
    return p->codec.encode(c.coords);
  }
  if (c.coords.size() != 1) throw EvaluationError("malformed base constant");
  const Element k = c.coords[0];
  if (p) {
    if (k >= p->codec.base_size()) throw EvaluationError("constant #" + std::to_string(k) + " outside the carrier");
    return p->codec.diagonal(k);
  }
  if (k >= a.size()) throw EvaluationError("constant #" + std::to_string(k) + " outside the carrier");
  return k;
}

// A term flattened to postfix code against one algebra and one variable order.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const FiniteAlgebra& a, std::span<const std::string> variables) {
    std::size_t depth = 0;
    emit(t, a, variables, depth);
  }

  // Number of leading variables that must be bound to evaluate: one past the
  // largest variable index used, or 0 for ground terms.
  std::size_t variables_needed() const noexcept { return variables_needed_; }

  Element eval(const FiniteAlgebra& a, std::span<const Element> values, std::vector<Element>& stack) const {
    stack.resize(max_stack_);
    std::size_t sp = 0;
    for (const auto& in : code_) {
      switch (in.op) {
        case Op::variable: stack[sp++] = values[in.arg]; break;
        case Op::constant: stack[sp++] = in.arg; break;
        case Op::nullary: stack[sp++] = a.apply(in.arg); break;
        case Op::unary: stack[sp - 1] = a.apply(in.arg, stack[sp - 1]); break;
        case Op::binary:
          --sp;
          stack[sp - 1] = a.apply(in.arg, stack[sp - 1], stack[sp]);
          break;
      }
    }
    return stack[0];
  }

  Element eval(const FiniteAlgebra& a, std::span<const Element> values) const {
    std::vector<Element> stack;
    return eval(a, values, stack);
  }

 private:
  enum class Op : std::uint8_t { variable, constant, nullary, unary, binary };
  struct Instr {
    Op op;
    std::uint32_t arg;
  };

  void emit(const Term& t, const FiniteAlgebra& a, std::span<const std::string> variables, std::size_t& depth) {
    if (const auto* v = t.as_var()) {
      auto it = std::find(variables.begin(), variables.end(), v->name);
      if (it == variables.end()) throw EvaluationError("variable '" + v->name + "' is unbound");
      const auto idx = static_cast<std::uint32_t>(it - variables.begin());
      variables_needed_ = std::max<std::size_t>(variables_needed_, idx + 1);
      push({Op::variable, idx}, depth);
    } else if (const auto* c = t.as_const()) {
      push({Op::constant, resolve_constant(*c, a)}, depth);
    } else {
      const auto& ap = *t.as_apply();
      const auto s = a.symbol(ap.symbol);
      const int arity = a.signature()[s].arity;
      if (static_cast<int>(ap.args.size()) != arity) {
        throw EvaluationError("symbol '" + ap.symbol + "' applied to " + std::to_string(ap.args.size()) +
                              " arguments, arity is " + std::to_string(arity));
      }
      for (const auto& arg : ap.args) emit(arg, a, variables, depth);
      const auto id = static_cast<std::uint32_t>(s);
      if (arity == 0) {
        push({Op::nullary, id}, depth);
      } else {
        code_.push_back({arity == 1 ? Op::unary : Op::binary, id});
        depth -= static_cast<std::size_t>(arity - 1);
      }
    }
  }

  void push(Instr in, std::size_t& depth) {
    code_.push_back(in);
    max_stack_ = std::max(max_stack_, ++depth);
  }

  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
  std::size_t variables_needed_ = 0;
};

using Valuation = std::map<std::string, Element, std::less<>>;

inline Element eval_term(const Term& t, const Valuation& valuation, const FiniteAlgebra& a) {
  std::vector<std::string> names;
  std::vector<Element> values;
  for (const auto& name : free_variables(t)) {
    auto it = valuation.find(name);
    if (it == valuation.end()) throw EvaluationError("variable '" + name + "' is unbound");
    if (it->second >= a.size()) {
      throw EvaluationError("value of '" + name + "' is outside the carrier of '" + a.name() + "'");
    }
    names.push_back(name);
    values.push_back(it->second);
  }
  return CompiledTerm(t, a, names).eval(a, values);
}

inline bool holds(const Equation& e, const Valuation& valuation, const FiniteAlgebra& a) {
  return eval_term(e.lhs, valuation, a) == eval_term(e.rhs, valuation, a);
}

}  // namespace uag
