#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/eval.hpp"
#include "uag/term.hpp"

namespace uag {

// Normal forms of ring equations over a ring with zero multiplication.
struct VarVar {
  std::string left;
  std::string right;
  bool operator==(const VarVar&) const = default;
};

struct VarConst {
  std::string variable;
  Element value;
  bool operator==(const VarConst&) const = default;
};

// a = b between constants; unsatisfiable since a != b (equal constants reduce
// to Trivial).
struct ConstConst {
  Element left;
  Element right;
  bool operator==(const ConstConst&) const = default;
};

struct Trivial {
  bool operator==(const Trivial&) const = default;
};

// c_1 x_1 + ... + c_k x_k = rhs with every coefficient nonzero modulo the
// exponent of (R, +). Produced when the reduced equation fits none of the
// simple shapes.
struct AdditiveForm {
  std::vector<std::pair<std::string, std::uint64_t>> terms;
  Element rhs;
  bool operator==(const AdditiveForm&) const = default;
};

using ZeroMultForm = std::variant<VarVar, VarConst, ConstConst, Trivial, AdditiveForm>;

inline bool is_simple(const ZeroMultForm& f) { return !std::holds_alternative<AdditiveForm>(f); }

// Exponent of the additive group: lcm of the additive orders.
inline std::uint64_t additive_exponent(const FiniteAlgebra& r) {
  const auto add = r.symbol(sym::add);
  const Element zero = *r.neutral();
  std::uint64_t exponent = 1;
  for (Element x = 0; x < r.size(); ++x) {
    std::uint64_t order = 1;
    for (Element acc = x; acc != zero; acc = r.apply(add, acc, x)) ++order;
    exponent = std::lcm(exponent, order);
  }
  return exponent;
}

// n * x = x + x + ... + x in (R, +).
inline Element additive_multiple(const FiniteAlgebra& r, std::uint64_t n, Element x) {
  const auto add = r.symbol(sym::add);
  Element acc = *r.neutral();
  for (std::uint64_t i = 0; i < n; ++i) acc = r.apply(add, acc, x);
  return acc;
}

namespace detail {

class Linearizer {
 public:
  explicit Linearizer(const FiniteAlgebra& r)
      : r_(r), add_(r.symbol(sym::add)), neg_(r.symbol(sym::neg)), constant_(*r.neutral()) {}

  void collect(const Term& t, bool negated) {
    if (const auto* v = t.as_var()) {
      auto& c = coefficient(v->name);
      c += negated ? -1 : 1;
    } else if (const auto* c = t.as_const()) {
      Element k = resolve_constant(*c, r_);
      if (negated) k = r_.apply(neg_, k);
      constant_ = r_.apply(add_, constant_, k);
    } else {
      const auto& a = *t.as_apply();
      if (a.symbol == sym::add && a.args.size() == 2) {
        collect(a.args[0], negated);
        collect(a.args[1], negated);
      } else if (a.symbol == sym::neg && a.args.size() == 1) {
        collect(a.args[0], !negated);
      } else if (a.symbol == sym::mul || a.symbol == sym::zero) {
        // Every product is 0.
      } else {
        throw SignatureMismatchError("symbol '" + a.symbol + "' is not in the ring language");
      }
    }
  }

  std::int64_t& coefficient(const std::string& name) {
    for (auto& [v, c] : coefficients_) {
      if (v == name) return c;
    }
    coefficients_.emplace_back(name, 0);
    return coefficients_.back().second;
  }

  const FiniteAlgebra& r_;
  std::size_t add_;
  std::size_t neg_;
  Element constant_;
  std::vector<std::pair<std::string, std::int64_t>> coefficients_;
};

}  // namespace detail

// Rewrites an equation over a zero-multiplication ring to one of the simple
// shapes x = y, x = a, a = b, 0 = 0, or to a flagged additive form when more
// than that survives cancellation. Solution sets are preserved.
inline ZeroMultForm normalize_zero_mult(const Equation& e, const FiniteAlgebra& r) {
  if (r.kind() != AlgebraKind::ring) {
    throw SignatureMismatchError("zero-multiplication normal form needs a ring, got a " +
                                 std::string(to_string(r.kind())));
  }
  if (!has_zero_multiplication(r)) {
    throw UnsupportedOperationError("ring '" + r.name() + "' does not have zero multiplication");
  }
  // lhs - rhs = sum c_x x + d, so the equation reads sum c_x x = -d.
  detail::Linearizer lin(r);
  lin.collect(e.lhs, false);
  lin.collect(e.rhs, true);
  const auto m = static_cast<std::int64_t>(additive_exponent(r));
  const Element rhs = r.apply(r.symbol(sym::neg), lin.constant_);
  const Element zero = *r.neutral();

  std::vector<std::pair<std::string, std::uint64_t>> terms;
  for (const auto& [name, c] : lin.coefficients_) {
    const auto reduced = static_cast<std::uint64_t>(((c % m) + m) % m);
    if (reduced != 0) terms.emplace_back(name, reduced);
  }
  const auto um = static_cast<std::uint64_t>(m);
  const auto unit = [&](std::uint64_t c) { return c == 1 || c == um - 1; };

  if (terms.empty()) {
    if (rhs == zero) return Trivial{};
    return ConstConst{zero, rhs};
  }
  if (terms.size() == 1 && unit(terms[0].second)) {
    const Element value = terms[0].second == 1 ? rhs : r.apply(r.symbol(sym::neg), rhs);
    return VarConst{terms[0].first, value};
  }
  if (terms.size() == 2 && rhs == zero && unit(terms[0].second) && (terms[0].second + terms[1].second) % um == 0) {
    return VarVar{terms[0].first, terms[1].first};
  }
  return AdditiveForm{std::move(terms), rhs};
}

// The normal form written back as an equation over r.
inline Equation to_equation(const ZeroMultForm& f, const FiniteAlgebra& r) {
  struct Visitor {
    const FiniteAlgebra& r;
    Term constant(Element k) const {
      if (const auto* p = r.power()) return tuple(p->codec.decode(k).entries);
      return element(k);
    }
    Equation operator()(const VarVar& v) const { return {var(v.left), var(v.right)}; }
    Equation operator()(const VarConst& v) const { return {var(v.variable), constant(v.value)}; }
    Equation operator()(const ConstConst& v) const { return {constant(v.left), constant(v.right)}; }
    Equation operator()(const Trivial&) const { return {zero(), zero()}; }
    Equation operator()(const AdditiveForm& v) const {
      std::optional<Term> lhs;
      for (const auto& [name, c] : v.terms) {
        for (std::uint64_t i = 0; i < c; ++i) lhs = lhs ? add(*lhs, var(name)) : var(name);
      }
      return {*lhs, constant(v.rhs)};
    }
  };
  return std::visit(Visitor{r}, f);
}

}  // namespace uag
