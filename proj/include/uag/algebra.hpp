#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uag/error.hpp"
#include "uag/signature.hpp"

namespace uag {

// Carrier elements are dense indices 0..size-1.
using Element = std::uint32_t;

// Default cap on the number of points any exhaustive enumeration may visit.
inline constexpr std::uint64_t default_budget = 100'000'000;

// Saturating a^n, used for budget checks.
inline std::uint64_t checked_power(std::uint64_t a, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a != 0 && r > std::numeric_limits<std::uint64_t>::max() / a) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= a;
  }
  return r;
}

// A width-N tuple over a base algebra.
struct PowerElement {
  std::vector<Element> entries;

  std::size_t width() const noexcept { return entries.size(); }
  bool operator==(const PowerElement&) const = default;
  auto operator<=>(const PowerElement&) const = default;
};

// Mixed-radix codec between flat indices and tuples. Coordinate 0 is the most
// significant digit, so numeric order of flat indices is lexicographic order
// of tuples.
class PowerCodec {
 public:
  PowerCodec(std::size_t base_size, std::size_t width)
      : base_size_(base_size), width_(width), size_(checked_power(base_size, width)) {}

  std::size_t base_size() const noexcept { return base_size_; }
  std::size_t width() const noexcept { return width_; }
  std::uint64_t size() const noexcept { return size_; }

  Element encode(std::span<const Element> entries) const {
    if (entries.size() != width_) {
      throw UnsupportedOperationError("tuple of width " + std::to_string(entries.size()) +
                                      " does not match power width " + std::to_string(width_));
    }
    std::uint64_t flat = 0;
    for (Element e : entries) {
      if (e >= base_size_) {
        throw EvaluationError("tuple entry " + std::to_string(e) + " outside base carrier");
      }
      flat = flat * base_size_ + e;
    }
    return static_cast<Element>(flat);
  }

  Element encode(const PowerElement& p) const { return encode(std::span<const Element>(p.entries)); }

  PowerElement decode(Element flat) const {
    PowerElement p{std::vector<Element>(width_)};
    decode_into(flat, p.entries);
    return p;
  }

  void decode_into(Element flat, std::span<Element> out) const {
    std::uint64_t v = flat;
    for (std::size_t i = width_; i-- > 0;) {
      out[i] = static_cast<Element>(v % base_size_);
      v /= base_size_;
    }
  }

  Element diagonal(Element base_element) const {
    std::uint64_t flat = 0;
    for (std::size_t i = 0; i < width_; ++i) flat = flat * base_size_ + base_element;
    return static_cast<Element>(flat);
  }

 private:
  std::size_t base_size_;
  std::size_t width_;
  std::uint64_t size_;
};

class FiniteAlgebra;

FiniteAlgebra direct_power(const FiniteAlgebra& a, std::size_t width,
                           std::uint64_t budget = default_budget);
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct PowerStructure {
  std::shared_ptr<const FiniteAlgebra> base;
  PowerCodec codec;
};

// Element (x, y) of A x B is encoded as x * |B| + y.
struct ProductStructure {
  std::shared_ptr<const FiniteAlgebra> left;
  std::shared_ptr<const FiniteAlgebra> right;
  std::size_t right_size;

  Element encode(Element l, Element r) const {
    return static_cast<Element>(static_cast<std::uint64_t>(l) * right_size + r);
  }
  std::pair<Element, Element> decode(Element c) const {
    return {static_cast<Element>(c / right_size), static_cast<Element>(c % right_size)};
  }
};

// A finite algebra given by one lookup table per function symbol.
//
// Tables are row-major over {0..size-1}^arity.  Powers whose tables would be
// too large to hold are evaluated coordinatewise on demand instead.
class FiniteAlgebra {
 public:
  // Above this many entries a power table is computed on demand.
  static constexpr std::uint64_t max_materialized_entries = std::uint64_t{1} << 22;

  FiniteAlgebra(std::string name, Signature signature, std::size_t size,
                std::vector<std::vector<Element>> tables, std::optional<Element> neutral = std::nullopt,
                std::vector<std::string> element_names = {})
      : name_(std::move(name)),
        signature_(std::move(signature)),
        size_(size),
        tables_(std::move(tables)),
        neutral_(neutral),
        element_names_(std::move(element_names)) {
    if (size_ == 0) throw MalformedAlgebraError("algebra '" + name_ + "' has empty carrier");
    if (size_ > std::numeric_limits<Element>::max()) {
      throw MalformedAlgebraError("algebra '" + name_ + "' is too large to index");
    }
    if (neutral_ && *neutral_ >= size_) {
      throw MalformedAlgebraError("neutral element " + std::to_string(*neutral_) + " out of range");
    }
    if (signature_.neutral_symbol() && !neutral_) {
      throw MalformedAlgebraError("algebra '" + name_ + "' of kind " +
                                  std::string(to_string(signature_.kind())) +
                                  " needs a neutral element");
    }
    if (!element_names_.empty() && element_names_.size() != size_) {
      throw MalformedAlgebraError("element_names has " + std::to_string(element_names_.size()) +
                                  " entries, expected " + std::to_string(size_));
    }
    if (tables_.size() != signature_.size()) {
      throw MalformedAlgebraError("expected " + std::to_string(signature_.size()) +
                                  " operation tables, got " + std::to_string(tables_.size()));
    }
    const auto neutral_sym = signature_.neutral_symbol();
    for (std::size_t s = 0; s < tables_.size(); ++s) {
      auto& table = tables_[s];
      if (neutral_sym && s == *neutral_sym && table.empty()) table.push_back(*neutral_);
      const auto expected = checked_power(size_, signature_[s].arity);
      if (table.size() != expected) {
        throw MalformedAlgebraError("table for '" + signature_[s].name + "' has " +
                                    std::to_string(table.size()) + " entries, expected " +
                                    std::to_string(expected));
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= size_) {
          throw MalformedAlgebraError("table for '" + signature_[s].name + "' entry " +
                                      std::to_string(i) + " = " + std::to_string(table[i]) +
                                      " is outside the carrier");
        }
      }
      if (neutral_sym && s == *neutral_sym && table[0] != *neutral_) {
        throw MalformedAlgebraError("constant '" + signature_[s].name +
                                    "' disagrees with the neutral element");
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  const Signature& signature() const noexcept { return signature_; }
  AlgebraKind kind() const noexcept { return signature_.kind(); }
  std::size_t size() const noexcept { return size_; }
  std::optional<Element> neutral() const noexcept { return neutral_; }
  const std::vector<std::string>& element_names() const noexcept { return element_names_; }

  const PowerStructure* power() const noexcept { return power_.get(); }
  const ProductStructure* product() const noexcept { return product_.get(); }

  std::size_t symbol(std::string_view name) const {
    auto idx = signature_.find(name);
    if (!idx) {
      throw UnsupportedOperationError("symbol '" + std::string(name) + "' is not in the signature of '" +
                                      name_ + "'");
    }
    return *idx;
  }

  Element apply(std::size_t symbol, std::span<const Element> args) const {
    const auto& table = tables_[symbol];
    if (!table.empty()) {
      std::size_t idx = 0;
      for (Element a : args) idx = idx * size_ + a;
      return table[idx];
    }
    return apply_coordinatewise(symbol, args);
  }

  Element apply(std::size_t symbol, Element a, Element b) const {
    const auto& table = tables_[symbol];
    if (!table.empty()) return table[static_cast<std::size_t>(a) * size_ + b];
    const Element args[2] = {a, b};
    return apply_coordinatewise(symbol, args);
  }

  Element apply(std::size_t symbol, Element a) const {
    const auto& table = tables_[symbol];
    if (!table.empty()) return table[a];
    const Element args[1] = {a};
    return apply_coordinatewise(symbol, args);
  }

  Element apply(std::size_t symbol) const {
    const auto& table = tables_[symbol];
    if (!table.empty()) return table[0];
    return apply_coordinatewise(symbol, {});
  }

  // Full table for a symbol, computed if it is evaluated on demand.
  std::vector<Element> table(std::size_t symbol) const {
    if (!tables_[symbol].empty()) return tables_[symbol];
    const int arity = signature_[symbol].arity;
    const auto n = checked_power(size_, arity);
    std::vector<Element> out(n);
    std::vector<Element> args(arity);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t v = i;
      for (int k = arity; k-- > 0;) {
        args[k] = static_cast<Element>(v % size_);
        v /= size_;
      }
      out[i] = apply_coordinatewise(symbol, args);
    }
    return out;
  }

  std::string element_name(Element e) const;

  friend FiniteAlgebra direct_power(const FiniteAlgebra& a, std::size_t width, std::uint64_t budget);
  friend FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  FiniteAlgebra() : signature_(AlgebraKind::custom, {}) {}

  Element apply_coordinatewise(std::size_t symbol, std::span<const Element> args) const {
    if (!power_) throw MalformedAlgebraError("missing table for '" + signature_[symbol].name + "'");
    const auto& codec = power_->codec;
    const auto& base = *power_->base;
    const std::size_t w = codec.width();
    std::vector<Element> digits(w * args.size());
    for (std::size_t k = 0; k < args.size(); ++k) {
      codec.decode_into(args[k], std::span<Element>(digits).subspan(k * w, w));
    }
    std::vector<Element> out(w);
    Element coord_args[2];
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t k = 0; k < args.size(); ++k) coord_args[k] = digits[k * w + i];
      out[i] = base.apply(symbol, std::span<const Element>(coord_args, args.size()));
    }
    return codec.encode(out);
  }

  std::string name_;
  Signature signature_;
  std::size_t size_ = 0;
  std::vector<std::vector<Element>> tables_;
  std::optional<Element> neutral_;
  std::vector<std::string> element_names_;
  std::shared_ptr<const PowerStructure> power_;
  std::shared_ptr<const ProductStructure> product_;
};

inline std::string FiniteAlgebra::element_name(Element e) const {
  if (e < element_names_.size()) return element_names_[e];
  if (power_) {
    const auto tuple = power_->codec.decode(e);
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.width(); ++i) {
      if (i) s += ",";
      s += power_->base->element_name(tuple.entries[i]);
    }
    return s + ")";
  }
  return std::to_string(e);
}

// Tables of the same signature compared entry by entry.
inline bool same_operations(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature()) || a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.table(s) != b.table(s)) return false;
  }
  return true;
}

// Width-N truncation of A^infinity with coordinatewise operations.
inline FiniteAlgebra direct_power(const FiniteAlgebra& a, std::size_t width, std::uint64_t budget) {
  if (width == 0) throw UnsupportedOperationError("direct power needs width >= 1");
  const auto size = checked_power(a.size(), width);
  if (size > budget || size > std::numeric_limits<Element>::max()) {
    throw BudgetExceededError("direct power " + a.name() + "^" + std::to_string(width) + " has " +
                              (size == std::numeric_limits<std::uint64_t>::max()
                                   ? std::string("too many")
                                   : std::to_string(size)) +
                              " elements, budget is " + std::to_string(budget));
  }
  FiniteAlgebra p;
  p.name_ = a.name() + "^" + std::to_string(width);
  p.signature_ = a.signature();
  p.size_ = static_cast<std::size_t>(size);
  p.power_ = std::make_shared<PowerStructure>(
      PowerStructure{std::make_shared<FiniteAlgebra>(a), PowerCodec(a.size(), width)});
  if (a.neutral()) p.neutral_ = p.power_->codec.diagonal(*a.neutral());
  p.tables_.resize(p.signature_.size());
  for (std::size_t s = 0; s < p.signature_.size(); ++s) {
    if (checked_power(size, p.signature_[s].arity) <= FiniteAlgebra::max_materialized_entries) {
      p.tables_[s] = p.table(s);
    }
  }
  return p;
}

inline FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) {
    throw SignatureMismatchError("cannot form " + a.name() + " x " + b.name() +
                                 ": signatures differ");
  }
  const auto size = static_cast<std::uint64_t>(a.size()) * b.size();
  if (size > std::numeric_limits<Element>::max()) {
    throw BudgetExceededError("direct product is too large to index");
  }
  FiniteAlgebra c;
  c.name_ = a.name() + "x" + b.name();
  c.signature_ = a.signature();
  c.size_ = static_cast<std::size_t>(size);
  auto info = std::make_shared<ProductStructure>(ProductStructure{
      std::make_shared<FiniteAlgebra>(a), std::make_shared<FiniteAlgebra>(b), b.size()});
  if (a.neutral() && b.neutral()) c.neutral_ = info->encode(*a.neutral(), *b.neutral());
  if (!a.element_names().empty() && !b.element_names().empty()) {
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < b.size(); ++y) {
        c.element_names_.push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
      }
    }
  }
  c.tables_.resize(c.signature_.size());
  for (std::size_t s = 0; s < c.signature_.size(); ++s) {
    const int arity = c.signature_[s].arity;
    const auto n = checked_power(size, arity);
    auto& table = c.tables_[s];
    table.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      Element la[2], ra[2];
      std::uint64_t v = i;
      for (int k = arity; k-- > 0;) {
        auto [l, r] = info->decode(static_cast<Element>(v % size));
        la[k] = l;
        ra[k] = r;
        v /= size;
      }
      table[i] = info->encode(a.apply(s, std::span<const Element>(la, arity)),
                              b.apply(s, std::span<const Element>(ra, arity)));
    }
  }
  c.product_ = std::move(info);
  return c;
}

// Coordinates (1-based) where a power element differs from the neutral element.
inline std::set<std::size_t> support(const PowerElement& e, const FiniteAlgebra& base) {
  if (!base.neutral()) {
    throw UnsupportedOperationError("support needs a neutral element; '" + base.name() +
                                    "' has none");
  }
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < e.width(); ++i) {
    if (e.entries[i] >= base.size()) {
      throw EvaluationError("tuple entry outside the carrier of '" + base.name() + "'");
    }
    if (e.entries[i] != *base.neutral()) out.insert(i + 1);
  }
  return out;
}

// Support of a flat element of a direct power.
inline std::set<std::size_t> support(Element e, const FiniteAlgebra& power) {
  const auto* p = power.power();
  if (!p) throw UnsupportedOperationError("'" + power.name() + "' is not a direct power");
  return support(p->codec.decode(e), *p->base);
}

enum class SubsetRole { center, right_annihilator };

struct StructuralSubset {
  std::vector<Element> elements;  // sorted
  SubsetRole role;

  bool contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }
};

inline bool commute(const FiniteAlgebra& a, std::size_t mul, Element x, Element y) {
  return a.apply(mul, x, y) == a.apply(mul, y, x);
}

// Two-sided commuting set of the binary operation `*`.
inline StructuralSubset center(const FiniteAlgebra& a) {
  const auto mul = a.symbol(sym::mul);
  StructuralSubset out{{}, SubsetRole::center};
  for (Element c = 0; c < a.size(); ++c) {
    bool central = true;
    for (Element x = 0; x < a.size() && central; ++x) central = commute(a, mul, c, x);
    if (central) out.elements.push_back(c);
  }
  return out;
}

inline bool is_commutative(const FiniteAlgebra& a) { return center(a).elements.size() == a.size(); }

// { b : a * b = 0 for all a }.
inline StructuralSubset right_annihilator(const FiniteAlgebra& r) {
  if (r.kind() != AlgebraKind::ring) {
    throw UnsupportedOperationError("right annihilator needs a ring; '" + r.name() + "' is a " +
                                    std::string(to_string(r.kind())));
  }
  const auto mul = r.symbol(sym::mul);
  const Element zero = *r.neutral();
  StructuralSubset out{{}, SubsetRole::right_annihilator};
  for (Element b = 0; b < r.size(); ++b) {
    bool kills = true;
    for (Element a = 0; a < r.size() && kills; ++a) kills = r.apply(mul, a, b) == zero;
    if (kills) out.elements.push_back(b);
  }
  return out;
}

inline bool has_zero_multiplication(const FiniteAlgebra& r) {
  return right_annihilator(r).elements.size() == r.size();
}

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witnesses;

  bool operator==(const AxiomViolation&) const = default;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool mentions(std::string_view axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const AxiomViolation& v) { return v.axiom == axiom; });
  }
};

namespace detail {

class AxiomChecker {
 public:
  AxiomChecker(const FiniteAlgebra& a, std::uint64_t budget) : a_(a), budget_(budget) {}

  void associative(std::size_t op, const std::string& label) {
    require_budget(3);
    const Element n = static_cast<Element>(a_.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (a_.apply(op, a_.apply(op, x, y), z) != a_.apply(op, x, a_.apply(op, y, z))) {
            fail(label, {x, y, z});
          }
  }

  void commutative(std::size_t op, const std::string& label) {
    require_budget(2);
    const Element n = static_cast<Element>(a_.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (!commute(a_, op, x, y)) fail(label, {x, y});
  }

  void identity(std::size_t op, Element e, const std::string& label) {
    for (Element x = 0; x < a_.size(); ++x) {
      if (a_.apply(op, e, x) != x || a_.apply(op, x, e) != x) fail(label, {x});
    }
  }

  // Every element has some two-sided inverse, found by search.
  void inverses_exist(std::size_t op, Element e, const std::string& label) {
    require_budget(2);
    for (Element x = 0; x < a_.size(); ++x) {
      bool found = false;
      for (Element y = 0; y < a_.size() && !found; ++y) {
        found = a_.apply(op, x, y) == e && a_.apply(op, y, x) == e;
      }
      if (!found) fail(label, {x});
    }
  }

  // The unary table really gives inverses.
  void inverse_table(std::size_t op, std::size_t inv, Element e, const std::string& label) {
    for (Element x = 0; x < a_.size(); ++x) {
      const Element y = a_.apply(inv, x);
      if (a_.apply(op, x, y) != e || a_.apply(op, y, x) != e) fail(label, {x});
    }
  }

  void distributive(std::size_t mul, std::size_t add) {
    require_budget(3);
    const Element n = static_cast<Element>(a_.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          if (a_.apply(mul, x, a_.apply(add, y, z)) !=
              a_.apply(add, a_.apply(mul, x, y), a_.apply(mul, x, z))) {
            fail("left distributivity", {x, y, z});
          }
          if (a_.apply(mul, a_.apply(add, x, y), z) !=
              a_.apply(add, a_.apply(mul, x, z), a_.apply(mul, y, z))) {
            fail("right distributivity", {x, y, z});
          }
        }
  }

  ValidationReport take() { return std::move(report_); }

 private:
  void fail(const std::string& axiom, std::vector<Element> w) {
    report_.violations.push_back({axiom, std::move(w)});
  }

  void require_budget(std::size_t arity) const {
    const auto n = checked_power(a_.size(), arity);
    if (n > budget_) {
      throw BudgetExceededError("axiom check over " + a_.name() + " needs " + std::to_string(n) +
                                " evaluations, budget is " + std::to_string(budget_));
    }
  }

  const FiniteAlgebra& a_;
  std::uint64_t budget_;
  ValidationReport report_;
};

}  // namespace detail

// Exhaustive check of the axioms implied by the algebra's kind.
//
// Table shape and range problems are rejected when the algebra is built
// (MalformedAlgebraError); this reports axiom failures with witnesses.
inline ValidationReport validate_algebra(const FiniteAlgebra& a, std::uint64_t budget = default_budget) {
  detail::AxiomChecker check(a, budget);
  switch (a.kind()) {
    case AlgebraKind::magma:
    case AlgebraKind::custom: break;
    case AlgebraKind::monoid: {
      const auto mul = a.symbol(sym::mul);
      check.associative(mul, "associativity");
      check.identity(mul, *a.neutral(), "identity");
      break;
    }
    case AlgebraKind::group: {
      const auto mul = a.symbol(sym::mul);
      check.associative(mul, "associativity");
      check.identity(mul, *a.neutral(), "identity");
      check.inverses_exist(mul, *a.neutral(), "inverse existence");
      check.inverse_table(mul, a.symbol(sym::inv), *a.neutral(), "inverse table");
      break;
    }
    case AlgebraKind::ring: {
      const auto add = a.symbol(sym::add);
      const auto mul = a.symbol(sym::mul);
      check.associative(add, "additive associativity");
      check.commutative(add, "additive commutativity");
      check.identity(add, *a.neutral(), "additive identity");
      check.inverse_table(add, a.symbol(sym::neg), *a.neutral(), "additive inverse");
      check.associative(mul, "multiplicative associativity");
      check.distributive(mul, add);
      break;
    }
  }
  return check.take();
}

}  // namespace uag
