#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uag/error.hpp"

namespace uag {

enum class AlgebraKind { magma, monoid, group, ring, custom };

inline std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::magma: return "magma";
    case AlgebraKind::monoid: return "monoid";
    case AlgebraKind::group: return "group";
    case AlgebraKind::ring: return "ring";
    case AlgebraKind::custom: return "custom";
  }
  return "custom";
}

inline std::optional<AlgebraKind> kind_from_string(std::string_view s) {
  if (s == "magma") return AlgebraKind::magma;
  if (s == "monoid") return AlgebraKind::monoid;
  if (s == "group") return AlgebraKind::group;
  if (s == "ring") return AlgebraKind::ring;
  if (s == "custom") return AlgebraKind::custom;
  return std::nullopt;
}

// Reserved symbol names used by the standard languages.
namespace sym {
inline constexpr std::string_view mul = "*";
inline constexpr std::string_view inv = "inv";
inline constexpr std::string_view one = "e";
inline constexpr std::string_view add = "+";
inline constexpr std::string_view neg = "-";
inline constexpr std::string_view zero = "0";
}  // namespace sym

struct Symbol {
  std::string name;
  int arity = 0;

  bool operator==(const Symbol&) const = default;
};

// Function symbols of a language together with a kind tag.
//
//   magma  {*}
//   monoid {*, e}
//   group  {*, inv, e}
//   ring   {+, -, *, 0}
//
// The nullary symbol of a monoid, group or ring is interpreted by the
// algebra's neutral element.
class Signature {
 public:
  Signature(AlgebraKind kind, std::vector<Symbol> symbols)
      : kind_(kind), symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto& s = symbols_[i];
      if (s.name.empty()) throw SignatureMismatchError("empty symbol name");
      if (s.arity < 0 || s.arity > 2) {
        throw SignatureMismatchError("symbol '" + s.name + "' has unsupported arity " +
                                     std::to_string(s.arity));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols_[j].name == s.name) {
          throw SignatureMismatchError("duplicate symbol '" + s.name + "'");
        }
      }
    }
    for (const auto& req : standard_symbols(kind_)) {
      auto idx = find(req.name);
      if (!idx || symbols_[*idx].arity != req.arity) {
        throw SignatureMismatchError("signature of kind " + std::string(to_string(kind_)) +
                                     " requires symbol '" + req.name + "'/" +
                                     std::to_string(req.arity));
      }
    }
  }

  static Signature magma() { return {AlgebraKind::magma, standard_symbols(AlgebraKind::magma)}; }
  static Signature monoid() { return {AlgebraKind::monoid, standard_symbols(AlgebraKind::monoid)}; }
  static Signature group() { return {AlgebraKind::group, standard_symbols(AlgebraKind::group)}; }
  static Signature ring() { return {AlgebraKind::ring, standard_symbols(AlgebraKind::ring)}; }

  static Signature of_kind(AlgebraKind kind) {
    if (kind == AlgebraKind::custom) {
      throw SignatureMismatchError("custom signatures need an explicit symbol list");
    }
    return {kind, standard_symbols(kind)};
  }

  static std::vector<Symbol> standard_symbols(AlgebraKind kind) {
    switch (kind) {
      case AlgebraKind::magma: return {{std::string(sym::mul), 2}};
      case AlgebraKind::monoid: return {{std::string(sym::mul), 2}, {std::string(sym::one), 0}};
      case AlgebraKind::group:
        return {{std::string(sym::mul), 2}, {std::string(sym::inv), 1}, {std::string(sym::one), 0}};
      case AlgebraKind::ring:
        return {{std::string(sym::add), 2},
                {std::string(sym::neg), 1},
                {std::string(sym::mul), 2},
                {std::string(sym::zero), 0}};
      case AlgebraKind::custom: return {};
    }
    return {};
  }

  AlgebraKind kind() const noexcept { return kind_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].name == name) return i;
    }
    return std::nullopt;
  }

  bool has(std::string_view name) const { return find(name).has_value(); }

  // The nullary symbol naming the neutral element, if the kind has one.
  std::optional<std::size_t> neutral_symbol() const {
    switch (kind_) {
      case AlgebraKind::monoid:
      case AlgebraKind::group: return find(sym::one);
      case AlgebraKind::ring: return find(sym::zero);
      default: return std::nullopt;
    }
  }

  bool operator==(const Signature&) const = default;

 private:
  AlgebraKind kind_;
  std::vector<Symbol> symbols_;
};

}  // namespace uag
