#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/solver.hpp"

// Algebra files:
//
//   { "name": str, "kind": "magma|monoid|group|ring|custom", "size": int,
//     "tables": { symbol: nested row-major arrays }, "neutral": int?,
//     "element_names": [str]? }
//
// Binary tables are arrays of rows, unary tables flat arrays.  The identity
// constant of monoids/groups and the zero of rings come from "neutral" and have
// no table.  For kind "custom" the symbols are taken from "tables" in file
// order, with the arity read off the nesting (a bare integer is a constant).
//
// save_algebra writes the canonical layout below; loading a canonical file and
// saving it again reproduces it byte for byte.
namespace uag {

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline std::string quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

inline void write_row(std::ostringstream& out, const Element* row, std::size_t n) {
  out << '[';
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ", ";
    out << row[i];
  }
  out << ']';
}

inline Element element_from_json(const ordered_json& j, std::size_t size, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      static_cast<std::uint64_t>(j.get<std::int64_t>()) >= size) {
    throw MalformedAlgebraError(where + ": expected an element index below " + std::to_string(size) +
                                ", found " + j.dump());
  }
  return static_cast<Element>(j.get<std::int64_t>());
}

inline int arity_of(const ordered_json& j) {
  if (j.is_number()) return 0;
  if (j.is_array() && !j.empty() && j.front().is_array()) return 2;
  if (j.is_array()) return 1;
  return -1;
}

inline std::vector<Element> table_from_json(const ordered_json& j, int arity, std::size_t size,
                                            const std::string& symbol) {
  const std::string where = "table '" + symbol + "'";
  std::vector<Element> out;
  if (arity == 0) {
    out.push_back(element_from_json(j, size, where));
    return out;
  }
  if (!j.is_array() || j.size() != size) {
    throw MalformedAlgebraError(where + ": expected " + std::to_string(size) + " entries");
  }
  for (const auto& row : j) {
    if (arity == 1) {
      out.push_back(element_from_json(row, size, where));
      continue;
    }
    if (!row.is_array() || row.size() != size) {
      throw MalformedAlgebraError(where + ": expected rows of " + std::to_string(size) + " entries");
    }
    for (const auto& v : row) out.push_back(element_from_json(v, size, where));
  }
  return out;
}

}  // namespace detail

inline FiniteAlgebra algebra_from_json(std::string_view text) {
  detail::ordered_json j;
  try {
    j = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedAlgebraError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedAlgebraError("algebra file must hold a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "kind" && key != "size" && key != "tables" && key != "neutral" &&
        key != "element_names") {
      throw MalformedAlgebraError("unknown field '" + key + "'");
    }
  }
  if (!j.contains("name") || !j["name"].is_string()) throw MalformedAlgebraError("missing string field 'name'");
  if (!j.contains("kind") || !j["kind"].is_string()) throw MalformedAlgebraError("missing string field 'kind'");
  if (!j.contains("size") || !j["size"].is_number_integer() || j["size"].get<std::int64_t>() <= 0) {
    throw MalformedAlgebraError("field 'size' must be a positive integer");
  }
  if (!j.contains("tables") || !j["tables"].is_object()) throw MalformedAlgebraError("missing object 'tables'");

  const auto kind = kind_from_string(j["kind"].get<std::string>());
  if (!kind) throw MalformedAlgebraError("unknown kind '" + j["kind"].get<std::string>() + "'");
  const auto size = static_cast<std::size_t>(j["size"].get<std::int64_t>());
  const auto& tables_json = j["tables"];

  std::optional<Element> neutral;
  if (j.contains("neutral")) neutral = detail::element_from_json(j["neutral"], size, "neutral");

  std::vector<std::string> names;
  if (j.contains("element_names")) {
    if (!j["element_names"].is_array()) throw MalformedAlgebraError("'element_names' must be an array");
    for (const auto& n : j["element_names"]) {
      if (!n.is_string()) throw MalformedAlgebraError("'element_names' must hold strings");
      names.push_back(n.get<std::string>());
    }
  }

  std::vector<Symbol> symbols;
  if (*kind == AlgebraKind::custom) {
    for (const auto& [name, table] : tables_json.items()) {
      const int arity = detail::arity_of(table);
      if (arity < 0) throw MalformedAlgebraError("table '" + name + "' has an unreadable shape");
      symbols.push_back({name, arity});
    }
  } else {
    symbols = Signature::standard_symbols(*kind);
  }
  Signature sig(*kind, symbols);
  const auto neutral_symbol = sig.neutral_symbol();

  std::vector<std::vector<Element>> tables(sig.size());
  std::size_t expected_keys = 0;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (neutral_symbol && s == *neutral_symbol) continue;
    ++expected_keys;
    const auto& name = sig[s].name;
    if (!tables_json.contains(name)) throw MalformedAlgebraError("missing table '" + name + "'");
    tables[s] = detail::table_from_json(tables_json[name], sig[s].arity, size, name);
  }
  if (tables_json.size() != expected_keys) {
    throw MalformedAlgebraError("unexpected table for a " + std::string(to_string(*kind)) + ": only " +
                                std::to_string(expected_keys) + " tables allowed");
  }
  return FiniteAlgebra(j["name"].get<std::string>(), std::move(sig), size, std::move(tables), neutral,
                       std::move(names));
}

inline std::string algebra_to_json(const FiniteAlgebra& a) {
  std::ostringstream out;
  const auto n = a.size();
  const auto& sig = a.signature();
  const auto neutral_symbol = sig.neutral_symbol();
  out << "{\n";
  out << "  \"name\": " << detail::quote(a.name()) << ",\n";
  out << "  \"kind\": " << detail::quote(to_string(a.kind())) << ",\n";
  out << "  \"size\": " << n << ",\n";
  out << "  \"tables\": {";
  bool first = true;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (neutral_symbol && s == *neutral_symbol) continue;
    out << (first ? "\n" : ",\n");
    first = false;
    out << "    " << detail::quote(sig[s].name) << ": ";
    const auto table = a.table(s);
    switch (sig[s].arity) {
      case 0: out << table[0]; break;
      case 1: detail::write_row(out, table.data(), n); break;
      default:
        out << "[\n";
        for (std::size_t r = 0; r < n; ++r) {
          out << "      ";
          detail::write_row(out, table.data() + r * n, n);
          out << (r + 1 < n ? ",\n" : "\n");
        }
        out << "    ]";
    }
  }
  out << (first ? "}" : "\n  }");
  if (a.neutral()) out << ",\n  \"neutral\": " << *a.neutral();
  if (!a.element_names().empty()) {
    out << ",\n  \"element_names\": [";
    for (std::size_t i = 0; i < a.element_names().size(); ++i) {
      if (i) out << ", ";
      out << detail::quote(a.element_names()[i]);
    }
    out << ']';
  }
  out << "\n}\n";
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

inline FiniteAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_file(path)); }
inline void save_algebra(const FiniteAlgebra& a, const std::string& path) { write_file(path, algebra_to_json(a)); }

// { "variables": [...], "algebra": name, "solutions": [[int, ...], ...] }
// with rows in lexicographic order.
inline std::string solutions_to_json(const SolutionSet& s) {
  std::ostringstream out;
  out << "{\n  \"variables\": [";
  for (std::size_t i = 0; i < s.variables().size(); ++i) {
    if (i) out << ", ";
    out << detail::quote(s.variables()[i]);
  }
  out << "],\n  \"algebra\": " << detail::quote(s.algebra()) << ",\n  \"solutions\": [";
  for (std::size_t r = 0; r < s.rows().size(); ++r) {
    out << (r ? ",\n    " : "\n    ");
    detail::write_row(out, s.rows()[r].data(), s.rows()[r].size());
  }
  out << (s.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

inline SolutionSet solutions_from_json(std::string_view text) {
  try {
    const auto j = detail::ordered_json::parse(text);
    std::vector<Assignment> rows;
    for (const auto& row : j.at("solutions")) rows.push_back(row.get<Assignment>());
    return SolutionSet(j.at("variables").get<std::vector<std::string>>(), j.at("algebra").get<std::string>(),
                       std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid solution file: ") + e.what());
  }
}

}  // namespace uag
