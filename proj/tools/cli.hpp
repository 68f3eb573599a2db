#pragma once

// Command-line front end. `run` does all the work so tests can drive it
// without a process; main.cpp only turns argv into a RunConfig.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uag/uag.hpp"

namespace uag::cli {

enum class Command { solve, entails, center, annihilator, verify, chain, project };

enum class Format { text, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;  // verification failed, or entailment is false
inline constexpr int usage = 2;   // bad flags, unreadable or malformed input
inline constexpr int budget = 3;  // enumeration budget exceeded
}  // namespace exit_code

struct RunConfig {
  Command command = Command::solve;
  std::string algebra;                // file path or built-in name
  std::optional<std::string> with;    // second factor (project, verify --kind product)
  std::optional<std::string> term;    // replace the algebra by the magma (A, term)
  std::optional<std::size_t> width;   // work over the direct power A^width
  std::size_t prefix = 1;
  std::optional<std::string> system;  // system file
  std::optional<std::string> text;    // inline system text
  std::optional<std::string> equation;
  std::string kind;
  Factor factor = Factor::left;
  Format format = Format::text;
  std::uint64_t budget = default_budget;
  unsigned workers = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 20240101;
};

// --budget wins over UAG_BUDGET, which wins over the default.
inline std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const char* env) {
  if (flag) return *flag;
  if (env && *env) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || v == 0) {
      throw Error("UAG_BUDGET must be a positive integer, got '" + std::string(env) + "'");
    }
    return v;
  }
  return default_budget;
}

inline std::optional<FiniteAlgebra> builtin_algebra(const std::string& name) {
  for (auto& a : zoo::all()) {
    std::string lower = a.name();
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == name) return a;
  }
  return std::nullopt;
}

// A file path, or the lowercase name of a built-in algebra when no such file
// exists.
inline FiniteAlgebra load(const std::string& spec) {
  if (!std::filesystem::exists(spec)) {
    if (auto a = builtin_algebra(spec)) return *a;
  }
  return load_algebra(spec);
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

struct Workspace {
  FiniteAlgebra base;
  FiniteAlgebra target;  // base, or its direct power
};

inline FiniteAlgebra base_algebra(const RunConfig& c) {
  auto a = load(c.algebra);
  if (c.term) {
    a = magma_from_term(a, parse_term(*c.term, a, {"x", "y"}));
  }
  return a;
}

inline Workspace workspace(const RunConfig& c) {
  auto base = base_algebra(c);
  if (c.width) {
    auto p = direct_power(base, *c.width, c.budget);
    return {std::move(base), std::move(p)};
  }
  auto copy = base;
  return {std::move(base), std::move(copy)};
}

inline EqSystem read_system(const RunConfig& c, const FiniteAlgebra& target) {
  if (c.system && c.text) throw Error("give either --system or --text, not both");
  if (c.system) return parse_system(read_file(*c.system), target);
  if (c.text) return parse_system(*c.text, target);
  throw Error("a system is required (--system FILE or --text TEXT)");
}

inline SolveOptions solve_options(const RunConfig& c) { return {c.budget, c.workers}; }

inline std::string names_of(const FiniteAlgebra& a, const std::vector<Element>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += a.element_name(elems[i]);
  }
  return out;
}

inline std::string tuple_text(const PowerElement& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.entries[i]);
  }
  return out + ")";
}

inline int solve(const RunConfig& c, std::ostream& out) {
  const auto ws = workspace(c);
  const auto s = read_system(c, ws.target);
  const auto v = uag::solve(s, ws.target, solve_options(c));
  if (c.format == Format::json) {
    out << solutions_to_json(v);
    return exit_code::ok;
  }
  out << v.size() << " solution" << (v.size() == 1 ? "" : "s") << " over " << ws.target.name() << "\n";
  for (const auto& row : v.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << s.variables()[i] << " = " << ws.target.element_name(row[i]);
    }
    out << "\n";
  }
  return exit_code::ok;
}

inline int entails(const RunConfig& c, std::ostream& out) {
  const auto ws = workspace(c);
  const auto s = read_system(c, ws.target);
  if (!c.equation) throw Error("entails needs --equation");
  const auto e = parse_equation(*c.equation, ws.target, s.variables());
  const auto cex = counterexample(s, e, ws.target, solve_options(c));
  if (c.format == Format::json) {
    ordered_json j;
    j["algebra"] = ws.target.name();
    j["equation"] = print_equation(e);
    j["entails"] = !cex;
    j["counterexample"] = cex ? ordered_json(*cex) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
  } else if (!cex) {
    out << "entails: true\n";
  } else {
    out << "entails: false\ncounterexample:";
    for (std::size_t i = 0; i < cex->size(); ++i) {
      out << (i ? ", " : " ") << s.variables()[i] << " = " << ws.target.element_name((*cex)[i]);
    }
    out << "\n";
  }
  return cex ? exit_code::failed : exit_code::ok;
}

inline int subset(const RunConfig& c, std::ostream& out) {
  const auto ws = workspace(c);
  const bool is_center = c.command == Command::center;
  const auto z = is_center ? center(ws.target) : right_annihilator(ws.target);
  if (c.format == Format::json) {
    ordered_json j;
    j["algebra"] = ws.target.name();
    j["role"] = is_center ? "center" : "right_annihilator";
    j["elements"] = z.elements;
    out << j.dump(2) << "\n";
  } else {
    out << (is_center ? "center" : "right annihilator") << " of " << ws.target.name() << " (" << z.elements.size()
        << "): {" << names_of(ws.target, z.elements) << "}\n";
  }
  return exit_code::ok;
}

inline void print_report(const VerificationReport& r, std::ostream& out) {
  out << "kind: " << to_string(r.kind) << "\n";
  out << "algebra: " << r.algebra << "\n";
  if (r.kind != TheoremKind::product_noetherian) out << "width: " << r.width << "\n";
  if (r.prefix) out << "prefix: " << *r.prefix << "\n";
  for (const auto& h : r.hypotheses) out << "hypothesis " << h.name << ": " << (h.holds ? "holds" : "fails") << "\n";
  if (r.target) out << "target: " << *r.target << "\n";
  if (r.system_size) {
    out << "equations: " << *r.system_size;
    if (r.prefix_system_size) out << " (prefix " << *r.prefix_system_size << ")";
    out << "\n";
  }
  if (r.x_block_is_structural) out << "x-block solutions structural: " << (*r.x_block_is_structural ? "yes" : "no") << "\n";
  if (r.inclusion) out << "inclusion: " << (*r.inclusion ? "holds" : "fails") << "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out << "witness: x = " << tuple_text(w.x) << ", y = " << tuple_text(w.y) << "\n";
    out << "witness satisfies prefix: " << (w.satisfies_prefix ? "yes" : "no") << "\n";
    out << "target at witness: " << tuple_text(w.target_lhs) << (w.violates_target ? " != " : " = ")
        << tuple_text(w.target_rhs) << "\n";
  }
  if (!r.profile.empty()) {
    out << "profile: [";
    for (std::size_t i = 0; i < r.profile.size(); ++i) out << (i ? ", " : "") << r.profile[i];
    out << "]\n";
  }
  if (r.minimal_prefix) out << "minimal equivalent prefix: " << *r.minimal_prefix << "\n";
  if (r.trials) out << "trials: " << *r.trials << ", failed: " << *r.failed_trials << "\n";
  if (!r.failure.empty()) out << r.failure << "\n";
  out << "pass: " << (r.pass ? "true" : "false") << "\n";
}

inline int verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  TheoremKind kind = TheoremKind::semilattice_chain;
  if (c.command == Command::verify) {
    auto k = theorem_from_string(c.kind);
    if (!k) throw Error("unknown --kind '" + c.kind + "'");
    kind = *k;
  }
  VerifyOptions opts;
  opts.solve = solve_options(c);
  opts.trials = c.trials;
  opts.seed = c.seed;

  auto base = base_algebra(c);
  if (kind == TheoremKind::product_noetherian) {
    if (!c.with) throw Error("--kind product needs --with for the second factor");
    base = direct_product(base, load(*c.with));
  } else if (!c.width) {
    throw Error("--width is required");
  }
  const auto report = verify_theorem(kind, base, c.width.value_or(1), c.prefix, opts);
  if (c.format == Format::json) {
    out << report_to_json(report);
  } else {
    print_report(report, out);
  }
  if (!report.pass && !report.failure.empty()) err << report.failure << "\n";
  return report.pass ? exit_code::ok : exit_code::failed;
}

inline int project(const RunConfig& c, std::ostream& out) {
  if (!c.with) throw Error("project needs --with for the second factor");
  const auto product = direct_product(base_algebra(c), load(*c.with));
  const auto s = read_system(c, product);
  const auto projected = project_to_factor(s, product, c.factor);
  if (c.format == Format::json) {
    ordered_json j;
    j["algebra"] = c.factor == Factor::left ? product.product()->left->name() : product.product()->right->name();
    j["variables"] = projected.variables();
    ordered_json eqs = ordered_json::array();
    for (const auto& e : projected.equations()) eqs.push_back(print_equation(e));
    j["equations"] = eqs;
    out << j.dump(2) << "\n";
  } else {
    out << print_system(projected) << "\n";
  }
  return exit_code::ok;
}

}  // namespace detail

// Exit codes: 0 success, 1 verification failed or entailment false, 2 usage
// or input error, 3 budget exceeded.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.budget == 0) throw Error("budget must be at least 1");
    if (c.width && *c.width == 0) throw Error("width must be at least 1");
    switch (c.command) {
      case Command::solve: return detail::solve(c, out);
      case Command::entails: return detail::entails(c, out);
      case Command::center:
      case Command::annihilator: return detail::subset(c, out);
      case Command::verify:
      case Command::chain: return detail::verify(c, out, err);
      case Command::project: return detail::project(c, out);
    }
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace uag::cli
