#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uag/algebra.hpp"
#include "uag/dsl.hpp"
#include "uag/error.hpp"
#include "uag/eval.hpp"
#include "uag/random.hpp"
#include "uag/solver.hpp"
#include "uag/term.hpp"
#include "uag/zoo.hpp"

// The equation systems behind the failure of q-compactness for infinite
// powers, their finite-width truncations, witnesses, and the end-to-end
// verification of each statement.
//
// Over a width-N truncation the system for a base algebra A is built from the
// constants (a, ..., a, p, ..., p) with j copies of a, for every a in A and
// j = 1..N, where p is the padding element (the identity, the zero, or a
// central element for magmas). Equations come in an x-block followed by a
// y-block, each ordered by a and then by j. Truncating j to 1..n gives the
// depth-n prefix subsystem.
namespace uag {

enum class TheoremKind {
  group_q_compactness,
  ring_q_compactness,
  monoid_q_compactness,
  magma_q_compactness,
  semilattice_chain,
  product_noetherian,
};

inline std::string_view to_string(TheoremKind k) {
  switch (k) {
    case TheoremKind::group_q_compactness: return "GroupQCompactness";
    case TheoremKind::ring_q_compactness: return "RingQCompactness";
    case TheoremKind::monoid_q_compactness: return "MonoidQCompactness";
    case TheoremKind::magma_q_compactness: return "MagmaQCompactness";
    case TheoremKind::semilattice_chain: return "SemilatticeChain";
    case TheoremKind::product_noetherian: return "ProductNoetherian";
  }
  return "";
}

// Short names used on the command line.
inline std::optional<TheoremKind> theorem_from_string(std::string_view s) {
  if (s == "group") return TheoremKind::group_q_compactness;
  if (s == "ring") return TheoremKind::ring_q_compactness;
  if (s == "monoid") return TheoremKind::monoid_q_compactness;
  if (s == "magma") return TheoremKind::magma_q_compactness;
  if (s == "chain" || s == "semilattice") return TheoremKind::semilattice_chain;
  if (s == "product") return TheoremKind::product_noetherian;
  for (auto k : {TheoremKind::group_q_compactness, TheoremKind::ring_q_compactness,
                 TheoremKind::monoid_q_compactness, TheoremKind::magma_q_compactness,
                 TheoremKind::semilattice_chain, TheoremKind::product_noetherian}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace detail {

using EquationBuilder = std::function<Equation(const Term& variable, const Term& constant)>;

inline EqSystem padded_system(const FiniteAlgebra& base, std::size_t width, std::optional<std::size_t> depth,
                              Element pad, const EquationBuilder& build) {
  if (width == 0) throw UnsupportedOperationError("system width must be at least 1");
  const auto n = depth.value_or(width);
  if (n > width) {
    throw UnsupportedOperationError("prefix depth " + std::to_string(n) + " exceeds width " + std::to_string(width));
  }
  std::vector<Equation> eqs;
  for (const char* name : {"x", "y"}) {
    const Term v = var(name);
    for (Element a = 0; a < base.size(); ++a) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::vector<Element> coords(width, pad);
        std::fill(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j), a);
        eqs.push_back(build(v, tuple(std::move(coords))));
      }
    }
  }
  return EqSystem({"x", "y"}, std::move(eqs));
}

inline void require_kind(const FiniteAlgebra& a, AlgebraKind kind) {
  if (a.kind() != kind) {
    throw UnsupportedOperationError("'" + a.name() + "' is a " + std::string(to_string(a.kind())) + ", expected a " +
                                    std::string(to_string(kind)));
  }
}

}  // namespace detail

// [x, (a^j, 1^(N-j))] = 1 and its y-clone.
inline EqSystem group_system(const FiniteAlgebra& g, std::size_t width, std::optional<std::size_t> depth = {}) {
  detail::require_kind(g, AlgebraKind::group);
  return detail::padded_system(g, width, depth, *g.neutral(), [](const Term& v, const Term& c) {
    return Equation{commutator(v, c), one()};
  });
}

// (a^j, 0^(N-j)) * x = 0 and its y-clone.
inline EqSystem ring_system(const FiniteAlgebra& r, std::size_t width, std::optional<std::size_t> depth = {}) {
  detail::require_kind(r, AlgebraKind::ring);
  return detail::padded_system(r, width, depth, *r.neutral(), [](const Term& v, const Term& c) {
    return Equation{mul(c, v), zero()};
  });
}

// x * c = c * x for c = (a^j, 1^(N-j)), and its y-clone.
inline EqSystem monoid_system(const FiniteAlgebra& m, std::size_t width, std::optional<std::size_t> depth = {}) {
  detail::require_kind(m, AlgebraKind::monoid);
  return detail::padded_system(m, width, depth, *m.neutral(), [](const Term& v, const Term& c) {
    return Equation{mul(v, c), mul(c, v)};
  });
}

// Smallest-index central element, used in place of an identity for magmas.
inline std::optional<Element> magma_pad(const FiniteAlgebra& m) {
  const auto z = center(m);
  if (z.elements.empty()) return std::nullopt;
  return z.elements.front();
}

// The monoid commutation pattern padded with a central element.
inline EqSystem magma_system(const FiniteAlgebra& m, std::size_t width, std::optional<std::size_t> depth = {}) {
  const auto pad = magma_pad(m);
  if (!pad) throw UnsupportedOperationError("magma '" + m.name() + "' has empty center");
  return detail::padded_system(m, width, depth, *pad, [](const Term& v, const Term& c) {
    return Equation{mul(v, c), mul(c, v)};
  });
}

inline bool is_two_element_semilattice(const FiniteAlgebra& a) {
  if (a.kind() != AlgebraKind::monoid || a.size() != 2) return false;
  const auto mul = a.symbol(sym::mul);
  return a.apply(mul, 0, 0) == 0 && a.apply(mul, 1, 1) == 1 && a.apply(mul, 0, 1) == a.apply(mul, 1, 0);
}

// x * (0^j, 1^(N-j)) = x for j = 0..N-1, where 1 is the identity of L2.
inline EqSystem semilattice_system(const FiniteAlgebra& l2, std::size_t width) {
  if (!is_two_element_semilattice(l2)) {
    throw UnsupportedOperationError("'" + l2.name() + "' is not a two-element semilattice monoid");
  }
  if (width == 0) throw UnsupportedOperationError("system width must be at least 1");
  const Element top = *l2.neutral();
  const Element bottom = 1 - top;
  std::vector<Equation> eqs;
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Element> coords(width, top);
    std::fill(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(j), bottom);
    eqs.push_back({mul(var("x"), tuple(std::move(coords))), var("x")});
  }
  return EqSystem({"x"}, std::move(eqs));
}

inline EqSystem semilattice_system(std::size_t width) { return semilattice_system(zoo::l2(), width); }

// The equations of s mentioning only `variable`, as a one-variable system.
inline EqSystem block(const EqSystem& s, const std::string& variable) {
  std::vector<Equation> eqs;
  for (const auto& e : s.equations()) {
    const auto vars = free_variables(e);
    if (vars.size() == 1 && vars[0] == variable) eqs.push_back(e);
  }
  return EqSystem({variable}, std::move(eqs));
}

// g = (p, ..., p, alpha, p, ...) and h likewise with beta, where alpha and beta
// sit at coordinate n + 1 (1-based) and p is the padding element (the
// neutral element unless given).
inline std::pair<PowerElement, PowerElement> witness_pair(const FiniteAlgebra& base, Element alpha, Element beta,
                                                          std::size_t n, std::size_t width,
                                                          std::optional<Element> pad = {}) {
  if (width < n + 1) {
    throw UnsupportedOperationError("witness at coordinate " + std::to_string(n + 1) + " needs width >= " +
                                    std::to_string(n + 1) + ", got " + std::to_string(width));
  }
  if (!pad) pad = base.neutral();
  if (!pad) throw UnsupportedOperationError("'" + base.name() + "' has no neutral element to pad with");
  if (alpha >= base.size() || beta >= base.size() || *pad >= base.size()) {
    throw EvaluationError("witness entry outside the carrier of '" + base.name() + "'");
  }
  PowerElement g{std::vector<Element>(width, *pad)};
  PowerElement h = g;
  g.entries[n] = alpha;
  h.entries[n] = beta;
  return {std::move(g), std::move(h)};
}

enum class Factor { left, right };

// S^A (or S^B): variable i renamed to y_i (z_i), every constant (a, b)
// replaced by a (b). Terms are otherwise unchanged.
inline EqSystem project_to_factor(const EqSystem& s, const FiniteAlgebra& product, Factor factor) {
  const auto* info = product.product();
  if (!info) throw UnsupportedOperationError("'" + product.name() + "' was not built as a direct product");
  const std::string prefix = factor == Factor::left ? "y" : "z";

  Binding renaming;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < s.variables().size(); ++i) {
    vars.push_back(prefix + std::to_string(i + 1));
    renaming.emplace(s.variables()[i], var(vars.back()));
  }

  std::function<Term(const Term&)> project = [&](const Term& t) -> Term {
    if (const auto* c = t.as_const()) {
      if (c->tuple || c->coords.size() != 1 || c->coords[0] >= product.size()) {
        throw UnsupportedOperationError("constant is not an element of '" + product.name() + "'");
      }
      const auto [l, r] = info->decode(c->coords[0]);
      return element(factor == Factor::left ? l : r);
    }
    if (const auto* a = t.as_apply()) {
      std::vector<Term> args;
      for (const auto& arg : a->args) args.push_back(project(arg));
      return apply(a->symbol, std::move(args));
    }
    return substitute(t, renaming);
  };

  std::vector<Equation> eqs;
  for (const auto& e : s.equations()) eqs.push_back({project(e.lhs), project(e.rhs)});
  return EqSystem(std::move(vars), std::move(eqs));
}

struct ProductBijection {
  std::size_t product_solutions = 0;
  std::size_t left_solutions = 0;
  std::size_t right_solutions = 0;
  bool bijective = false;
};

// Checks element by element that (c_1..c_n) -> ((a_1..a_n), (b_1..b_n)) maps
// V_C(S) bijectively onto V_A(S^A) x V_B(S^B).
inline ProductBijection check_product_bijection(const EqSystem& s, const FiniteAlgebra& product,
                                                const SolveOptions& options = {}) {
  const auto* info = product.product();
  if (!info) throw UnsupportedOperationError("'" + product.name() + "' was not built as a direct product");
  const auto vc = solve(s, product, options);
  const auto va = solve(project_to_factor(s, product, Factor::left), *info->left, options);
  const auto vb = solve(project_to_factor(s, product, Factor::right), *info->right, options);

  ProductBijection out{vc.size(), va.size(), vb.size(), true};
  std::set<std::pair<Assignment, Assignment>> image;
  for (const auto& row : vc.rows()) {
    Assignment l(row.size()), r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) std::tie(l[i], r[i]) = info->decode(row[i]);
    if (!va.contains(l) || !vb.contains(r)) out.bijective = false;
    image.emplace(std::move(l), std::move(r));
  }
  if (image.size() != vc.size()) out.bijective = false;
  if (static_cast<std::uint64_t>(va.size()) * vb.size() != vc.size()) out.bijective = false;
  return out;
}

struct HypothesisCheck {
  std::string name;
  bool holds = false;
};

struct WitnessCheck {
  Element alpha = 0;
  Element beta = 0;
  PowerElement x;
  PowerElement y;
  bool satisfies_prefix = false;
  PowerElement target_lhs;
  PowerElement target_rhs;
  bool violates_target = false;
};

struct VerificationReport {
  TheoremKind kind{};
  std::string algebra;
  std::size_t width = 0;
  std::optional<std::size_t> prefix;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<std::string> target;
  std::optional<std::size_t> system_size;
  std::optional<std::size_t> prefix_system_size;
  // V(S(x)) equals the tuples over the center (or right annihilator).
  std::optional<bool> x_block_is_structural;
  std::optional<bool> inclusion;
  std::optional<WitnessCheck> witness;
  std::vector<std::uint64_t> profile;
  std::optional<std::size_t> minimal_prefix;
  std::optional<bool> strict_descent;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> failed_trials;
  bool pass = false;
  std::string failure;

  bool hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisCheck& h) { return h.holds; });
  }
};

struct VerifyOptions {
  SolveOptions solve;
  std::size_t trials = 100;
  std::uint64_t seed = 20240101;
  RandomSystemShape shape{};
};

namespace detail {

struct QCompactnessPlan {
  std::vector<HypothesisCheck> hypotheses;
  std::function<bool(Element, Element)> violates;  // the pair witnesses the hypothesis
  std::function<EqSystem(std::size_t width, std::size_t depth)> system;
  Equation target;
  std::vector<Element> structural;  // center or right annihilator of the base
  std::optional<Element> pad;
};

inline QCompactnessPlan plan(TheoremKind kind, const FiniteAlgebra& base) {
  QCompactnessPlan p{{}, {}, {}, {var("x"), var("y")}, {}, base.neutral()};
  const auto commute_fail = [&base, mul = base.symbol(sym::mul)](Element a, Element b) {
    return !commute(base, mul, a, b);
  };
  switch (kind) {
    case TheoremKind::group_q_compactness:
      require_kind(base, AlgebraKind::group);
      p.hypotheses.push_back({"non-abelian", !is_commutative(base)});
      p.violates = commute_fail;
      p.system = [&base](std::size_t w, std::size_t d) { return group_system(base, w, d); };
      p.target = {commutator(var("x"), var("y")), one()};
      p.structural = center(base).elements;
      break;
    case TheoremKind::ring_q_compactness: {
      require_kind(base, AlgebraKind::ring);
      p.hypotheses.push_back({"nonzero multiplication", !has_zero_multiplication(base)});
      p.violates = [&base, mul = base.symbol(sym::mul), z = *base.neutral()](Element a, Element b) {
        return base.apply(mul, a, b) != z;
      };
      p.system = [&base](std::size_t w, std::size_t d) { return ring_system(base, w, d); };
      p.target = {mul(var("x"), var("y")), zero()};
      p.structural = right_annihilator(base).elements;
      break;
    }
    case TheoremKind::monoid_q_compactness:
      require_kind(base, AlgebraKind::monoid);
      p.hypotheses.push_back({"non-commutative", !is_commutative(base)});
      p.violates = commute_fail;
      p.system = [&base](std::size_t w, std::size_t d) { return monoid_system(base, w, d); };
      p.target = {mul(var("x"), var("y")), mul(var("y"), var("x"))};
      p.structural = center(base).elements;
      break;
    case TheoremKind::magma_q_compactness: {
      const auto z = center(base);
      p.hypotheses.push_back({"non-commutative", z.elements.size() != base.size()});
      p.hypotheses.push_back({"non-empty center", !z.elements.empty()});
      p.violates = commute_fail;
      p.system = [&base](std::size_t w, std::size_t d) { return magma_system(base, w, d); };
      p.target = {mul(var("x"), var("y")), mul(var("y"), var("x"))};
      p.structural = z.elements;
      p.pad = magma_pad(base);
      break;
    }
    default: throw UnsupportedOperationError("not a q-compactness statement");
  }
  return p;
}

inline std::string failed_hypothesis(const VerificationReport& r) {
  for (const auto& h : r.hypotheses) {
    if (!h.holds) return "hypothesis " + h.name + " failed";
  }
  return {};
}

inline VerificationReport verify_q_compactness(TheoremKind kind, const FiniteAlgebra& base, std::size_t width,
                                               std::size_t depth, const VerifyOptions& options) {
  VerificationReport report;
  report.kind = kind;
  report.algebra = base.name();
  report.width = width;
  report.prefix = depth;
  auto p = plan(kind, base);
  report.hypotheses = p.hypotheses;
  report.target = print_equation(p.target);
  if (width < depth + 1) {
    throw UnsupportedOperationError("width " + std::to_string(width) + " must exceed the prefix depth " +
                                    std::to_string(depth));
  }
  if (!report.hypotheses_hold()) {
    report.failure = failed_hypothesis(report);
    return report;
  }

  // Lexicographically smallest violating pair.
  std::optional<std::pair<Element, Element>> pair;
  for (Element a = 0; a < base.size() && !pair; ++a) {
    for (Element b = 0; b < base.size() && !pair; ++b) {
      if (p.violates(a, b)) pair = {a, b};
    }
  }

  const auto power = direct_power(base, width, options.solve.budget);
  const auto full = p.system(width, width);
  const auto prefix = p.system(width, depth);
  report.system_size = full.size();
  report.prefix_system_size = prefix.size();

  std::vector<Assignment> expected;
  {
    const PowerCodec& codec = power.power()->codec;
    std::vector<Element> digits(width, 0);
    const auto k = p.structural.size();
    const auto count = checked_power(k, width);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t v = i;
      for (std::size_t c = width; c-- > 0;) {
        digits[c] = p.structural[v % k];
        v /= k;
      }
      expected.push_back({codec.encode(digits)});
    }
  }
  report.x_block_is_structural =
      solve(block(full, "x"), power, options.solve) == SolutionSet({"x"}, power.name(), std::move(expected));
  report.inclusion = entails(full, p.target, power, options.solve);

  WitnessCheck w;
  std::tie(w.alpha, w.beta) = *pair;
  std::tie(w.x, w.y) = witness_pair(base, w.alpha, w.beta, depth, width, p.pad);
  const auto& codec = power.power()->codec;
  const Assignment row{codec.encode(w.x), codec.encode(w.y)};
  w.satisfies_prefix = std::all_of(prefix.equations().begin(), prefix.equations().end(),
                                   [&](const Equation& e) { return satisfies(e, power, prefix.variables(), row); });
  const std::vector<std::string> xy{"x", "y"};
  const Element lhs = CompiledTerm(p.target.lhs, power, xy).eval(power, row);
  const Element rhs = CompiledTerm(p.target.rhs, power, xy).eval(power, row);
  w.target_lhs = codec.decode(lhs);
  w.target_rhs = codec.decode(rhs);
  w.violates_target = lhs != rhs;
  report.witness = w;

  report.pass = *report.inclusion && w.satisfies_prefix && w.violates_target;
  if (!*report.inclusion) {
    report.failure = "full system does not entail the target";
  } else if (!w.satisfies_prefix) {
    report.failure = "witness does not satisfy the prefix subsystem";
  } else if (!w.violates_target) {
    report.failure = "witness satisfies the target";
  }
  return report;
}

inline VerificationReport verify_chain(const FiniteAlgebra& base, std::size_t width, const VerifyOptions& options) {
  VerificationReport report;
  report.kind = TheoremKind::semilattice_chain;
  report.algebra = base.name();
  report.width = width;
  report.hypotheses.push_back({"two-element semilattice", is_two_element_semilattice(base)});
  if (!report.hypotheses_hold()) {
    report.failure = failed_hypothesis(report);
    return report;
  }
  const auto power = direct_power(base, width, options.solve.budget);
  const auto s = semilattice_system(base, width);
  report.system_size = s.size();
  const auto analysis = minimal_equivalent_prefix(s, power, options.solve);
  report.profile = analysis.profile;
  report.minimal_prefix = analysis.minimal_prefix;
  bool strict = true;
  for (std::size_t i = 1; i + 1 < analysis.profile.size(); ++i) strict = strict && analysis.profile[i + 1] < analysis.profile[i];
  report.strict_descent = strict;
  report.pass = strict && analysis.minimal_prefix == width;
  if (!report.pass) report.failure = width < 2 ? "no descent at width 1" : "descent profile is not strict";
  return report;
}

inline VerificationReport verify_product(const FiniteAlgebra& product, const VerifyOptions& options) {
  if (!product.product()) {
    throw UnsupportedOperationError("'" + product.name() + "' was not built as a direct product");
  }
  VerificationReport report;
  report.kind = TheoremKind::product_noetherian;
  report.algebra = product.name();
  report.width = 1;
  RandomSystemGenerator gen(product, options.seed);
  std::size_t failed = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    if (!check_product_bijection(gen.system(options.shape), product, options.solve).bijective) ++failed;
  }
  report.trials = options.trials;
  report.failed_trials = failed;
  report.pass = failed == 0;
  if (!report.pass) report.failure = std::to_string(failed) + " systems broke the product bijection";
  return report;
}

}  // namespace detail

// Runs every proof obligation of one statement at finite width. A failed
// hypothesis gives pass = false with the hypothesis named; it is not an error.
//
// For the chain the prefix depth is not used; for the product statement
// `base` must come from direct_product and width/prefix are not used.
inline VerificationReport verify_theorem(TheoremKind kind, const FiniteAlgebra& base, std::size_t width,
                                         std::size_t prefix, const VerifyOptions& options = {}) {
  switch (kind) {
    case TheoremKind::semilattice_chain: return detail::verify_chain(base, width, options);
    case TheoremKind::product_noetherian: return detail::verify_product(base, options);
    default: return detail::verify_q_compactness(kind, base, width, prefix, options);
  }
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["kind"] = to_string(r.kind);
  j["algebra"] = r.algebra;
  j["width"] = r.width;
  j["prefix"] = r.prefix ? ordered_json(*r.prefix) : ordered_json(nullptr);
  ordered_json hyps = ordered_json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = hyps;
  if (r.target) j["target"] = *r.target;
  if (r.system_size) j["system_size"] = *r.system_size;
  if (r.prefix_system_size) j["prefix_system_size"] = *r.prefix_system_size;
  if (r.x_block_is_structural) j["x_block_is_structural"] = *r.x_block_is_structural;
  if (r.inclusion) j["inclusion"] = *r.inclusion;
  if (r.witness) {
    const auto& w = *r.witness;
    ordered_json wj;
    wj["alpha"] = w.alpha;
    wj["beta"] = w.beta;
    wj["x"] = w.x.entries;
    wj["y"] = w.y.entries;
    wj["satisfies_prefix"] = w.satisfies_prefix;
    wj["target_lhs"] = w.target_lhs.entries;
    wj["target_rhs"] = w.target_rhs.entries;
    wj["violates_target"] = w.violates_target;
    j["witness"] = wj;
  }
  if (!r.profile.empty()) j["profile"] = r.profile;
  if (r.minimal_prefix) j["minimal_prefix"] = *r.minimal_prefix;
  if (r.strict_descent) j["strict_descent"] = *r.strict_descent;
  if (r.trials) j["trials"] = *r.trials;
  if (r.failed_trials) j["failed_trials"] = *r.failed_trials;
  j["pass"] = r.pass;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

inline std::string report_to_json(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace uag
