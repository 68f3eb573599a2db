#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/error.hpp"
#include "uag/eval.hpp"
#include "uag/term.hpp"

namespace uag {

struct SolveOptions {
  std::uint64_t budget = default_budget;
  unsigned workers = 1;
};

// A point of A^n, aligned with a system's variable list.
using Assignment = std::vector<Element>;

// Exact solution set V_A(S), rows sorted lexicographically.
class SolutionSet {
 public:
  SolutionSet(std::vector<std::string> variables, std::string algebra, std::vector<Assignment> rows)
      : variables_(std::move(variables)), algebra_(std::move(algebra)), rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
  }

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::string& algebra() const noexcept { return algebra_; }
  const std::vector<Assignment>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  bool contains(const Assignment& row) const { return std::binary_search(rows_.begin(), rows_.end(), row); }

  bool subset_of(const SolutionSet& other) const {
    return std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(), rows_.end());
  }

  // Same points over the same variable order; the algebra label is not compared.
  bool operator==(const SolutionSet& other) const {
    return variables_ == other.variables_ && rows_ == other.rows_;
  }

 private:
  std::vector<std::string> variables_;
  std::string algebra_;
  std::vector<Assignment> rows_;
};

namespace detail {

struct CompiledEquation {
  CompiledTerm lhs;
  CompiledTerm rhs;

  std::size_t ready() const { return std::max(lhs.variables_needed(), rhs.variables_needed()); }
};

// Depth-first enumeration of A^n in lexicographic order. An equation is
// checked as soon as every variable it mentions is bound, so each assignment
// is rejected by the first failing equation; the accepted set is exactly the
// one naive product enumeration would give.
class Enumerator {
 public:
  Enumerator(const EqSystem& s, const FiniteAlgebra& a) : a_(a), n_(s.variables().size()), by_level_(n_ + 1) {
    for (const auto& e : s.equations()) {
      CompiledEquation c{CompiledTerm(e.lhs, a, s.variables()), CompiledTerm(e.rhs, a, s.variables())};
      const auto level = c.ready();
      by_level_[level].push_back(std::move(c));
    }
  }

  // Ground equations: if one fails there are no solutions at all.
  bool ground_ok() {
    Assignment none;
    return level_ok(0, none);
  }

  void run(Element first_begin, Element first_end, std::vector<Assignment>& out) {
    Assignment values(n_);
    if (n_ == 0) {
      if (ground_ok()) out.push_back(values);
      return;
    }
    for (Element v = first_begin; v < first_end; ++v) {
      values[0] = v;
      if (level_ok(1, values)) descend(1, values, out);
    }
  }

  std::size_t arity() const noexcept { return n_; }

 private:
  bool level_ok(std::size_t level, const Assignment& values) {
    for (const auto& c : by_level_[level]) {
      if (c.lhs.eval(a_, values, stack_) != c.rhs.eval(a_, values, stack_)) return false;
    }
    return true;
  }

  void descend(std::size_t depth, Assignment& values, std::vector<Assignment>& out) {
    if (depth == n_) {
      out.push_back(values);
      return;
    }
    const auto size = static_cast<Element>(a_.size());
    for (Element v = 0; v < size; ++v) {
      values[depth] = v;
      if (level_ok(depth + 1, values)) descend(depth + 1, values, out);
    }
  }

  const FiniteAlgebra& a_;
  std::size_t n_;
  std::vector<std::vector<CompiledEquation>> by_level_;
  std::vector<Element> stack_;
};

inline void require_budget(const EqSystem& s, const FiniteAlgebra& a, std::uint64_t budget) {
  const auto points = checked_power(a.size(), s.variables().size());
  if (points > budget) {
    throw BudgetExceededError("solving over " + a.name() + "^" + std::to_string(s.variables().size()) +
                              " needs " + std::to_string(points) + " assignments, budget is " +
                              std::to_string(budget));
  }
}

}  // namespace detail

// Every assignment in A^n satisfying every equation of s.
//
// With several workers the range of the first variable is split into
// contiguous chunks; concatenating the chunks in order gives the same sorted
// rows as a single worker.
inline SolutionSet solve(const EqSystem& s, const FiniteAlgebra& a, const SolveOptions& options = {}) {
  detail::require_budget(s, a, options.budget);
  const auto n = s.variables().size();
  std::vector<Assignment> rows;
  detail::Enumerator probe(s, a);
  if (!probe.ground_ok()) return SolutionSet(s.variables(), a.name(), {});

  const auto size = static_cast<Element>(a.size());
  const unsigned workers = n == 0 ? 1u : std::clamp<unsigned>(options.workers, 1u, size);
  if (workers == 1) {
    probe.run(0, size, rows);
    return SolutionSet(s.variables(), a.name(), std::move(rows));
  }

  std::vector<std::vector<Assignment>> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const auto begin = static_cast<Element>(static_cast<std::uint64_t>(size) * w / workers);
    const auto end = static_cast<Element>(static_cast<std::uint64_t>(size) * (w + 1) / workers);
    threads.emplace_back([&, w, begin, end] {
      detail::Enumerator e(s, a);
      e.run(begin, end, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& part : parts) {
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return SolutionSet(s.variables(), a.name(), std::move(rows));
}

inline bool satisfies(const Equation& e, const FiniteAlgebra& a, const std::vector<std::string>& variables,
                      const Assignment& row) {
  const CompiledTerm lhs(e.lhs, a, variables);
  const CompiledTerm rhs(e.rhs, a, variables);
  return lhs.eval(a, row) == rhs.eval(a, row);
}

// First solution of s (in lexicographic order) that violates e, if any.
inline std::optional<Assignment> counterexample(const EqSystem& s, const Equation& e, const FiniteAlgebra& a,
                                                const SolveOptions& options = {}) {
  s.require_declared(e);
  const auto solutions = solve(s, a, options);
  const CompiledTerm lhs(e.lhs, a, s.variables());
  const CompiledTerm rhs(e.rhs, a, s.variables());
  std::vector<Element> stack;
  for (const auto& row : solutions.rows()) {
    if (lhs.eval(a, row, stack) != rhs.eval(a, row, stack)) return row;
  }
  return std::nullopt;
}

// V_A(s) is contained in V_A(e). With an empty s this decides whether e is an
// identity of a.
inline bool entails(const EqSystem& s, const Equation& e, const FiniteAlgebra& a, const SolveOptions& options = {}) {
  return !counterexample(s, e, a, options).has_value();
}

inline bool equivalent(const EqSystem& s1, const EqSystem& s2, const FiniteAlgebra& a,
                       const SolveOptions& options = {}) {
  if (s1.variables() != s2.variables()) {
    throw InvalidSystemError("systems compared for equivalence must share their variable list");
  }
  return solve(s1, a, options) == solve(s2, a, options);
}

struct PrefixProfile {
  // Smallest k whose first k equations already have the full solution set.
  std::size_t minimal_prefix = 0;
  // |V_0|, |V_1|, ..., |V_m| where V_k solves the first k equations.
  std::vector<std::uint64_t> profile;
};

inline PrefixProfile minimal_equivalent_prefix(const EqSystem& s, const FiniteAlgebra& a,
                                               const SolveOptions& options = {}) {
  detail::require_budget(s, a, options.budget);
  PrefixProfile out;
  out.profile.push_back(checked_power(a.size(), s.variables().size()));
  if (s.empty()) return out;

  auto rows = solve(s.prefix(1), a, options).rows();
  out.profile.push_back(rows.size());
  std::vector<Element> stack;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const auto& e = s.equations()[k];
    const CompiledTerm lhs(e.lhs, a, s.variables());
    const CompiledTerm rhs(e.rhs, a, s.variables());
    std::erase_if(rows, [&](const Assignment& row) { return lhs.eval(a, row, stack) != rhs.eval(a, row, stack); });
    out.profile.push_back(rows.size());
  }
  // Prefix solution sets are nested, so equal sizes mean equal sets.
  const auto final_size = out.profile.back();
  while (out.minimal_prefix < s.size() && out.profile[out.minimal_prefix] != final_size) ++out.minimal_prefix;
  return out;
}

}  // namespace uag
