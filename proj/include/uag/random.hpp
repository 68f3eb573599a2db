#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/term.hpp"

namespace uag {

struct RandomSystemShape {
  std::size_t max_equations = 3;
  std::size_t max_variables = 2;
  std::size_t max_depth = 3;
};

// Random terms and systems over an algebra's signature. Draws use plain
// modular reduction of mt19937_64 output so a seed gives the same systems on
// every platform.
class RandomSystemGenerator {
 public:
  RandomSystemGenerator(const FiniteAlgebra& a, std::uint64_t seed) : a_(a), rng_(seed) {}

  std::uint64_t draw(std::uint64_t n) { return rng_() % n; }

  Term term(const std::vector<std::string>& variables, std::size_t depth) {
    const auto& sig = a_.signature();
    std::vector<std::size_t> operations;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      if (sig[s].arity > 0) operations.push_back(s);
    }
    if (depth == 0 || operations.empty() || draw(3) == 0) return leaf(variables);
    const auto& s = sig[operations[draw(operations.size())]];
    std::vector<Term> args;
    for (int i = 0; i < s.arity; ++i) args.push_back(term(variables, depth - 1));
    return apply(s.name, std::move(args));
  }

  EqSystem system(const RandomSystemShape& shape) {
    const auto n_vars = 1 + draw(shape.max_variables);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n_vars; ++i) vars.push_back("x" + std::to_string(i + 1));
    const auto n_eqs = 1 + draw(shape.max_equations);
    std::vector<Equation> eqs;
    for (std::size_t i = 0; i < n_eqs; ++i) {
      eqs.push_back({term(vars, 1 + draw(shape.max_depth)), term(vars, draw(shape.max_depth + 1))});
    }
    return EqSystem(std::move(vars), std::move(eqs));
  }

 private:
  Term leaf(const std::vector<std::string>& variables) {
    const auto choice = draw(4);
    if (choice < 2 && !variables.empty()) return var(variables[draw(variables.size())]);
    if (choice == 2) {
      if (const auto* p = a_.power()) {
        std::vector<Element> coords(p->codec.width());
        for (auto& c : coords) c = static_cast<Element>(draw(p->codec.base_size()));
        return tuple(std::move(coords));
      }
      return element(static_cast<Element>(draw(a_.size())));
    }
    if (auto n = a_.signature().neutral_symbol()) return apply(a_.signature()[*n].name);
    return element(static_cast<Element>(draw(a_.power() ? a_.power()->codec.base_size() : a_.size())));
  }

  const FiniteAlgebra& a_;
  std::mt19937_64 rng_;
};

}  // namespace uag
