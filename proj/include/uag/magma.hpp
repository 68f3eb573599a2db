#pragma once

#include <string>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/dsl.hpp"
#include "uag/eval.hpp"
#include "uag/term.hpp"

namespace uag {

// The magma (A, p) whose product is x * y := p(x, y).
inline FiniteAlgebra magma_from_term(const FiniteAlgebra& a, const Term& p) {
  static const std::vector<std::string> xy{"x", "y"};
  for (const auto& v : free_variables(p)) {
    if (v != "x" && v != "y") {
      throw InvalidSystemError("magma term may only use x and y, found '" + v + "'");
    }
  }
  const CompiledTerm compiled(p, a, xy);
  const auto n = a.size();
  std::vector<Element> table(n * n);
  std::vector<Element> stack;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element args[2] = {x, y};
      table[static_cast<std::size_t>(x) * n + y] = compiled.eval(a, args, stack);
    }
  }
  return FiniteAlgebra("(" + a.name() + "," + print_term(p) + ")", Signature::magma(), n, {std::move(table)},
                       std::nullopt, a.element_names());
}

}  // namespace uag
