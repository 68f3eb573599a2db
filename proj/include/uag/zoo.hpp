#pragma once

#include <array>
#include <string>
#include <vector>

#include "uag/algebra.hpp"

// Small algebras used throughout the tests, the CLI data files and the
// theorem runs.
namespace uag::zoo {

namespace detail {

using Perm = std::vector<Element>;

inline Perm compose(const Perm& x, const Perm& y) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[y[i]];
  return out;
}

inline Perm invert(const Perm& x) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[x[i]] = static_cast<Element>(i);
  return out;
}

inline Element index_of(const std::vector<Perm>& elems, const Perm& p) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == p) return static_cast<Element>(i);
  }
  throw MalformedAlgebraError("permutation list is not closed");
}

// Group of permutations under (x*y)(i) = x(y(i)); elems[0] must be the identity.
inline FiniteAlgebra permutation_group(std::string name, const std::vector<Perm>& elems,
                                       std::vector<std::string> names) {
  const auto n = elems.size();
  std::vector<Element> mul(n * n), inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    inv[x] = index_of(elems, invert(elems[x]));
    for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = index_of(elems, compose(elems[x], elems[y]));
  }
  return FiniteAlgebra(std::move(name), Signature::group(), n, {mul, inv, {}}, 0, std::move(names));
}

}  // namespace detail

// Symmetric group on three points: e, (12), (13), (23), (123), (132).
inline FiniteAlgebra s3() {
  return detail::permutation_group(
      "S3", {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}},
      {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

// Dihedral group of the square: r^i s^j listed as e, r, r2, r3, s, rs, r2s, r3s.
inline FiniteAlgebra d4() {
  const detail::Perm r{1, 2, 3, 0};
  const detail::Perm s{0, 3, 2, 1};
  std::vector<detail::Perm> elems;
  for (int j = 0; j < 2; ++j) {
    detail::Perm p = j ? s : detail::Perm{0, 1, 2, 3};
    for (int i = 0; i < 4; ++i) {
      elems.push_back(p);
      p = detail::compose(r, p);
    }
  }
  return detail::permutation_group("D4", elems, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

// Quaternion group: 1, -1, i, -i, j, -j, k, -k.
inline FiniteAlgebra q8() {
  // Products of basis units 1, i, j, k as (sign, unit).
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const std::size_t n = 8;
  std::vector<Element> mul(n * n), inv(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto [sign, unit] = units[x / 2][y / 2];
      const int total = sign * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      mul[x * n + y] = static_cast<Element>(unit * 2 + (total < 0 ? 1 : 0));
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (mul[x * n + y] == 0) inv[x] = y;
    }
  }
  return FiniteAlgebra("Q8", Signature::group(), n, {mul, inv, {}}, 0,
                       {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline FiniteAlgebra cyclic_group(std::size_t n) {
  std::vector<Element> mul(n * n), inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    inv[x] = static_cast<Element>((n - x) % n);
    for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return FiniteAlgebra("Z" + std::to_string(n), Signature::group(), n, {mul, inv, {}}, 0);
}

// Z/n with ordinary multiplication, or with every product 0.
inline FiniteAlgebra integers_mod(std::size_t n, bool zero_multiplication = false) {
  std::vector<Element> add(n * n), neg(n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    neg[x] = static_cast<Element>((n - x) % n);
    for (std::size_t y = 0; y < n; ++y) {
      add[x * n + y] = static_cast<Element>((x + y) % n);
      mul[x * n + y] = zero_multiplication ? 0 : static_cast<Element>((x * y) % n);
    }
  }
  const std::string name = "Z" + std::to_string(n) + (zero_multiplication ? "zero" : "ring");
  return FiniteAlgebra(name, Signature::ring(), n, {add, neg, mul, {}}, 0);
}

inline FiniteAlgebra z2_group() { return cyclic_group(2); }
inline FiniteAlgebra z4_group() { return cyclic_group(4); }
inline FiniteAlgebra z2_ring() { return integers_mod(2); }
inline FiniteAlgebra z4_ring() { return integers_mod(4); }
inline FiniteAlgebra z2_zero_ring() { return integers_mod(2, true); }
inline FiniteAlgebra z4_zero_ring() { return integers_mod(4, true); }

// Two-element semilattice {0, 1} with 1 as the identity.
inline FiniteAlgebra l2() {
  return FiniteAlgebra("L2", Signature::monoid(), 2, {{0, 0, 0, 1}, {}}, 1, {"0", "1"});
}

// {1, a, b} with ab = a, ba = b: a left-zero band with an identity adjoined.
inline FiniteAlgebra m3() {
  return FiniteAlgebra("M3", Signature::monoid(), 3,
                       {{0, 1, 2,
                         1, 1, 1,
                         2, 2, 2},
                        {}},
                       0, {"1", "a", "b"});
}

// Every bundled algebra, in a fixed order.
inline std::vector<FiniteAlgebra> all() {
  return {s3(), d4(), q8(), z2_group(), z4_group(), z2_ring(), z4_ring(),
          z2_zero_ring(), z4_zero_ring(), l2(), m3()};
}

}  // namespace uag::zoo
