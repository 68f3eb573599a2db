#include <gtest/gtest.h>

#include "oracle.hpp"
#include "uag/uag.hpp"

using namespace uag;

namespace {

std::vector<Assignment> rows(const SolutionSet& s) { return s.rows(); }

}  // namespace

TEST(Solve, EmptySystemGivesEverything) {
  const auto s = solve(EqSystem({"x"}, {}), zoo::z2_group());
  EXPECT_EQ(rows(s), (std::vector<Assignment>{{0}, {1}}));
}

TEST(Solve, NoVariables) {
  const auto a = zoo::s3();
  EXPECT_EQ(solve(EqSystem({}, {{element(1), element(1)}}), a).size(), 1u);
  EXPECT_EQ(solve(EqSystem({}, {{element(1), element(2)}}), a).size(), 0u);
}

TEST(Solve, GroupXBlockIsCenterTuples) {
  const auto g = zoo::s3();
  const auto p = direct_power(g, 3);
  const auto full = group_system(g, 3);
  // depth d pins the first d coordinates to the (trivial) center
  const auto& codec = p.power()->codec;
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    const auto x = block(group_system(g, 3, depth), "x");
    const auto r = rows(solve(x, p));
    std::size_t expected = 1;
    for (std::size_t i = depth; i < 3; ++i) expected *= 6;
    EXPECT_EQ(r.size(), expected) << depth;
    for (const auto& row : r) {
      const auto t = codec.decode(row[0]);
      for (std::size_t i = 0; i < depth; ++i) EXPECT_EQ(t.entries[i], 0u);
    }
  }
  EXPECT_EQ(block(full, "x").size(), 18u);
}

TEST(Solve, L2PrefixOfTwo) {
  const auto p = direct_power(zoo::l2(), 4);
  const auto s = semilattice_system(4).prefix(2);
  EXPECT_EQ(solve(s, p).size(), 8u);
}

TEST(Solve, RowsAreLexicographic) {
  const auto a = zoo::z4_group();
  const auto s = parse_system("vars x, y; x * y = #1;", a);
  EXPECT_EQ(rows(solve(s, a)), (std::vector<Assignment>{{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
}

TEST(Solve, BudgetExceeded) {
  const auto a = zoo::s3();
  const auto s = parse_system("vars x, y, z; x = y;", a);
  EXPECT_THROW(solve(s, a, {100, 1}), BudgetExceededError);
  EXPECT_NO_THROW(solve(s, a, {216, 1}));
}

TEST(Solve, WorkerCountDoesNotMatter) {
  const auto p = direct_power(zoo::s3(), 2);
  const auto s = parse_system("vars x, y; x * y = y * x; x * x = e;", p);
  const auto one_worker = solve(s, p, {default_budget, 1});
  for (unsigned w : {2u, 3u, 4u, 7u, 64u}) {
    EXPECT_EQ(rows(solve(s, p, {default_budget, w})), rows(one_worker)) << w;
  }
}

TEST(Solve, AgreesWithOracleOnRandomSystems) {
  const std::vector<FiniteAlgebra> zoo_list{zoo::s3(), zoo::q8(), zoo::z4_ring(), zoo::m3(), zoo::l2(),
                                            direct_power(zoo::l2(), 2), direct_power(zoo::z2_ring(), 3)};
  for (const auto& a : zoo_list) {
    RandomSystemGenerator gen(a, 11);
    for (int i = 0; i < 40; ++i) {
      const auto s = gen.system({3, 3, 3});
      const auto got = solve(s, a);
      ASSERT_EQ(rows(got), oracle::solve(s, a)) << a.name() << "\n" << print_system(s);
      // Soundness: every row satisfies every equation.
      for (const auto& row : got.rows())
        for (const auto& e : s.equations()) ASSERT_TRUE(satisfies(e, a, s.variables(), row));
    }
  }
}

TEST(Solve, MonotoneInTheSystem) {
  const auto a = zoo::d4();
  RandomSystemGenerator gen(a, 3);
  for (int i = 0; i < 50; ++i) {
    const auto s = gen.system({4, 2, 3});
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_TRUE(solve(s.prefix(k + 1), a).subset_of(solve(s.prefix(k), a)));
    }
  }
}

TEST(Entails, Examples) {
  const auto g = zoo::s3();
  const auto p = direct_power(g, 3);
  const Equation target{commutator(var("x"), var("y")), one()};
  EXPECT_TRUE(entails(group_system(g, 3), target, p));
  EXPECT_TRUE(entails(EqSystem({"x", "y"}, {}), {mul(var("x"), var("y")), mul(var("y"), var("x"))}, zoo::z2_group()));

  const auto prefix = group_system(g, 3, 1);
  EXPECT_FALSE(entails(prefix, target, p));
  const auto cex = counterexample(prefix, target, p);
  ASSERT_TRUE(cex.has_value());
  const Valuation v{{"x", (*cex)[0]}, {"y", (*cex)[1]}};
  EXPECT_FALSE(holds(target, v, p));
  for (const auto& e : prefix.equations()) EXPECT_TRUE(holds(e, v, p));
}

// entails(s, e) iff solve(s) == solve(s + e).
TEST(Entails, MatchesSolutionSetInclusion) {
  const auto a = zoo::m3();
  RandomSystemGenerator gen(a, 21);
  for (int i = 0; i < 100; ++i) {
    auto s = gen.system({2, 2, 2});
    const Equation e{gen.term(s.variables(), 2), gen.term(s.variables(), 2)};
    auto extended = s;
    extended.add(e);
    EXPECT_EQ(entails(s, e, a), solve(s, a) == solve(extended, a));
  }
}

// The commutativity identity holds exactly when the center is everything.
TEST(Entails, IdentityCheckAgreesWithCenter) {
  const Equation comm{mul(var("x"), var("y")), mul(var("y"), var("x"))};
  for (const auto& a : zoo::all()) {
    EXPECT_EQ(entails(EqSystem({"x", "y"}, {}), comm, a), center(a).elements.size() == a.size()) << a.name();
  }
}

TEST(Entails, UndeclaredVariableInTarget) {
  EXPECT_THROW(entails(EqSystem({"x"}, {}), {var("y"), one()}, zoo::s3()), InvalidSystemError);
}

TEST(Equivalent, Examples) {
  const auto a = zoo::s3();
  auto s = parse_system("vars x, y; x * y = y * x;", a);
  auto t = s;
  t.add({one(), one()});
  EXPECT_TRUE(equivalent(s, t, a));

  const auto p = direct_power(zoo::l2(), 4);
  const auto l2 = semilattice_system(4);
  EXPECT_FALSE(equivalent(l2.prefix(2), l2, p));

  const auto g = direct_power(a, 2);
  const auto full = block(group_system(a, 2), "x");
  auto doubled = full;
  for (const auto& e : full.equations()) doubled.add(e);
  EXPECT_TRUE(equivalent(full, doubled, g));

  EXPECT_THROW(equivalent(s, EqSystem({"y", "x"}, {}), a), InvalidSystemError);
}

TEST(MinimalPrefix, L2WidthFour) {
  const auto p = direct_power(zoo::l2(), 4);
  const auto r = minimal_equivalent_prefix(semilattice_system(4), p);
  EXPECT_EQ(r.profile, (std::vector<std::uint64_t>{16, 16, 8, 4, 2}));
  EXPECT_EQ(r.minimal_prefix, 4u);
}

TEST(MinimalPrefix, SmallCases) {
  const auto a = zoo::s3();
  const auto one_eq = parse_system("vars x; x * x = e;", a);
  EXPECT_EQ(minimal_equivalent_prefix(one_eq, a).minimal_prefix, 1u);
  const auto dup = parse_system("vars x; x * x = e; x * x = e; e * x * x = e;", a);
  const auto r = minimal_equivalent_prefix(dup, a);
  EXPECT_EQ(r.minimal_prefix, 1u);
  EXPECT_EQ(r.profile, (std::vector<std::uint64_t>{6, 4, 4, 4}));
  const auto vacuous = parse_system("vars x; x = x;", a);
  EXPECT_EQ(minimal_equivalent_prefix(vacuous, a).minimal_prefix, 0u);
}

TEST(MinimalPrefix, ProfileMatchesIndependentSolves) {
  const auto a = zoo::q8();
  RandomSystemGenerator gen(a, 8);
  for (int i = 0; i < 30; ++i) {
    const auto s = gen.system({5, 2, 3});
    const auto r = minimal_equivalent_prefix(s, a);
    ASSERT_EQ(r.profile.size(), s.size() + 1);
    for (std::size_t k = 0; k <= s.size(); ++k) {
      EXPECT_EQ(r.profile[k], oracle::solve(s.prefix(k), a).size());
      if (k) {
        EXPECT_LE(r.profile[k], r.profile[k - 1]);
      }
    }
    EXPECT_TRUE(equivalent(s.prefix(r.minimal_prefix), s, a));
    if (r.minimal_prefix) {
      EXPECT_FALSE(equivalent(s.prefix(r.minimal_prefix - 1), s, a));
    }
  }
}

TEST(SolutionSetTest, EqualityIgnoresOrderAndLabel) {
  const SolutionSet a({"x"}, "A", {{2}, {0}, {2}});
  const SolutionSet b({"x"}, "B", {{0}, {2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.contains({2}));
  EXPECT_FALSE(a.contains({1}));
}
