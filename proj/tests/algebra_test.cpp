#include <gtest/gtest.h>

#include <set>

#include "uag/uag.hpp"

using namespace uag;

namespace {

FiniteAlgebra l2_as_group() {
  // L2 table with an inverse table filled in arbitrarily; 0 has no inverse.
  return FiniteAlgebra("L2g", Signature::group(), 2, {{0, 0, 0, 1}, {0, 1}, {}}, Element{1});
}

std::size_t mul_of(const FiniteAlgebra& a) { return a.symbol(sym::mul); }

}  // namespace

TEST(Validate, Z2GroupIsValid) { EXPECT_TRUE(validate_algebra(zoo::z2_group()).ok()); }

TEST(Validate, L2IsAMonoid) { EXPECT_TRUE(validate_algebra(zoo::l2()).ok()); }

TEST(Validate, L2AsGroupHasNoInverseForZero) {
  const auto report = validate_algebra(l2_as_group());
  ASSERT_FALSE(report.ok());
  ASSERT_TRUE(report.mentions("inverse existence"));
  for (const auto& v : report.violations) {
    if (v.axiom == "inverse existence") {
      EXPECT_EQ(v.witnesses, std::vector<Element>{0});
    }
  }
}

TEST(Validate, EveryZooAlgebraIsValid) {
  for (const auto& a : zoo::all()) EXPECT_TRUE(validate_algebra(a).ok()) << a.name();
}

TEST(Validate, NonAssociativeMagmaAsMonoidReportsTriple) {
  // x*y = y on {0,1} except 1*1 = 0; neutral 0 fails identity too.
  FiniteAlgebra m("bad", Signature::monoid(), 2, {{0, 1, 1, 0}, {}}, Element{0});
  EXPECT_TRUE(validate_algebra(m).ok());  // this is Z2, a sanity baseline
  FiniteAlgebra n("bad", Signature::monoid(), 3, {{0, 1, 2, 1, 2, 0, 2, 2, 2}, {}}, Element{0});
  const auto report = validate_algebra(n);
  EXPECT_TRUE(report.mentions("associativity"));
  for (const auto& v : report.violations) {
    if (v.axiom != "associativity") continue;
    ASSERT_EQ(v.witnesses.size(), 3u);
    const auto mul = mul_of(n);
    const auto [x, y, z] = std::tuple{v.witnesses[0], v.witnesses[1], v.witnesses[2]};
    EXPECT_NE(n.apply(mul, n.apply(mul, x, y), z), n.apply(mul, x, n.apply(mul, y, z)));
  }
}

TEST(Validate, RingWithBrokenDistributivity) {
  // Z2 addition, multiplication x*y = 1 constantly.
  FiniteAlgebra r("bad", Signature::ring(), 2, {{0, 1, 1, 0}, {0, 1}, {1, 1, 1, 1}, {}}, Element{0});
  const auto report = validate_algebra(r);
  EXPECT_TRUE(report.mentions("left distributivity"));
  EXPECT_TRUE(report.mentions("right distributivity"));
}

TEST(Validate, MalformedTablesAreRejectedAtConstruction) {
  EXPECT_THROW(FiniteAlgebra("m", Signature::magma(), 2, {{0, 1, 2, 0}}), MalformedAlgebraError);
  EXPECT_THROW(FiniteAlgebra("m", Signature::magma(), 2, {{0, 1, 1}}), MalformedAlgebraError);
  EXPECT_THROW(FiniteAlgebra("m", Signature::magma(), 0, {{}}), MalformedAlgebraError);
  EXPECT_THROW(FiniteAlgebra("m", Signature::monoid(), 2, {{0, 1, 1, 0}, {}}), MalformedAlgebraError);
  EXPECT_THROW(FiniteAlgebra("m", Signature::monoid(), 2, {{0, 1, 1, 0}, {}}, Element{2}), MalformedAlgebraError);
}

TEST(Validate, BudgetIsEnforced) {
  EXPECT_THROW(validate_algebra(zoo::s3(), 10), BudgetExceededError);
}

TEST(SignatureTest, KindRequiresSymbols) {
  EXPECT_THROW(Signature(AlgebraKind::group, {{"*", 2}, {"e", 0}}), SignatureMismatchError);
  EXPECT_THROW(Signature(AlgebraKind::custom, {{"f", 2}, {"f", 1}}), SignatureMismatchError);
  EXPECT_THROW(Signature(AlgebraKind::custom, {{"f", 3}}), SignatureMismatchError);
  EXPECT_NO_THROW(Signature(AlgebraKind::custom, {{"f", 2}, {"c", 0}}));
}

TEST(Product, Z2xZ2IsKleinFour) {
  const auto k = direct_product(zoo::z2_group(), zoo::z2_group());
  EXPECT_EQ(k.size(), 4u);
  EXPECT_TRUE(validate_algebra(k).ok());
  const auto mul = mul_of(k);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(k.apply(mul, x, x), *k.neutral());
  EXPECT_EQ(*k.neutral(), 0u);
  // (1,0)*(0,1) = (1,1): encoded 2*1 = 3
  EXPECT_EQ(k.apply(mul, 2, 1), 3u);
}

TEST(Product, Z2xS3IsAValidGroupOfOrder12) {
  const auto c = direct_product(zoo::z2_group(), zoo::s3());
  EXPECT_EQ(c.size(), 12u);
  EXPECT_TRUE(validate_algebra(c).ok());
  ASSERT_NE(c.product(), nullptr);
  EXPECT_EQ(c.product()->encode(1, 4), 10u);
  EXPECT_EQ(c.product()->decode(10), (std::pair<Element, Element>{1, 4}));
}

TEST(Product, L2xL2IsIdempotent) {
  const auto c = direct_product(zoo::l2(), zoo::l2());
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(validate_algebra(c).ok());
  const auto mul = mul_of(c);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(c.apply(mul, x, x), x);
  EXPECT_EQ(*c.neutral(), 3u);
}

TEST(Product, SignatureMismatch) {
  EXPECT_THROW(direct_product(zoo::z2_group(), zoo::z2_ring()), SignatureMismatchError);
  EXPECT_THROW(direct_product(zoo::l2(), zoo::s3()), SignatureMismatchError);
}

TEST(Product, ComponentwiseOracle) {
  const auto a = zoo::s3();
  const auto b = zoo::z4_ring().signature() == a.signature() ? zoo::z4_ring() : zoo::d4();
  const auto c = direct_product(a, b);
  for (std::size_t s = 0; s < c.signature().size(); ++s) {
    const int arity = c.signature()[s].arity;
    for (Element x = 0; x < c.size(); ++x) {
      for (Element y = 0; y < c.size(); ++y) {
        const Element xl = x / b.size(), xr = x % b.size(), yl = y / b.size(), yr = y % b.size();
        if (arity == 2) {
          EXPECT_EQ(c.apply(s, x, y), a.apply(s, xl, yl) * b.size() + b.apply(s, xr, yr));
        } else if (arity == 1 && y == 0) {
          EXPECT_EQ(c.apply(s, x), a.apply(s, xl) * b.size() + b.apply(s, xr));
        }
      }
    }
  }
}

TEST(Power, L2Cubed) {
  const auto p = direct_power(zoo::l2(), 3);
  EXPECT_EQ(p.size(), 8u);
  const auto& codec = p.power()->codec;
  const auto x = codec.encode(PowerElement{{0, 1, 1}});
  const auto y = codec.encode(PowerElement{{1, 0, 1}});
  EXPECT_EQ(codec.decode(p.apply(mul_of(p), x, y)), (PowerElement{{0, 0, 1}}));
  EXPECT_EQ(codec.decode(*p.neutral()), (PowerElement{{1, 1, 1}}));
}

TEST(Power, S3SquaredCenter) {
  const auto p = direct_power(zoo::s3(), 2);
  EXPECT_EQ(p.size(), 36u);
  EXPECT_EQ(center(p).elements, std::vector<Element>{0});
  EXPECT_TRUE(validate_algebra(p).ok());
}

TEST(Power, Z2RingSquared) {
  const auto p = direct_power(zoo::z2_ring(), 2);
  const auto& codec = p.power()->codec;
  const auto r = p.apply(mul_of(p), codec.encode(PowerElement{{1, 0}}), codec.encode(PowerElement{{0, 1}}));
  EXPECT_EQ(codec.decode(r), (PowerElement{{0, 0}}));
}

TEST(Power, BudgetAndWidthErrors) {
  EXPECT_THROW(direct_power(zoo::s3(), 0), UnsupportedOperationError);
  EXPECT_THROW(direct_power(zoo::s3(), 12), BudgetExceededError);
  EXPECT_THROW(direct_power(zoo::s3(), 4, 1000), BudgetExceededError);
  EXPECT_NO_THROW(direct_power(zoo::s3(), 4, 1296));
}

TEST(Power, LazyPowerMatchesCoordinatewise) {
  // 6^5 = 7776 elements: binary tables would exceed the materialization bound.
  const auto base = zoo::s3();
  const auto p = direct_power(base, 5);
  const auto& codec = p.power()->codec;
  const auto mul = mul_of(p);
  const auto inv = p.symbol(sym::inv);
  for (Element x = 0; x < p.size(); x += 97) {
    for (Element y = 0; y < p.size(); y += 131) {
      const auto gx = codec.decode(x), gy = codec.decode(y);
      const auto xy = codec.decode(p.apply(mul, x, y));
      for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(xy.entries[i], base.apply(mul, gx.entries[i], gy.entries[i]));
    }
    const auto xi = codec.decode(p.apply(inv, x));
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(xi.entries[i], base.apply(inv, codec.decode(x).entries[i]));
  }
}

// f applied then projected = projection then f applied.
TEST(Power, CoordinatewiseLawExhaustive) {
  for (const auto& base : {zoo::s3(), zoo::z4_ring(), zoo::m3(), zoo::q8()}) {
    const auto p = direct_power(base, 2);
    const auto& codec = p.power()->codec;
    for (std::size_t s = 0; s < p.signature().size(); ++s) {
      const int arity = p.signature()[s].arity;
      if (arity == 0) {
        EXPECT_EQ(p.apply(s), codec.diagonal(base.apply(s)));
        continue;
      }
      for (Element x = 0; x < p.size(); ++x) {
        if (arity == 1) {
          const auto r = codec.decode(p.apply(s, x));
          for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(r.entries[i], base.apply(s, codec.decode(x).entries[i]));
          continue;
        }
        for (Element y = 0; y < p.size(); ++y) {
          const auto r = codec.decode(p.apply(s, x, y));
          for (std::size_t i = 0; i < 2; ++i) {
            ASSERT_EQ(r.entries[i], base.apply(s, codec.decode(x).entries[i], codec.decode(y).entries[i]));
          }
        }
      }
    }
  }
}

TEST(Power, CodecRoundTripIsLexicographic) {
  const PowerCodec codec(3, 4);
  EXPECT_EQ(codec.size(), 81u);
  PowerElement prev = codec.decode(0);
  for (Element i = 0; i < 81; ++i) {
    const auto t = codec.decode(i);
    EXPECT_EQ(codec.encode(t), i);
    if (i) {
      EXPECT_LT(prev, t);
    }
    prev = t;
  }
  EXPECT_EQ(codec.diagonal(2), 80u);
  EXPECT_THROW(codec.encode(PowerElement{{0, 0}}), UnsupportedOperationError);
}

TEST(Support, Examples) {
  const auto s3 = zoo::s3();
  EXPECT_TRUE(support(PowerElement{{0, 0, 0}}, s3).empty());
  EXPECT_EQ(support(PowerElement{{0, 1, 0, 0}}, s3), (std::set<std::size_t>{2}));
  EXPECT_EQ(support(PowerElement{{0, 1, 0}}, zoo::z2_ring()), (std::set<std::size_t>{2}));
  const auto p = direct_power(s3, 3);
  EXPECT_EQ(support(p.power()->codec.encode(PowerElement{{4, 0, 1}}), p), (std::set<std::size_t>{1, 3}));
}

TEST(Support, NeedsNeutral) {
  const auto m = magma_from_term(zoo::s3(), mul(var("x"), var("y")));
  EXPECT_THROW(support(PowerElement{{0}}, m), UnsupportedOperationError);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(zoo::s3()).elements, std::vector<Element>{0});
  EXPECT_EQ(center(zoo::z2_group()).elements, (std::vector<Element>{0, 1}));
  EXPECT_EQ(center(zoo::m3()).elements, std::vector<Element>{0});
  EXPECT_EQ(center(zoo::d4()).elements, (std::vector<Element>{0, 2}));
  EXPECT_EQ(center(zoo::q8()).elements, (std::vector<Element>{0, 1}));
  EXPECT_EQ(center(zoo::s3()).role, SubsetRole::center);
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(right_annihilator(zoo::z2_ring()).elements, std::vector<Element>{0});
  EXPECT_EQ(right_annihilator(zoo::z2_zero_ring()).elements, (std::vector<Element>{0, 1}));
  EXPECT_EQ(right_annihilator(zoo::z4_ring()).elements, std::vector<Element>{0});
  EXPECT_THROW(right_annihilator(zoo::s3()), UnsupportedOperationError);
}

// Membership checked directly against the definition, element by element.
TEST(Center, PowerCenterIsTuplesOfCentralElements) {
  for (const auto& base : {zoo::s3(), zoo::d4(), zoo::q8(), zoo::m3(), zoo::z4_group()}) {
    const auto p = direct_power(base, 2);
    const auto z = center(base);
    const auto pz = center(p);
    const auto& codec = p.power()->codec;
    std::vector<Element> expected;
    for (Element x = 0; x < p.size(); ++x) {
      const auto t = codec.decode(x);
      if (z.contains(t.entries[0]) && z.contains(t.entries[1])) expected.push_back(x);
    }
    EXPECT_EQ(pz.elements, expected) << base.name();
  }
}

TEST(Annihilator, PowerAnnihilatorIsCoordinatewise) {
  for (const auto& base : {zoo::z2_ring(), zoo::z4_ring(), zoo::z2_zero_ring(), zoo::z4_zero_ring()}) {
    const auto p = direct_power(base, 2);
    const auto ann = right_annihilator(base);
    const auto& codec = p.power()->codec;
    std::vector<Element> expected;
    for (Element x = 0; x < p.size(); ++x) {
      const auto t = codec.decode(x);
      if (ann.contains(t.entries[0]) && ann.contains(t.entries[1])) expected.push_back(x);
    }
    EXPECT_EQ(right_annihilator(p).elements, expected) << base.name();
  }
}

TEST(Center, GroupAxiomsByExhaustion) {
  for (const auto& g : {zoo::s3(), zoo::d4(), zoo::q8(), zoo::z4_group()}) {
    const auto mul = mul_of(g);
    const auto inv = g.symbol(sym::inv);
    for (Element x = 0; x < g.size(); ++x) {
      EXPECT_EQ(g.apply(mul, x, g.apply(inv, x)), *g.neutral());
      for (Element y = 0; y < g.size(); ++y)
        for (Element z = 0; z < g.size(); ++z)
          ASSERT_EQ(g.apply(mul, g.apply(mul, x, y), z), g.apply(mul, x, g.apply(mul, y, z)));
    }
  }
}

TEST(MagmaFromTerm, IdentityTermGivesOwnTable) {
  const auto s3 = zoo::s3();
  const auto m = magma_from_term(s3, mul(var("x"), var("y")));
  EXPECT_EQ(m.kind(), AlgebraKind::magma);
  EXPECT_FALSE(m.neutral().has_value());
  EXPECT_EQ(m.table(m.symbol(sym::mul)), s3.table(s3.symbol(sym::mul)));
  EXPECT_EQ(m.element_names(), s3.element_names());
}

TEST(MagmaFromTerm, OppositeTable) {
  const auto s3 = zoo::s3();
  const auto m = magma_from_term(s3, mul(var("y"), var("x")));
  const auto mm = m.symbol(sym::mul), sm = s3.symbol(sym::mul);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(m.apply(mm, x, y), s3.apply(sm, y, x));
}

TEST(MagmaFromTerm, Z2RingXYPlusX) {
  const auto r = zoo::z2_ring();
  const auto m = magma_from_term(r, add(mul(var("x"), var("y")), var("x")));
  const auto op = m.symbol(sym::mul);
  EXPECT_EQ(m.apply(op, 0, 1), 0u);
  EXPECT_EQ(m.apply(op, 1, 0), 1u);
  EXPECT_EQ(m.apply(op, 1, 1), 0u);
  EXPECT_FALSE(is_commutative(m));
}

TEST(MagmaFromTerm, Errors) {
  EXPECT_THROW(magma_from_term(zoo::s3(), add(var("x"), var("y"))), UnsupportedOperationError);
  EXPECT_THROW(magma_from_term(zoo::s3(), mul(var("x"), var("z"))), Error);
}
