#include <gtest/gtest.h>

#include "mclain/error.hpp"
#include "mclain/ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mclain {
namespace {

using testing::Rng;

TEST(RingSpec, ParsesAllThreeKinds) {
  EXPECT_EQ(RingSpec::parse("Z"), RingSpec::integers());
  EXPECT_EQ(RingSpec::parse("Z/5"), RingSpec::integers_mod(5));
  EXPECT_EQ(RingSpec::parse("M2(Z/3)"), RingSpec::matrices2x2_mod(3));
  EXPECT_EQ(RingSpec::parse("M2(Z/3)").to_string(), "M2(Z/3)");
}

TEST(RingSpec, RejectsDegenerateModulusAndGarbage) {
  EXPECT_THROW(RingSpec::parse("Z/1"), DomainError);
  EXPECT_THROW(RingSpec::parse("Z/0"), DomainError);
  EXPECT_THROW(RingSpec::integers_mod(1), DomainError);
  EXPECT_THROW(RingSpec::parse("Q"), ParseError);
  EXPECT_THROW(RingSpec::parse("Z/x"), ParseError);
  EXPECT_THROW(RingSpec::parse("M2(Z/3"), ParseError);
}

TEST(RingMake, Examples) {
  EXPECT_EQ(ring_make(RingSpec::integers(), "\xE2\x88\x92" "3").to_string(), "-3");
  EXPECT_EQ(ring_make(RingSpec::integers(), "-3"), RingValue::from_integer(RingSpec::integers(), -3));
  EXPECT_EQ(ring_make(RingSpec::integers_mod(5), "7").to_string(), "2");
  EXPECT_EQ(ring_make(RingSpec::integers_mod(5), "-1").to_string(), "4");
  const RingSpec m2 = RingSpec::matrices2x2_mod(2);
  EXPECT_EQ(ring_make(m2, "[1,1;0,1]"), RingValue::matrix(m2, 1, 1, 0, 1));
  EXPECT_EQ(ring_make(m2, "[3, -1 ; 2,5]").to_string(), "[1,1;0,1]");
  EXPECT_EQ(ring_make(m2, "1"), RingValue::one(m2));
}

TEST(RingMake, MalformedLiterals) {
  EXPECT_THROW(ring_make(RingSpec::integers(), ""), ParseError);
  EXPECT_THROW(ring_make(RingSpec::integers(), "1.5"), ParseError);
  EXPECT_THROW(ring_make(RingSpec::integers(), "[1,0;0,1]"), ParseError);
  EXPECT_THROW(ring_make(RingSpec::integers_mod(3), "[1,0;0,1]"), ParseError);
  EXPECT_THROW(ring_make(RingSpec::matrices2x2_mod(3), "[1,0;0]"), ParseError);
  EXPECT_THROW(ring_make(RingSpec::matrices2x2_mod(3), "[1,0,0;0,1]"), ParseError);
  EXPECT_THROW(ring_make(RingSpec::matrices2x2_mod(3), "[1,0;0,1"), ParseError);
}

TEST(RingOps, Examples) {
  const RingSpec m3 = RingSpec::matrices2x2_mod(3);
  const RingValue a = ring_make(m3, "[0,1;0,0]");
  const RingValue b = ring_make(m3, "[0,0;1,0]");
  EXPECT_EQ(mul(a, b).to_string(), "[1,0;0,0]");
  EXPECT_EQ(mul(b, a).to_string(), "[0,0;0,1]");
  EXPECT_FALSE(eq(mul(a, b), mul(b, a)));

  const RingSpec z5 = RingSpec::integers_mod(5);
  EXPECT_EQ(add(ring_make(z5, "3"), ring_make(z5, "4")).to_string(), "2");
  EXPECT_FALSE(eq(one(RingSpec::integers()), zero(RingSpec::integers())));
}

TEST(RingOps, MixedSpecsAreErrors) {
  const RingValue a = RingValue::one(RingSpec::integers());
  const RingValue b = RingValue::one(RingSpec::integers_mod(5));
  EXPECT_THROW(add(a, b), DomainError);
  EXPECT_THROW(mul(a, b), DomainError);
  EXPECT_THROW((void)(a == b), DomainError);
}

TEST(RingOps, IntegersDoNotOverflow) {
  const RingSpec z = RingSpec::integers();
  RingValue v = ring_make(z, "18446744073709551616");  // 2^64
  v = v * v;
  EXPECT_EQ(v.to_string(), "340282366920938463463374607431768211456");
}

TEST(RingOps, ZeroAndOneDistinctInEveryInstance) {
  for (const RingSpec& spec : testing::ring_instances()) {
    EXPECT_TRUE(RingValue::zero(spec).is_zero());
    EXPECT_TRUE(RingValue::one(spec).is_one());
    EXPECT_FALSE(RingValue::one(spec).is_zero()) << spec.to_string();
  }
}

TEST(RingOps, MatrixProductMatchesNaiveRoutine) {
  Rng rng(11);
  for (std::uint64_t n : {2u, 3u, 5u, 7u}) {
    const RingSpec spec = RingSpec::matrices2x2_mod(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::array<std::int64_t, 4> x{}, y{};
      for (auto& e : x) e = testing::uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1);
      for (auto& e : y) e = testing::uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1);
      const auto expect = testing::naive_mat2_product(x, y, static_cast<std::int64_t>(n));
      EXPECT_EQ(RingValue::matrix(spec, x[0], x[1], x[2], x[3]) * RingValue::matrix(spec, y[0], y[1], y[2], y[3]),
                RingValue::matrix(spec, expect[0], expect[1], expect[2], expect[3]));
    }
  }
}

void check_laws(const RingValue& a, const RingValue& b, const RingValue& c) {
  const RingValue one = RingValue::one(a.spec());
  const RingValue zero = RingValue::zero(a.spec());
  ASSERT_EQ((a + b) + c, a + (b + c));
  ASSERT_EQ(a + b, b + a);
  ASSERT_EQ(a * (b * c), (a * b) * c);
  ASSERT_EQ(a * (b + c), a * b + a * c);
  ASSERT_EQ((a + b) * c, a * c + b * c);
  ASSERT_EQ(one * a, a);
  ASSERT_EQ(a * one, a);
  ASSERT_EQ(a + (-a), zero);
  ASSERT_EQ(a + zero, a);
}

TEST(RingProperties, AxiomsOnRandomTriples) {
  Rng rng(2024);
  std::vector<RingSpec> specs = testing::ring_instances();
  specs.push_back(RingSpec::integers_mod(7));
  specs.push_back(RingSpec::matrices2x2_mod(3));
  for (const RingSpec& spec : specs) {
    for (int trial = 0; trial < 1000; ++trial) {
      check_laws(testing::random_value(spec, rng), testing::random_value(spec, rng),
                 testing::random_value(spec, rng));
    }
  }
}

TEST(RingProperties, ExhaustiveLawsForModulusTwo) {
  std::vector<RingValue> z2{RingValue::from_integer(RingSpec::integers_mod(2), 0),
                            RingValue::from_integer(RingSpec::integers_mod(2), 1)};
  std::vector<RingValue> m2;
  const RingSpec ms = RingSpec::matrices2x2_mod(2);
  for (int bits = 0; bits < 16; ++bits) m2.push_back(RingValue::matrix(ms, bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1));
  for (const auto* values : {&z2, &m2}) {
    for (const auto& a : *values)
      for (const auto& b : *values)
        for (const auto& c : *values) check_laws(a, b, c);
  }
}

TEST(RingProperties, PrintParseIsIdempotent) {
  Rng rng(5);
  for (const RingSpec& spec : testing::ring_instances()) {
    for (int trial = 0; trial < 200; ++trial) {
      const RingValue v = testing::random_value(spec, rng);
      const RingValue back = RingValue::parse(spec, v.to_string());
      EXPECT_EQ(back, v);
      EXPECT_EQ(back.to_string(), v.to_string());
    }
  }
}

}  // namespace
}  // namespace mclain
