#include <gtest/gtest.h>

#include <stdexcept>

#include "mclain/element.hpp"
#include "mclain/error.hpp"
#include "mclain/io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/presentation.hpp"

namespace mclain {
namespace {

const RingSpec kZ = RingSpec::integers();

RingValue z(long v) { return RingValue::from_integer(kZ, v); }

TEST(Generator, Examples) {
  const Group g(kZ, chain(3));
  EXPECT_TRUE(generator(g, "1", "2", z(0)).is_identity());
  const GroupElement x = generator(g, "1", "2", z(5));
  EXPECT_EQ(x.to_string(), "1 + 5*e(1,2)");
  EXPECT_EQ(x.coefficient("1", "2"), z(5));
  EXPECT_TRUE(x.coefficient("1", "3").is_zero());
  EXPECT_THROW(generator(g, "1", "1", z(1)), DomainError);
  EXPECT_THROW(generator(g, "2", "1", z(1)), DomainError);
}

TEST(GroupConstruction, RejectsInvalidRelations) {
  EXPECT_THROW(Group(kZ, Relation::from_pairs({{"1", "1"}})), DomainError);
  EXPECT_THROW(Group(kZ, Relation::from_pairs({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}, {"1", "3"}})),
               DomainError);
  const Group g(kZ, chain(3));
  Coefficients bad;
  bad.emplace(Pair{1, 0}, z(1));
  EXPECT_THROW(GroupElement(g, bad), DomainError);
  Coefficients wrong_ring;
  wrong_ring.emplace(Pair{0, 1}, RingValue::one(RingSpec::integers_mod(3)));
  EXPECT_THROW(GroupElement(g, wrong_ring), DomainError);
}

TEST(Multiply, Examples) {
  const Group c3(kZ, chain(3));
  const GroupElement p = generator(c3, "1", "2", z(2)) * generator(c3, "2", "3", z(3));
  EXPECT_EQ(p.to_string(), "1 + 2*e(1,2) + 6*e(1,3) + 3*e(2,3)");

  const Group open(kZ, Relation::from_pairs({{"1", "2"}, {"2", "3"}}));
  EXPECT_EQ((generator(open, "1", "2", z(2)) * generator(open, "2", "3", z(3))).to_string(),
            "1 + 2*e(1,2) + 3*e(2,3)");

  EXPECT_EQ(p * identity(c3), p);
  EXPECT_EQ(identity(c3) * p, p);
}

TEST(Multiply, PrunesZeros) {
  const Group c3(kZ, chain(3));
  EXPECT_TRUE((generator(c3, "1", "2", z(2)) * generator(c3, "1", "2", z(-2))).is_identity());
}

TEST(Multiply, MixedGroupsAreErrors) {
  const Group a(kZ, chain(3));
  const Group b(RingSpec::integers_mod(2), chain(3));
  EXPECT_THROW(identity(a) * identity(b), DomainError);
}

TEST(Inverse, Examples) {
  const Group c3(kZ, chain(3));
  EXPECT_EQ(inverse(generator(c3, "1", "2", z(4))), generator(c3, "1", "2", z(-4)));
  const GroupElement g = parse_normal_form("1 + 1*e(1,2) + 1*e(1,3) + 1*e(2,3)", c3);
  EXPECT_EQ(inverse(g).to_string(), "1 + -1*e(1,2) + -1*e(2,3)");
  EXPECT_TRUE((g * inverse(g)).is_identity());
  EXPECT_TRUE(inverse(identity(c3)).is_identity());
}

TEST(Inverse, DetectsBrokenAmbientRelation) {
  const Group broken = Group::unchecked(kZ, Relation::from_pairs({{"1", "1"}}));
  Coefficients c;
  c.emplace(Pair{0, 0}, z(1));
  EXPECT_THROW(inverse(GroupElement(broken, c)), std::logic_error);
}

TEST(Commutator, Examples) {
  const Group c3(kZ, chain(3));
  EXPECT_EQ(commutator(generator(c3, "1", "2", z(2)), generator(c3, "2", "3", z(3))),
            generator(c3, "1", "3", z(6)));
  const Group c4(kZ, chain(4));
  EXPECT_TRUE(commutator(generator(c4, "1", "2", z(2)), generator(c4, "3", "4", z(3))).is_identity());

  const RingSpec m2 = RingSpec::matrices2x2_mod(2);
  const Group mg(m2, chain(3));
  const RingValue a = RingValue::matrix(m2, 0, 1, 0, 0);
  const RingValue b = RingValue::matrix(m2, 0, 0, 1, 0);
  // Independent product: [0,1;0,0]·[0,0;1,0] = [1,0;0,0].
  const RingValue ab = RingValue::matrix(m2, 1, 0, 0, 0);
  const RingValue ba = RingValue::matrix(m2, 0, 0, 0, 1);
  const GroupElement c = commutator(generator(mg, "1", "2", a), generator(mg, "2", "3", b));
  EXPECT_EQ(c, generator(mg, "1", "3", ab));
  EXPECT_FALSE(c == generator(mg, "1", "3", ba));
}

TEST(EvalWord, Examples) {
  const Group c3(kZ, chain(3));
  const auto gen = [](const char* i, const char* j, long a) { return WordToken::gen(i, j, z(a)); };
  EXPECT_EQ(eval_word(c3, GeneratorWord{{gen("1", "2", 2), gen("1", "2", 5)}}), generator(c3, "1", "2", z(7)));
  EXPECT_EQ(eval_word(c3, GeneratorWord{{WordToken::comm({gen("1", "2", 2)}, {gen("2", "3", 3)})}}),
            generator(c3, "1", "3", z(6)));
  EXPECT_TRUE(eval_word(c3, GeneratorWord{{gen("1", "2", 2), WordToken::inv({gen("1", "2", 2)})}}).is_identity());
  EXPECT_TRUE(eval_word(c3, GeneratorWord{}).is_identity());
  EXPECT_TRUE(eval_word(c3, GeneratorWord{{WordToken::one()}}).is_identity());
  EXPECT_THROW(eval_word(c3, GeneratorWord{{gen("2", "1", 1)}}), DomainError);
  EXPECT_THROW(eval_word(c3, GeneratorWord{{gen("1", "9", 1)}}), DomainError);
}

TEST(Support, Examples) {
  const Group c3(kZ, chain(3));
  EXPECT_TRUE(support(identity(c3)).empty());
  EXPECT_EQ(nilpotency_index(generator(c3, "1", "2", z(3))), 2);
  EXPECT_EQ(nilpotency_index(parse_normal_form("1 + 1*e(1,2) + 1*e(2,3)", c3)), 3);
  EXPECT_EQ(nilpotency_index(identity(c3)), 1);
  const GroupElement g = generator(c3, "1", "2", z(1)) * generator(c3, "2", "3", z(1));
  EXPECT_EQ(support(g), chain(3));
  EXPECT_TRUE(equals(g, parse_normal_form(g.to_string(), c3)));
}

TEST(RingProduct, FollowsStructureConstants) {
  const Group d4(kZ, ngon(4));
  Coefficients x, y;
  x.emplace(*d4.relation().find_pair("0", "1"), z(2));
  y.emplace(*d4.relation().find_pair("1", "2"), z(3));
  y.emplace(*d4.relation().find_pair("1", "3"), z(5));  // (0,3) is not in Δ₄
  const Coefficients p = ring_product(d4, x, y);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.begin()->first, *d4.relation().find_pair("0", "2"));
  EXPECT_EQ(p.begin()->second, z(6));
}

// ---------------------------------------------------------------------------
// Properties

class PerRing : public ::testing::TestWithParam<RingSpec> {};

TEST_P(PerRing, GroupLaws) {
  testing::Rng rng(1234);
  for (const Relation& delta : testing::sample_relations(15, 55)) {
    const Group group(GetParam(), delta);
    for (int s = 0; s < 500; ++s) {
      const GroupElement a = testing::random_element(group, rng);
      const GroupElement b = testing::random_element(group, rng);
      const GroupElement c = testing::random_element(group, rng);
      ASSERT_EQ((a * b) * c, a * (b * c)) << delta.to_string();
      ASSERT_EQ(a * identity(group), a);
      ASSERT_EQ(identity(group) * a, a);
      const GroupElement ai = inverse(a);
      ASSERT_TRUE((a * ai).is_identity());
      ASSERT_TRUE((ai * a).is_identity());
    }
  }
}

TEST_P(PerRing, PresentationRelations) {
  testing::Rng rng(4321);
  testing::RelationTally tally;
  for (const Relation& delta : testing::sample_relations(15, 56)) {
    const Group group(GetParam(), delta);
    for (int s = 0; s < 20; ++s) testing::check_relations_once(group, rng, tally);
  }
  EXPECT_TRUE(tally.failures.empty()) << tally.failures.front();
  EXPECT_GT(tally.rel1, 0u);
  EXPECT_GT(tally.rel1_trivial, 0u);
  EXPECT_GT(tally.rel2, 0u);
}

TEST_P(PerRing, NormalFormRoundTrip) {
  testing::Rng rng(99);
  for (const Relation& delta : testing::sample_relations(10, 57)) {
    const Group group(GetParam(), delta);
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = testing::random_element(group, rng);
      const GroupElement back = parse_normal_form(g.to_string(), group);
      ASSERT_EQ(back, g);
      ASSERT_EQ(back.coefficients().size(), g.coefficients().size());
      ASSERT_EQ(back.to_string(), g.to_string());
    }
  }
}

TEST_P(PerRing, NilpotencyIndexBoundedByTouchedNodes) {
  testing::Rng rng(100);
  for (const Relation& delta : testing::sample_relations(15, 58)) {
    const Group group(GetParam(), delta);
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = testing::random_element(group, rng, 0.8);
      if (g.is_identity()) continue;
      EXPECT_LE(static_cast<std::size_t>(nilpotency_index(g)), touched_nodes(support(g)).size());
    }
  }
}

std::vector<WordToken> random_tokens(const Group& group, testing::Rng& rng, int depth) {
  std::vector<WordToken> out;
  const auto& pairs = group.relation().pairs();
  const int len = static_cast<int>(testing::uniform_int(rng, 0, 4));
  for (int t = 0; t < len; ++t) {
    const auto kind = testing::uniform_int(rng, 0, depth > 0 ? 3 : 1);
    if (kind <= 1 || pairs.empty()) {
      if (pairs.empty()) {
        out.push_back(WordToken::one());
        continue;
      }
      const Pair p = pairs[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<long>(pairs.size()) - 1))];
      const Relation& d = group.relation();
      out.push_back(WordToken::gen(d.label(p.src), d.label(p.dst), testing::random_value(group.ring(), rng)));
    } else if (kind == 2) {
      out.push_back(WordToken::inv(random_tokens(group, rng, depth - 1)));
    } else {
      out.push_back(WordToken::comm(random_tokens(group, rng, depth - 1), random_tokens(group, rng, depth - 1)));
    }
  }
  return out;
}

TEST_P(PerRing, EvalRespectsFreeReduction) {
  testing::Rng rng(101);
  for (const Relation& delta : testing::sample_relations(10, 59)) {
    if (delta.empty()) continue;
    const Group group(GetParam(), delta);
    for (int s = 0; s < 50; ++s) {
      GeneratorWord w{random_tokens(group, rng, 2)};
      const GroupElement before = eval_word(group, w);
      const Pair p = delta.pairs()[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<long>(delta.size()) - 1))];
      const WordToken g = WordToken::gen(delta.label(p.src), delta.label(p.dst), testing::random_value(group.ring(), rng));
      const auto at = static_cast<long>(testing::uniform_int(rng, 0, static_cast<long>(w.tokens.size())));
      w.tokens.insert(w.tokens.begin() + at, {g, WordToken::inv({g})});
      ASSERT_EQ(eval_word(group, w), before) << w.to_string();
    }
  }
}

TEST_P(PerRing, WordPrintParseRoundTrip) {
  testing::Rng rng(102);
  for (const Relation& delta : testing::sample_relations(10, 60)) {
    const Group group(GetParam(), delta);
    for (int s = 0; s < 50; ++s) {
      const GeneratorWord w{random_tokens(group, rng, 2)};
      const GeneratorWord back = parse_word(w.to_string(), group.ring());
      ASSERT_EQ(back.to_string(), w.to_string());
      ASSERT_EQ(eval_word(group, back), eval_word(group, w));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, PerRing, ::testing::ValuesIn(testing::ring_instances()),
                         [](const ::testing::TestParamInfo<RingSpec>& info) {
                           switch (info.param.kind()) {
                             case RingSpec::Kind::Integers: return std::string("Z");
                             case RingSpec::Kind::IntegersMod: return "Zmod" + std::to_string(info.param.modulus());
                             case RingSpec::Kind::Matrices2x2Mod: return "M2mod" + std::to_string(info.param.modulus());
                           }
                           return std::string("unknown");
                         });

}  // namespace
}  // namespace mclain
