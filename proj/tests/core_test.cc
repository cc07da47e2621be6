// Copyright 2026 The circ Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circ/core.h"

#include <gtest/gtest.h>

#include <random>

#include "random_theory.h"

namespace circ {
namespace {

TEST(ProjectTest, Examples) {
  EXPECT_EQ(Project({"bird", "fly"}, {"ab"}), AtomSet{});
  EXPECT_EQ(Project({}, {"a", "b", "c"}), AtomSet{});
  EXPECT_EQ(Project({"bird", "fly", "ab1"}, {"ab2", "ab1", "bird"}),
            (AtomSet{"ab1", "bird"}));
}

TEST(CoProjectTest, Examples) {
  EXPECT_EQ(CoProject({"bird", "ab"}, {"bird", "fly"}), AtomSet{"fly"});
  EXPECT_EQ(CoProject({"a", "b", "c"}, {"a", "b"}), AtomSet{});
  EXPECT_EQ(CoProject({}, {"a", "b"}), (AtomSet{"a", "b"}));
}

TEST(LeqPZTest, FixedFlyMakesModelsIncomparable) {
  const Policy policy = Policy::Simple({"ab"}, {}, {"bird", "fly"});
  const Interpretation i1{"bird", "fly"};
  const Interpretation i2{"bird", "ab", "fly"};
  const Interpretation i3{"bird", "ab"};
  EXPECT_TRUE(LeqPZ(i1, i2, policy));
  EXPECT_TRUE(LtPZ(i1, i2, policy));
  EXPECT_FALSE(LtPZ(i2, i1, policy));
  EXPECT_FALSE(LeqPZ(i1, i3, policy));
  EXPECT_FALSE(LeqPZ(i3, i1, policy));
}

TEST(LeqPZTest, Reflexive) {
  const Policy policy = Policy::Simple({"a"}, {"b"}, {"c"});
  for (const Interpretation& i :
       {Interpretation{}, Interpretation{"a"}, Interpretation{"a", "b", "c"}}) {
    EXPECT_TRUE(LeqPZ(i, i, policy));
    EXPECT_FALSE(LtPZ(i, i, policy));
  }
}

TEST(LeqPZTest, RejectsMultiTierPolicy) {
  Policy policy;
  policy.tiers = {{"a"}, {"b"}};
  EXPECT_THROW(LeqPZ({}, {}, policy), InputError);
}

TEST(PrecOrderTest, Examples) {
  Policy policy;
  policy.tiers = {{"ab2"}, {"ab1"}};
  policy.varied = {"fly"};
  policy.fixed = {"bird"};
  const Interpretation i1{"bird", "fly", "ab1"};
  const Interpretation i2{"bird", "ab2", "fly", "ab1"};
  EXPECT_TRUE(PrecOrder(i1, i2, policy));
  EXPECT_TRUE(PrecStrict(i1, i2, policy));
  EXPECT_FALSE(PrecOrder(i2, i1, policy));
  EXPECT_TRUE(PrecOrder(i1, i1, policy));
  // bird differs.
  EXPECT_FALSE(PrecOrder(i1, Interpretation{}, policy));
  EXPECT_FALSE(PrecOrder(Interpretation{}, i1, policy));
}

TEST(PrecOrderTest, LaterTierOnlyMattersWhenEarlierTiersAgree) {
  Policy policy;
  policy.tiers = {{"a"}, {"b"}};
  // Tier 1 strictly smaller decides regardless of tier 2.
  EXPECT_TRUE(PrecStrict({"b"}, {"a"}, policy));
  EXPECT_FALSE(PrecOrder({"a"}, {"b"}, policy));
  // Tier 1 equal, tier 2 decides.
  EXPECT_TRUE(PrecStrict({"a"}, {"a", "b"}, policy));
}

// With one tier the prioritized order is exactly <=^{P;Z}.
TEST(PrecOrderTest, SingleTierAgreesWithLeqPZ) {
  std::mt19937 rng(7);
  const std::vector<Atom> atoms = testing::AtomNames(5);
  for (int round = 0; round < 20; ++round) {
    const Policy policy = testing::RandomPolicy(rng, atoms, 1, true, true);
    for (unsigned a = 0; a < 32; ++a) {
      for (unsigned b = 0; b < 32; ++b) {
        AtomSet sa, sb;
        for (int i = 0; i < 5; ++i) {
          if (a >> i & 1) sa.insert(atoms[i]);
          if (b >> i & 1) sb.insert(atoms[i]);
        }
        const Interpretation ia(sa), ib(sb);
        ASSERT_EQ(PrecOrder(ia, ib, policy), LeqPZ(ia, ib, policy));
        ASSERT_EQ(PrecStrict(ia, ib, policy), LtPZ(ia, ib, policy));
      }
    }
  }
}

TEST(GroundAtomTest, FlattenThenSplitRoundTrips) {
  std::mt19937 rng(3);
  const std::vector<std::string> names = {"a", "b_1", "tweety", "x9", "Q"};
  for (int round = 0; round < 200; ++round) {
    const std::string pred = names[testing::Uniform(rng, 0, 4)];
    std::vector<std::string> args(testing::Uniform(rng, 0, 3));
    for (auto& a : args) a = names[testing::Uniform(rng, 0, 4)];
    std::string p2;
    std::vector<std::string> a2;
    ASSERT_TRUE(SplitGroundAtom(FlattenGroundAtom(pred, args), &p2, &a2));
    EXPECT_EQ(p2, pred);
    EXPECT_EQ(a2, args);
  }
  std::string p;
  std::vector<std::string> a;
  EXPECT_FALSE(SplitGroundAtom("p(a,)", &p, &a));
  EXPECT_FALSE(SplitGroundAtom("1p", &p, &a));
  EXPECT_FALSE(SplitGroundAtom("p(a", &p, &a));
}

TEST(AtomNameTest, Tokens) {
  EXPECT_TRUE(IsPlainAtomName("ab_1"));
  EXPECT_TRUE(IsPlainAtomName("_x"));
  EXPECT_FALSE(IsPlainAtomName(""));
  EXPECT_FALSE(IsPlainAtomName("1ab"));
  EXPECT_FALSE(IsPlainAtomName("a-b"));
}

TEST(ClauseTest, TautologyAndEmpty) {
  EXPECT_TRUE(Clause::Of({"p"}, {"p"}).IsTautology());
  EXPECT_FALSE(Clause::Of({"p"}, {"q"}).IsTautology());
  EXPECT_TRUE(Clause{}.IsEmpty());
  EXPECT_FALSE(Clause{}.SatisfiedBy({"p"}));
  EXPECT_EQ(ToString(Clause::Of({"ab", "fly"}, {"bird"})), "~bird | ab | fly");
}

TEST(PolicyTest, Validation) {
  const AtomSet vocab{"a", "b", "c"};
  EXPECT_NO_THROW(Policy::Simple({"a"}, {"b"}, {"c"}).Validate(vocab));
  EXPECT_THROW(Policy::Simple({"a"}, {"a", "b"}, {"c"}).Validate(vocab),
               InputError);
  EXPECT_THROW(Policy::Simple({"a"}, {"b"}, {}).Validate(vocab), InputError);
  EXPECT_THROW(Policy::Simple({"a", "d"}, {"b"}, {"c"}).Validate(vocab),
               InputError);
  Policy none;
  none.fixed = vocab;
  EXPECT_THROW(none.Validate(vocab), InputError);
}

TEST(TheoryTest, RejectsClauseOutsideVocabulary) {
  Theory t = testing::BirdTheory({"ab"}, {}, {"bird", "fly"});
  EXPECT_NO_THROW(t.Validate());
  t.clauses.insert(Clause::Of({"penguin"}));
  EXPECT_THROW(t.Validate(), InputError);
}

TEST(ModelSetTest, CanonicalOrderIndependentOfInsertion) {
  std::vector<AtomSet> members = {
      {"bird", "fly"}, {}, {"ab", "bird"}, {"ab"}, {"bird", "fly"}};
  std::mt19937 rng(11);
  const std::string expected = "{{}, {ab}, {ab, bird}, {bird, fly}}";
  for (int round = 0; round < 10; ++round) {
    std::shuffle(members.begin(), members.end(), rng);
    ModelSet s;
    for (const AtomSet& m : members) s.Insert(m);
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(ToString(s), expected);
  }
}

}  // namespace
}  // namespace circ
