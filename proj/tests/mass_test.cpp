#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace fdist;
using namespace fdist::testing;

namespace {

using LMass = LabelMass<Q>;

DiscreteFuzzySet<Q> claim() { return {{"a", dec("1.0")}, {"b", dec("0.7")}, {"c", dec("0.2")}}; }
DiscreteFuzzySet<Q> evidence() { return {{"a", dec("0.9")}, {"b", dec("0.6")}, {"c", dec("0.1")}}; }

}  // namespace

TEST(MassFromDiscrete, ClaimLevelSets) {
  LMass m = mass_from_discrete(claim());
  LMass expected = LMass::make({{LabelSet{"a"}, dec("0.3")}, {LabelSet{"a", "b"}, dec("0.5")},
                                {LabelSet{"a", "b", "c"}, dec("0.2")}});
  EXPECT_EQ(m, expected);
  EXPECT_EQ(m.mass_of(LabelSet{"a"}), dec("0.3"));
  EXPECT_TRUE(m.is_normal());
  EXPECT_EQ(m.to_string(), "{a}:0.3, {a,b}:0.5, {a,b,c}:0.2");
}

TEST(MassFromDiscrete, EvidenceIsNonNormal) {
  LMass m = mass_from_discrete(evidence());
  EXPECT_EQ(m.mass_of(LabelSet{"a"}), dec("0.3"));
  EXPECT_EQ(m.mass_of(LabelSet{"a", "b"}), dec("0.5"));
  EXPECT_EQ(m.mass_of(LabelSet{"a", "b", "c"}), dec("0.1"));
  EXPECT_EQ(m.empty_mass(), dec("0.1"));
  EXPECT_FALSE(m.is_normal());
  EXPECT_EQ(m.to_string(), "{a}:0.3, {a,b}:0.5, {a,b,c}:0.1, {}:0.1");
}

TEST(MassFromDiscrete, EqualGradesShareALevel) {
  LMass m = mass_from_discrete(DiscreteFuzzySet<Q>{{"a", q(1)}, {"b", q(1, 2)}, {"c", q(1, 2)}});
  EXPECT_EQ(m, LMass::make({{LabelSet{"a"}, q(1, 2)}, {LabelSet{"a", "b", "c"}, q(1, 2)}}));
}

TEST(MassFromDiscrete, AllZeroIsEmptySet) {
  LMass m = mass_from_discrete(DiscreteFuzzySet<Q>{{"a", q(0)}});
  EXPECT_EQ(m.empty_mass(), q(1));
  EXPECT_EQ(m.size(), 1u);
}

TEST(DiscreteFuzzySet, RejectsGradesOutsideUnitInterval) {
  EXPECT_THROW((DiscreteFuzzySet<Q>{{"a", dec("1.2")}}), InvalidInput);
  EXPECT_THROW((DiscreteFuzzySet<Q>{{"a", dec("-0.1")}}), InvalidInput);
}

TEST(MassAssignment, MergesDuplicatesAndDropsZeros) {
  Mass m = Mass::make({{iv("1", "5"), q(1, 4)}, {iv("2", "4"), q(1, 2)}, {iv("1", "5"), q(1, 4)}, {iv("7", "8"), q(0)}});
  EXPECT_EQ(m, mass({{iv("1", "5"), "0.5"}, {iv("2", "4"), "0.5"}}));
  EXPECT_EQ(m.size(), 2u);
}

TEST(MassAssignment, RejectsNegativeMass) {
  EXPECT_THROW(Mass::make({{iv("1", "5"), q(3, 2)}, {iv("2", "4"), q(-1, 2)}}), InvalidInput);
}

TEST(MassAssignment, RejectsTotalOtherThanOne) {
  EXPECT_THROW(Mass::make({{iv("1", "5"), q(1, 2)}}), InvalidInput);
  EXPECT_THROW(Mass::make({{iv("1", "5"), q(3, 4)}, {iv("2", "4"), q(1, 2)}}), InvalidInput);
}

TEST(MassAssignment, SumWithinToleranceIsAccepted) {
  using D = NumericMass<double>;
  D m = D::make({{IntervalUnion<double>(1.0, 2.0), 0.1 + 0.2}, {IntervalUnion<double>(3.0, 4.0), 0.7}});
  EXPECT_NEAR(m.total(), 1.0, 1e-12);
}

TEST(MassAssignment, CanonicalOrderIsLexicographicWithEmptyLast) {
  Mass m = Mass::make({{IU{}, q(1, 4)}, {iv("3", "7"), q(1, 4)}, {iv("1", "9"), q(1, 4)}, {iv("2", "8"), q(1, 4)}});
  EXPECT_EQ(m.to_string(), "[1,9]:0.25, [2,8]:0.25, [3,7]:0.25, []:0.25");
  EXPECT_FALSE(m.is_normal());
}

TEST(MassAssignment, Certain) {
  Mass m = Mass::certain(iv("0", "2"));
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.mass_of(iv("0", "2")), q(1));
  EXPECT_EQ(m.mass_of(iv("0", "1")), q(0));
}

TEST(MassAssignment, EqualityIgnoresInputOrder) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Mass::Entry> entries;
    for (int k = 0; k < 5; ++k) entries.push_back({random_union(rng, 3, 0, 10, 2), q(1, 5)});
    Mass a = Mass::make(entries);
    std::shuffle(entries.begin(), entries.end(), rng);
    Mass b = Mass::make(entries);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.total(), q(1));
  }
}
