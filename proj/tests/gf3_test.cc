// Copyright 2026 The Capset Authors
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


#include <random>

#include <gtest/gtest.h>

#include "capset/errors.h"
#include "capset/gf3.h"
#include "support/oracles.h"

namespace capset {
namespace {

using ::capset::testing::AllVectors;
using ::capset::testing::ExhaustiveMaxCap;
using ::capset::testing::NaiveIsCap;
using ::capset::testing::NaiveIsExtendable;
using ::capset::testing::RandomCap;
using ::capset::testing::RandomExtendableTriple;
using ::capset::testing::RandomSubset;

VectorSet Line(std::initializer_list<int> digits) {
  std::vector<TernaryVector> v;
  for (int d : digits) v.push_back(TernaryVector{d});
  return VectorSet(1, std::move(v));
}

TEST(TernaryVectorTest, AddMod3) {
  EXPECT_EQ(AddMod3({0, 1}, {0, 1}), (TernaryVector{0, 2}));
  EXPECT_EQ(AddMod3({1, 2}, {2, 1}), (TernaryVector{0, 0}));
  const TernaryVector x{1, 1, 0};
  EXPECT_TRUE(AddMod3(AddMod3(x, x), x).IsZero());
  EXPECT_THROW(AddMod3({0, 1}, {0}), DimensionError);
}

TEST(TernaryVectorTest, WeightSupportAndParse) {
  const TernaryVector v = TernaryVector::Parse("10220");
  EXPECT_EQ(v.Weight(), 3);
  EXPECT_EQ(v.Support(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(v.ToString(), "10220");
  EXPECT_THROW(TernaryVector::Parse("1031"), ParseError);
  EXPECT_THROW(TernaryVector({0, 3}), DomainError);
}

TEST(TernaryVectorTest, ThirdPointCompletesLine) {
  for (const auto& x : AllVectors(2)) {
    for (const auto& y : AllVectors(2)) {
      EXPECT_TRUE(AddMod3(AddMod3(x, y), ThirdPoint(x, y)).IsZero());
    }
  }
}

TEST(VectorSetTest, SortedAndDeduplicated) {
  VectorSet s(2, {TernaryVector{2, 0}, TernaryVector{0, 1},
                  TernaryVector{2, 0}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (TernaryVector{0, 1}));
  EXPECT_TRUE(s.Contains(TernaryVector{2, 0}));
  EXPECT_FALSE(s.Contains(TernaryVector{1, 1}));
  EXPECT_THROW(VectorSet(2, {TernaryVector{1}}), DimensionError);
}

TEST(IsCapSetTest, Examples) {
  EXPECT_TRUE(IsCapSet(Line({0, 1})).ok());
  EXPECT_TRUE(IsCapSet(VectorSet(3)).ok());

  const Verdict v = IsCapSet(Line({0, 1, 2}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kCapTriple);
  EXPECT_EQ(v.witness, (std::vector<TernaryVector>{{0}, {1}, {2}}));
}

TEST(IsCapSetTest, MaximumInPlaneIsFour) {
  const std::size_t oracle = ExhaustiveMaxCap(2);
  ASSERT_EQ(oracle, 4u);
  // Every 5-subset of the plane fails the library check too.
  const auto all = AllVectors(2);
  int five_subsets = 0;
  for (int mask = 0; mask < (1 << 9); ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    std::vector<TernaryVector> pick;
    for (int i = 0; i < 9; ++i) {
      if (mask & (1 << i)) pick.push_back(all[i]);
    }
    EXPECT_FALSE(IsCapSet(VectorSet(2, pick)).ok());
    ++five_subsets;
  }
  EXPECT_EQ(five_subsets, 126);
}

TEST(IsCapSetTest, AgreesWithNaiveCheck) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    const VectorSet s = RandomSubset(rng, n, trial % 2 ? 0.2 : 0.45);
    EXPECT_EQ(IsCapSet(s).ok(), NaiveIsCap(s)) << "trial " << trial;
  }
}

TEST(IsCapSetTest, WitnessIsARealLine) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = RandomSubset(rng, 3, 0.3);
    const Verdict v = IsCapSet(s);
    if (v.ok()) continue;
    ASSERT_EQ(v.witness.size(), 3u);
    for (const auto& w : v.witness) EXPECT_TRUE(s.Contains(w));
    EXPECT_TRUE(
        AddMod3(AddMod3(v.witness[0], v.witness[1]), v.witness[2]).IsZero());
  }
}

TEST(IsExtendableTest, Examples) {
  EXPECT_TRUE(IsExtendable(Line({0}), Line({1}), Line({1})).ok());

  const Verdict v = IsExtendable(Line({0}), Line({1}), Line({2}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kExtendableCondition2);
  EXPECT_EQ(v.witness, (std::vector<TernaryVector>{{0}, {1}, {2}}));
}

TEST(IsExtendableTest, ConditionOneIncludesEqualPair) {
  // 1 + 1 + 1 = 0 with x = y.
  const Verdict v = IsExtendable(Line({1}), Line({1}), Line({0}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kExtendableCondition1);
}

TEST(IsExtendableTest, NonCapInputAndDimensionMismatch) {
  const Verdict v = IsExtendable(Line({0}), Line({0, 1, 2}), Line({1}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kNotCapSet);
  EXPECT_THROW(IsExtendable(Line({0}), VectorSet(2), Line({1})),
               DimensionError);
}

TEST(IsExtendableTest, AgreesWithNaiveCheck) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 2;
    const VectorSet a0 = RandomSubset(rng, n, 0.2);
    const VectorSet a1 = RandomSubset(rng, n, 0.3);
    const VectorSet a2 = RandomSubset(rng, n, 0.3);
    EXPECT_EQ(IsExtendable(a0, a1, a2).ok(), NaiveIsExtendable(a0, a1, a2));
  }
}

TEST(IsExtendableTest, PassImpliesA0Disjoint) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = RandomExtendableTriple(rng, 1 + trial % 2);
    ASSERT_TRUE(IsExtendable(t.a0, t.a1, t.a2).ok());
    EXPECT_TRUE(Intersection(t.a0, t.a1).empty());
    EXPECT_TRUE(Intersection(t.a0, t.a2).empty());
  }
}

TEST(VerifierTest, CoordinatePermutationInvariance) {
  std::mt19937_64 rng(19);
  std::vector<int> perm{2, 0, 1};
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = RandomSubset(rng, 3, 0.25);
    EXPECT_EQ(IsCapSet(s).ok(), IsCapSet(PermuteCoordinates(s, perm)).ok());
  }
  std::vector<int> swap{1, 0};
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet a0 = RandomSubset(rng, 2, 0.2);
    const VectorSet a1 = RandomSubset(rng, 2, 0.3);
    const VectorSet a2 = RandomSubset(rng, 2, 0.3);
    EXPECT_EQ(IsExtendable(a0, a1, a2).ok(),
              IsExtendable(PermuteCoordinates(a0, swap),
                           PermuteCoordinates(a1, swap),
                           PermuteCoordinates(a2, swap))
                  .ok());
  }
}

TEST(ExtendableTripleTest, CertifyRejectsBadTriple) {
  EXPECT_THROW(ExtendableTriple::Certify(Line({0}), Line({1}), Line({2})),
               CertificationError);
  const auto t = ExtendableTriple::Certify(Line({0}), Line({1}), Line({1}));
  EXPECT_EQ(t.provenance(), Provenance::kBruteForce);
  EXPECT_EQ(t.size(1), 1);
  const auto lemma = ExtendableTriple::ByLemma(36, 5, 6, 6, "sizes only");
  EXPECT_FALSE(lemma.materialized());
  EXPECT_THROW(lemma.set(0), DomainError);
}

TEST(DirectProductTest, Examples) {
  const VectorSet bits = Line({0, 1});
  const VectorSet grid = DirectProduct(bits, bits);
  EXPECT_EQ(grid, (VectorSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(DirectProduct(bits, VectorSet(2)).empty());
  EXPECT_EQ(DirectProduct(bits, VectorSet(2)).dimension(), 3);
}

TEST(DirectProductTest, CapClosure) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet a = RandomCap(rng, 1 + trial % 2, 4);
    const VectorSet b = RandomCap(rng, 1 + (trial / 2) % 2, 4);
    const VectorSet p = DirectProduct(a, b);
    EXPECT_EQ(p.size(), a.size() * b.size());
    EXPECT_TRUE(IsCapSet(p).ok());
  }
}

TEST(PowerTest, Examples) {
  EXPECT_EQ(Power(Line({0, 1}), 3).size(), 8u);
  EXPECT_EQ(Power(Line({1}), 2), (VectorSet{{1, 1}}));
  EXPECT_THROW(Power(Line({1}), 0), DomainError);
}

TEST(PowerTest, BudgetNamesExactCount) {
  std::vector<TernaryVector> big;
  for (int i = 0; i < 112; ++i) {
    TernaryVector v(7);
    int c = i;
    for (int k = 0; k < 7; ++k, c /= 3) v.Set(k, c % 3);
    big.push_back(v);
  }
  const VectorSet a(7, big);
  try {
    Power(a, 6);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.count(), "1973822685184");  // 112^6
  }
}

}  // namespace
}  // namespace capset
