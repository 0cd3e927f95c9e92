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
#include "capset/patterns.h"
#include "support/oracles.h"

namespace capset {
namespace {

using ::capset::testing::NaiveIsAdmissible;
using ::capset::testing::NaiveIsRecursivelyAdmissible;
using ::capset::testing::RandomAdmissible;
using ::capset::testing::RandomMetaTriple;
using ::capset::testing::RandomSubset;

TEST(IsAdmissibleTest, Examples) {
  EXPECT_TRUE(IsAdmissible({{0, 2}, {1, 0}}).ok());

  const Verdict v = IsAdmissible({{1, 0}, {1, 2}});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kAdmissiblePair);
  EXPECT_EQ(v.witness, (std::vector<TernaryVector>{{1, 0}, {1, 2}}));

  EXPECT_TRUE(IsAdmissible(VectorSet(3)).ok());
  EXPECT_TRUE(IsAdmissible({{1, 1, 1}}).ok());
}

TEST(IsAdmissibleTest, TripleFailure) {
  // Pairwise fine, but no coordinate of the three reads {0,1,2}, {0,0,1} or
  // {0,0,2}.
  const VectorSet s{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const Verdict v = IsAdmissible(s);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kAdmissibleTriple);
  EXPECT_FALSE(NaiveIsAdmissible(s));
}

TEST(IsAdmissibleTest, AgreesWithNaiveCheck) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 3;
    const VectorSet s = RandomSubset(rng, m, trial % 3 == 0 ? 0.08 : 0.15);
    EXPECT_EQ(IsAdmissible(s).ok(), NaiveIsAdmissible(s)) << "trial " << trial;
    EXPECT_EQ(IsRecursivelyAdmissible(s).ok(), NaiveIsRecursivelyAdmissible(s));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = RandomAdmissible(rng, 4, 12);
    EXPECT_TRUE(IsAdmissible(s).ok());
    EXPECT_EQ(IsRecursivelyAdmissible(s).ok(), NaiveIsRecursivelyAdmissible(s));
  }
}

TEST(IsRecursivelyAdmissibleTest, Examples) {
  EXPECT_TRUE(IsRecursivelyAdmissible({{0, 2, 2}, {1, 0, 2}, {1, 1, 0}}).ok());

  const Verdict pair = IsRecursivelyAdmissible({{0, 1}, {1, 0}});
  ASSERT_FALSE(pair.ok());
  EXPECT_EQ(pair.violation, Violation::kRecursivePair);

  const Verdict single = IsRecursivelyAdmissible({{1, 2}});
  ASSERT_FALSE(single.ok());
  EXPECT_EQ(single.violation, Violation::kTooSmall);
}

TEST(IsConstantWeightTest, Examples) {
  for (int m = 2; m <= 12; ++m) {
    EXPECT_TRUE(IsConstantWeight(BuildChain(m).elements(), m, m - 1).ok());
  }
  EXPECT_TRUE(IsConstantWeight({{1, 1, 1, 1}}, 4, 4).ok());

  const Verdict v = IsConstantWeight({{0, 2}, {1, 0}}, 2, 2);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kWrongWeight);

  EXPECT_THROW(IsConstantWeight({{1, 0}}, 2, 3), DomainError);
}

TEST(IsConstantWeightTest, RepeatedSupport) {
  const VectorSet s{{0, 1, 2}, {0, 2, 1}, {1, 0, 1}};
  const Verdict v = IsConstantWeight(s, 3, 2);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kRepeatedSupport);
}

TEST(BuildChainTest, Examples) {
  EXPECT_EQ(BuildChain(2).elements(), (VectorSet{{0, 2}, {1, 0}}));
  EXPECT_EQ(BuildChain(3).elements(),
            (VectorSet{{0, 2, 2}, {1, 0, 2}, {1, 1, 0}}));
  const PatternSet six = BuildChain(6);
  EXPECT_EQ(six.size(), 6u);
  EXPECT_TRUE(six.Has(PatternRole::kRecursivelyAdmissible));
  EXPECT_EQ(six.weight(), 5);
  EXPECT_THROW(BuildChain(1), DomainError);
}

TEST(BuildChainTest, NaiveOracleAgrees) {
  for (int m = 2; m <= 8; ++m) {
    EXPECT_TRUE(NaiveIsRecursivelyAdmissible(BuildChain(m).elements()));
  }
}

TEST(BuildLowWeightTest, Examples) {
  for (auto [m, w] : {std::pair{3, 2}, {4, 2}, {5, 3}, {5, 2}, {6, 3}, {7, 3},
                      {8, 2}}) {
    const PatternSet p = BuildLowWeight(m, w);
    EXPECT_TRUE(IsConstantWeight(p.elements(), m, w).ok()) << m << "," << w;
    EXPECT_TRUE(NaiveIsAdmissible(p.elements()));
  }
  EXPECT_EQ(BuildLowWeight(4, 2).size(), 6u);
  EXPECT_EQ(BuildLowWeight(5, 3).size(), 10u);
  EXPECT_THROW(BuildLowWeight(3, 3), DomainError);
  EXPECT_THROW(BuildLowWeight(6, 4), DomainError);
}

TEST(ProductAdmissibleTest, Examples) {
  const VectorSet chain = BuildChain(2).elements();
  const PatternSet p = ProductAdmissible(chain, chain);
  EXPECT_EQ(p.elements(), (VectorSet{{0, 2, 0, 2},
                                     {0, 2, 1, 0},
                                     {1, 0, 0, 2},
                                     {1, 0, 1, 0}}));
  EXPECT_TRUE(p.Has(PatternRole::kAdmissible));

  const PatternSet padded = ProductAdmissible(chain, {{0, 0, 0}});
  EXPECT_EQ(padded.elements(), (VectorSet{{0, 2, 0, 0, 0}, {1, 0, 0, 0, 0}}));

  EXPECT_THROW(ProductAdmissible({{1, 0}, {1, 2}}, chain), CertificationError);
}

TEST(ProductAdmissibleTest, RandomPairs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = RandomAdmissible(rng, 2 + trial % 2, 4);
    const VectorSet t = RandomAdmissible(rng, 2 + (trial / 2) % 2, 4);
    const PatternSet p = ProductAdmissible(s, t);
    EXPECT_EQ(p.size(), s.size() * t.size());
    EXPECT_TRUE(NaiveIsAdmissible(p.elements()));
  }
}

TEST(SwapColorsTest, Examples) {
  EXPECT_EQ(SwapColors(VectorSet{{0, 2}, {1, 0}}), (VectorSet{{0, 1}, {2, 0}}));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = RandomSubset(rng, 3, 0.1);
    EXPECT_EQ(SwapColors(SwapColors(s)), s);
    const VectorSet t = SwapColors(s);
    EXPECT_EQ(IsAdmissible(s).ok(), IsAdmissible(t).ok());
    EXPECT_EQ(IsRecursivelyAdmissible(s).ok(), IsRecursivelyAdmissible(t).ok());
    EXPECT_EQ(IsConstantWeight(s, 3, 2).ok(), IsConstantWeight(t, 3, 2).ok());
  }
}

TEST(VerifierTest, CoordinatePermutationInvariance) {
  std::mt19937_64 rng(41);
  const std::vector<int> perm{3, 1, 0, 2};
  for (int trial = 0; trial < 100; ++trial) {
    const VectorSet s = trial % 2 ? RandomSubset(rng, 4, 0.05)
                                  : RandomAdmissible(rng, 4, 8);
    const VectorSet p = PermuteCoordinates(s, perm);
    EXPECT_EQ(IsAdmissible(s).ok(), IsAdmissible(p).ok());
    EXPECT_EQ(IsRecursivelyAdmissible(s).ok(), IsRecursivelyAdmissible(p).ok());
  }
}

TEST(IsMetaExtendableTest, Examples) {
  EXPECT_TRUE(IsMetaExtendable({{0, 1}}, {{1, 2}}, {{2, 1}}).ok());

  const Verdict v = IsMetaExtendable({{1, 2}}, {{1, 2}}, {{2, 1}});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation, Violation::kMetaWeight);

  EXPECT_THROW(IsMetaExtendable({{0, 1}}, {{1, 2, 1}}, {{2, 1}}),
               DimensionError);
}

TEST(IsMetaExtendableTest, AgreesWithNaiveCheck) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const VectorSet s0 = RandomSubset(rng, 3, 0.05);
    const VectorSet s1 = RandomSubset(rng, 3, 0.05);
    const VectorSet s2 = RandomSubset(rng, 3, 0.05);
    EXPECT_EQ(IsMetaExtendable(s0, s1, s2).ok(),
              testing::NaiveIsMetaExtendable(s0, s1, s2));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = RandomMetaTriple(rng, 3);
    EXPECT_TRUE(IsMetaExtendable(t.s0, t.s1, t.s2).ok());
  }
}

TEST(MetaExtendTest, TinyExample) {
  const MetaTriple triple = MetaTriple::Certify({{0, 1}}, {{1, 2}}, {{2, 1}});
  const MetaExtension ext = MetaExtend(BuildChain(2).elements(), triple);
  ASSERT_TRUE(ext.elements.has_value());
  EXPECT_EQ(ext.length, 4);
  EXPECT_EQ(ext.size, 2);
  EXPECT_EQ(ext.elements->elements(), (VectorSet{{0, 1, 2, 1}, {1, 2, 0, 1}}));
  EXPECT_TRUE(ext.elements->Has(PatternRole::kAdmissible));
}

TEST(MetaExtendTest, SingletonIsProduct) {
  const MetaTriple triple = MetaTriple::Certify({{0, 1}}, {{1, 2}}, {{2, 1}});
  const MetaExtension ext = MetaExtend({{1, 2, 0}}, triple);
  const PatternSet chain = ProductAdmissible(
      ProductAdmissible({{1, 2}}, {{2, 1}}).elements(), {{0, 1}});
  ASSERT_TRUE(ext.elements.has_value());
  EXPECT_EQ(ext.elements->elements(), chain.elements());
}

TEST(MetaExtendTest, TheoremScaleCountOnly) {
  MetaShape shape;
  shape.length = 11;
  shape.sizes = {BigCount(37), Binomial(11, 7), Binomial(11, 7)};
  shape.weights = {3, 7, 7};
  const VectorSet t = BuildChain(142).elements();
  const MetaExtension ext = MetaExtendCount(t, shape);
  EXPECT_EQ(ext.length, 1562);
  EXPECT_EQ(ext.weight, 990);
  const BigCount expected = BigCount(142 * 37) * Pow(Binomial(11, 7), 141);
  EXPECT_EQ(ext.size, expected);
  EXPECT_FALSE(ext.elements.has_value());
}

TEST(MetaExtendTest, ClosureAndSizeLaw) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = RandomMetaTriple(rng, 3);
    const MetaTriple triple = MetaTriple::Certify(t.s0, t.s1, t.s2);
    const VectorSet pattern = RandomAdmissible(rng, 2, 4);
    const MetaExtension ext = MetaExtend(pattern, triple);
    ASSERT_TRUE(ext.elements.has_value());
    EXPECT_EQ(BigCount(ext.elements->size()), ext.size);
    EXPECT_EQ(ext.size, MetaExtendCount(pattern, ShapeOf(triple)).size);
    EXPECT_TRUE(NaiveIsAdmissible(ext.elements->elements()));
  }
}

TEST(SearchMetaS0Test, Examples) {
  const PatternSet s0 = SearchMetaS0({{1, 2}}, {{2, 1}}, 1, 2);
  EXPECT_EQ(s0.elements(), (VectorSet{{0, 1}, {1, 0}}));
  EXPECT_THROW(SearchMetaS0({{1, 2}}, {{2, 1}}, 1, 5), NotFoundError);
}

TEST(SearchMetaS0Test, MaximumIsOptimal) {
  // Brute force over all subsets of the weight-1 pool for a small instance.
  const VectorSet s1 = BuildChain(3).elements();
  const VectorSet s2 = SwapColors(s1);
  const PatternSet best = SearchMetaS0(s1, s2, 1, 0);
  EXPECT_TRUE(IsMetaExtendable(best.elements(), s1, s2).ok());
  const auto pool = testing::VectorsOfWeight(3, 1, 1);
  std::size_t oracle = 0;
  for (int mask = 1; mask < (1 << pool.size()); ++mask) {
    std::vector<TernaryVector> pick;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1 << i)) pick.push_back(pool[i]);
    }
    const VectorSet s0(3, pick);
    if (testing::NaiveIsMetaExtendable(s0, s1, s2)) {
      oracle = std::max(oracle, s0.size());
    }
  }
  EXPECT_EQ(best.size(), oracle);
}

}  // namespace
}  // namespace capset
