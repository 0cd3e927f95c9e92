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

#include "capset/constructions.h"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "capset/errors.h"
#include "internal/membership_index.h"

namespace capset {

namespace {

// Blocks as 1-based point triples, in column order.
constexpr int kBlocks[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                                {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
                                {3, 4, 5}, {3, 4, 6}};

DesignMatrix MakeDesign() {
  DesignMatrix d{};
  for (int col = 0; col < 10; ++col) {
    for (const int point : kBlocks[col]) d[point - 1][col] = 1;
  }
  return d;
}

}  // namespace

const DesignMatrix& SixThreeTwoDesign() {
  static const DesignMatrix design = MakeDesign();
  return design;
}

bool IsPairwiseBalanced(const DesignMatrix& d, int lambda, int block_size) {
  for (std::size_t col = 0; col < d[0].size(); ++col) {
    int ones = 0;
    for (const auto& row : d) ones += row[col];
    if (ones != block_size) return false;
  }
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      int common = 0;
      for (std::size_t col = 0; col < d[a].size(); ++col) {
        common += d[a][col] & d[b][col];
      }
      if (common != lambda) return false;
    }
  }
  return true;
}

Edel6Parts BuildEdel6Parts() {
  const DesignMatrix& design = SixThreeTwoDesign();
  // Supports of D as 6-bit masks.
  std::vector<unsigned> block_masks;
  for (std::size_t col = 0; col < 10; ++col) {
    unsigned mask = 0;
    for (int row = 0; row < 6; ++row) {
      if (design[row][col]) mask |= 1u << row;
    }
    block_masks.push_back(mask);
  }
  std::vector<TernaryVector> d, d_prime, r, a0;
  TernaryVector v(6);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    unsigned support = 0;
    int ones = 0;
    for (int i = 5; i >= 0; --i) {
      v.Set(i, c % 3);
      if (c % 3) support |= 1u << i;
      if (c % 3 == 1) ++ones;
      c /= 3;
    }
    switch (v.Weight()) {
      case 1:
        a0.push_back(v);
        break;
      case 3: {
        bool in_design = false;
        for (const unsigned b : block_masks) in_design |= (b == support);
        (in_design ? d : d_prime).push_back(v);
        break;
      }
      case 6:
        if (ones % 2 == 0) r.push_back(v);
        break;
      default:
        break;
    }
  }
  return {VectorSet(6, std::move(d)), VectorSet(6, std::move(d_prime)),
          VectorSet(6, std::move(r)), VectorSet(6, std::move(a0))};
}

ExtendableTriple BuildEdel6() {
  if (!IsPairwiseBalanced(SixThreeTwoDesign())) {
    throw CertificationError("embedded (6,3,2)-design failed validation");
  }
  Edel6Parts parts = BuildEdel6Parts();
  VectorSet a1 = Union(parts.d, parts.r);
  VectorSet a2 = Union(parts.d_prime, parts.r);
  return ExtendableTriple::Certify(std::move(parts.a0), std::move(a1),
                                   std::move(a2));
}

namespace {

BigCount ProductCount(const VectorSet& s, const ExtendableTriple& triple) {
  BigCount total = 0;
  for (const TernaryVector& v : s) {
    BigCount term = 1;
    for (const auto d : v.digits()) term *= triple.size(d);
    total += term;
  }
  return total;
}

}  // namespace

ExtendedProduct ExtendProduct(const VectorSet& s, const ExtendableTriple& triple,
                              const ElementBudget& budget) {
  if (Verdict v = IsAdmissible(s); !v) {
    throw CertificationError("pattern set is not admissible: " + v.Describe());
  }
  ExtendedProduct out;
  out.dimension = triple.dimension() * s.dimension();
  out.size = ProductCount(s, triple);
  if (!triple.materialized() || !WithinBudget(out.size, budget)) return out;

  std::vector<TernaryVector> all;
  all.reserve(static_cast<std::size_t>(out.size));
  for (const TernaryVector& pattern : s) {
    VectorSet block = triple.set(pattern[0]);
    for (std::size_t i = 1; i < pattern.size(); ++i) {
      block = DirectProduct(block, triple.set(pattern[i]), budget);
    }
    all.insert(all.end(), block.begin(), block.end());
  }
  out.elements.emplace(out.dimension, std::move(all));
  return out;
}

ExtendableTriple RecursiveStep(const VectorSet& s,
                               const ExtendableTriple& triple,
                               const ElementBudget& budget) {
  if (Verdict v = IsRecursivelyAdmissible(s); !v) {
    throw CertificationError("recursive step needs a recursively admissible "
                             "set: " + v.Describe());
  }
  const int m = s.dimension();
  ExtendedProduct a0 = ExtendProduct(s, triple, budget);
  BigCount a1_size = Pow(triple.size(1), m);
  BigCount a2_size = Pow(triple.size(2), m);
  const std::string justification =
      "recursive step with a recursively admissible set of length " +
      std::to_string(m);

  if (!a0.elements || !WithinBudget(a1_size, budget) ||
      !WithinBudget(a2_size, budget)) {
    return ExtendableTriple::ByLemma(a0.dimension, std::move(a0.size),
                                     std::move(a1_size), std::move(a2_size),
                                     justification);
  }
  VectorSet a1 = Power(triple.a1(), m, budget);
  VectorSet a2 = Power(triple.a2(), m, budget);
  const BigCount limit(kCertifyLimit);
  if (a0.size <= limit && a1_size <= limit && a2_size <= limit) {
    return ExtendableTriple::Certify(std::move(*a0.elements), std::move(a1),
                                     std::move(a2));
  }
  return ExtendableTriple::Trusted(std::move(*a0.elements), std::move(a1),
                                   std::move(a2), justification);
}

namespace {

// Blockwise view of S(A0, A1, A2) and of A1^m, A2^m.
class BlockView {
 public:
  BlockView(const VectorSet& s, const ExtendableTriple& base)
      : s_(s), base_(base), n_(base.dimension()) {
    for (int k = 0; k < 3; ++k) index_[k].emplace(base.set(k));
  }

  // Bit k set iff block `b` of v lies in A_k.
  std::vector<unsigned> BlockMasks(const TernaryVector& v) const {
    std::vector<unsigned> masks(s_.dimension(), 0);
    for (int b = 0; b < s_.dimension(); ++b) {
      const TernaryVector block = Block(v, b);
      for (int k = 0; k < 3; ++k) {
        if (index_[k]->Contains(block)) masks[b] |= 1u << k;
      }
    }
    return masks;
  }

  bool InExtension(const std::vector<unsigned>& masks) const {
    for (const TernaryVector& pattern : s_) {
      bool ok = true;
      for (std::size_t b = 0; b < masks.size() && ok; ++b) {
        ok = (masks[b] >> pattern[b]) & 1u;
      }
      if (ok) return true;
    }
    return false;
  }

  static bool InPower(const std::vector<unsigned>& masks, int k) {
    for (const unsigned m : masks) {
      if (!((m >> k) & 1u)) return false;
    }
    return true;
  }

  // A random element of S(A0,A1,A2): a pattern with nonempty blocks, then
  // one element per block.
  std::optional<TernaryVector> SampleExtension(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, s_.size() - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const TernaryVector& pattern = s_[pick(rng)];
      bool nonempty = true;
      for (const auto d : pattern.digits()) nonempty &= !base_.set(d).empty();
      if (!nonempty) continue;
      return SampleBlocks(pattern.digits(), rng);
    }
    return std::nullopt;
  }

  TernaryVector SamplePower(int k, std::mt19937_64& rng) const {
    std::vector<TernaryVector::Digit> digits(s_.dimension(),
                                             static_cast<TernaryVector::Digit>(k));
    return SampleBlocks(digits, rng);
  }

 private:
  TernaryVector Block(const TernaryVector& v, int b) const {
    TernaryVector block(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) block.Set(i, v[b * n_ + i]);
    return block;
  }

  TernaryVector SampleBlocks(std::span<const TernaryVector::Digit> which,
                             std::mt19937_64& rng) const {
    TernaryVector out(which.size() * n_);
    for (std::size_t b = 0; b < which.size(); ++b) {
      const VectorSet& a = base_.set(which[b]);
      std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
      const TernaryVector& e = a[pick(rng)];
      for (int i = 0; i < n_; ++i) out.Set(b * n_ + i, e[i]);
    }
    return out;
  }

  const VectorSet& s_;
  const ExtendableTriple& base_;
  int n_;
  std::optional<internal::MembershipIndex> index_[3];
};

}  // namespace

Verdict SampledRecursiveStepCheck(const VectorSet& s,
                                  const ExtendableTriple& base, int samples,
                                  std::uint64_t seed) {
  if (s.empty()) return Verdict::Pass();
  const BlockView view(s, base);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution same(0.125);
  for (int i = 0; i < samples; ++i) {
    const auto x = view.SampleExtension(rng);
    if (!x) return Verdict::Pass();  // every pattern has an empty block
    const TernaryVector y = same(rng) ? *x : *view.SampleExtension(rng);
    TernaryVector z = ThirdPoint(*x, y);
    const auto masks = view.BlockMasks(z);
    if (*x != y && view.InExtension(masks)) {
      return Verdict::Fail(Violation::kCapTriple, {*x, y, std::move(z)});
    }
    if (BlockView::InPower(masks, 1) || BlockView::InPower(masks, 2)) {
      return Verdict::Fail(Violation::kExtendableCondition1,
                           {*x, y, std::move(z)});
    }
    if (base.a1().empty() || base.a2().empty()) continue;
    const TernaryVector w = view.SamplePower(1, rng);
    TernaryVector u = ThirdPoint(*x, w);
    if (BlockView::InPower(view.BlockMasks(u), 2)) {
      return Verdict::Fail(Violation::kExtendableCondition2,
                           {*x, w, std::move(u)});
    }
  }
  return Verdict::Pass();
}

}  // namespace capset
