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

#include "capset/gf3.h"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>

#include "capset/errors.h"
#include "internal/membership_index.h"

namespace capset {

Verdict IsCapSet(const VectorSet& s) {
  const internal::MembershipIndex index(s);
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      TernaryVector z = ThirdPoint(elems[i], elems[j]);
      if (index.Contains(z)) {
        return Verdict::Fail(Violation::kCapTriple,
                             {elems[i], elems[j], std::move(z)});
      }
    }
  }
  return Verdict::Pass();
}

Verdict IsExtendable(const VectorSet& a0, const VectorSet& a1,
                     const VectorSet& a2) {
  if (a0.dimension() != a1.dimension() || a0.dimension() != a2.dimension()) {
    throw DimensionError("extendable triple with dimensions " +
                         std::to_string(a0.dimension()) + ", " +
                         std::to_string(a1.dimension()) + ", " +
                         std::to_string(a2.dimension()));
  }
  const VectorSet* sets[3] = {&a0, &a1, &a2};
  for (int k = 0; k < 3; ++k) {
    Verdict v = IsCapSet(*sets[k]);
    if (!v) {
      return Verdict::Fail(Violation::kNotCapSet, std::move(v.witness),
                           "A" + std::to_string(k) + " is not a cap set");
    }
  }
  const internal::MembershipIndex in1(a1);
  const internal::MembershipIndex in2(a2);
  const auto e0 = a0.elements();
  for (std::size_t i = 0; i < e0.size(); ++i) {
    for (std::size_t j = i; j < e0.size(); ++j) {
      TernaryVector z = ThirdPoint(e0[i], e0[j]);
      const bool hit1 = in1.Contains(z);
      if (hit1 || in2.Contains(z)) {
        return Verdict::Fail(Violation::kExtendableCondition1,
                             {e0[i], e0[j], std::move(z)},
                             hit1 ? "z in A1" : "z in A2");
      }
    }
  }
  for (const TernaryVector& x : a0) {
    for (const TernaryVector& y : a1) {
      TernaryVector z = ThirdPoint(x, y);
      if (in2.Contains(z)) {
        return Verdict::Fail(Violation::kExtendableCondition2,
                             {x, y, std::move(z)});
      }
    }
  }
  return Verdict::Pass();
}

std::string_view ProvenanceName(Provenance p) {
  return p == Provenance::kBruteForce ? "brute-force" : "by-lemma";
}

ExtendableTriple ExtendableTriple::Certify(VectorSet a0, VectorSet a1,
                                           VectorSet a2) {
  const Verdict v = IsExtendable(a0, a1, a2);
  if (!v) throw CertificationError("triple is not extendable: " + v.Describe());
  ExtendableTriple t;
  t.dimension_ = a0.dimension();
  t.sizes_ = {BigCount(a0.size()), BigCount(a1.size()), BigCount(a2.size())};
  t.sets_.emplace(std::array<VectorSet, 3>{std::move(a0), std::move(a1),
                                           std::move(a2)});
  t.provenance_ = Provenance::kBruteForce;
  t.justification_ = "all extendability conditions checked";
  return t;
}

ExtendableTriple ExtendableTriple::Trusted(VectorSet a0, VectorSet a1,
                                           VectorSet a2,
                                           std::string justification) {
  if (a0.dimension() != a1.dimension() || a0.dimension() != a2.dimension()) {
    throw DimensionError("extendable triple with mismatched dimensions");
  }
  ExtendableTriple t;
  t.dimension_ = a0.dimension();
  t.sizes_ = {BigCount(a0.size()), BigCount(a1.size()), BigCount(a2.size())};
  t.sets_.emplace(std::array<VectorSet, 3>{std::move(a0), std::move(a1),
                                           std::move(a2)});
  t.provenance_ = Provenance::kByLemma;
  t.justification_ = std::move(justification);
  return t;
}

ExtendableTriple ExtendableTriple::ByLemma(int dimension, BigCount a0_size,
                                           BigCount a1_size, BigCount a2_size,
                                           std::string justification) {
  ExtendableTriple t;
  t.dimension_ = dimension;
  t.sizes_ = {std::move(a0_size), std::move(a1_size), std::move(a2_size)};
  t.provenance_ = Provenance::kByLemma;
  t.justification_ = std::move(justification);
  return t;
}

const VectorSet& ExtendableTriple::set(int i) const {
  if (!sets_) {
    throw DomainError("extendable triple of dimension " +
                      std::to_string(dimension_) + " is not materialized");
  }
  return sets_->at(i);
}

VectorSet DirectProduct(const VectorSet& a, const VectorSet& b,
                        const ElementBudget& budget) {
  CheckBudget(BigCount(a.size()) * b.size(), budget, "direct product");
  std::vector<TernaryVector> out;
  out.reserve(a.size() * b.size());
  for (const TernaryVector& x : a) {
    for (const TernaryVector& y : b) out.push_back(Concat(x, y));
  }
  // Lexicographic order of (x, y) pairs is already the order of the
  // concatenations, so the constructor's sort is a no-op pass.
  return VectorSet(a.dimension() + b.dimension(), std::move(out));
}

VectorSet Power(const VectorSet& a, int m, const ElementBudget& budget) {
  if (m < 1) throw DomainError("power exponent must be >= 1");
  CheckBudget(Pow(BigCount(a.size()), m), budget,
              "power of a " + std::to_string(a.size()) + "-element set");
  VectorSet result = a;
  for (int i = 1; i < m; ++i) result = DirectProduct(result, a, budget);
  return result;
}

}  // namespace capset
