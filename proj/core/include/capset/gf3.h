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

#ifndef CAPSET_GF3_H_
#define CAPSET_GF3_H_

#include <array>
#include <optional>
#include <string>

#include "capset/big_count.h"
#include "capset/vector_set.h"
#include "capset/verdict.h"

namespace capset {

// Cap-set check: passes iff no three elements, not all equal, sum to zero.
//
// Runs over unordered pairs {x, y} and looks up z = -(x + y). Pairs suffice:
// in characteristic 3, x + y + z = 0 with two of the three equal forces the
// third to be equal as well. O(|s|^2) lookups.
Verdict IsCapSet(const VectorSet& s);

// Extendability of (a0, a1, a2):
//   (1) x, y in a0 (x = y allowed), z in a1 u a2  =>  x + y + z != 0
//   (2) x in a0, y in a1, z in a2                 =>  x + y + z != 0
// Each set is cap-checked first; a failing input is reported as kNotCapSet
// with its own witness. Throws DimensionError on mismatched dimensions.
Verdict IsExtendable(const VectorSet& a0, const VectorSet& a1,
                     const VectorSet& a2);

enum class Provenance {
  // Every defining condition was checked element by element.
  kBruteForce,
  // Too large to check; valid because a lemma guarantees it from certified
  // ingredients.
  kByLemma,
};

std::string_view ProvenanceName(Provenance p);

// Three cap sets of one dimension with certified extendability. Either the
// three sets are held explicitly, or (for lemma-certified triples beyond the
// element budget) only their sizes are known.
class ExtendableTriple {
 public:
  // Brute-force certification. Throws CertificationError carrying the
  // verdict if the triple is not extendable.
  static ExtendableTriple Certify(VectorSet a0, VectorSet a1, VectorSet a2);

  // Explicit sets whose extendability follows from a lemma but was not
  // re-checked (too large for brute force, small enough to hold).
  static ExtendableTriple Trusted(VectorSet a0, VectorSet a1, VectorSet a2,
                                  std::string justification);

  static ExtendableTriple ByLemma(int dimension, BigCount a0_size,
                                  BigCount a1_size, BigCount a2_size,
                                  std::string justification);

  int dimension() const { return dimension_; }
  const BigCount& size(int i) const { return sizes_.at(i); }
  bool materialized() const { return sets_.has_value(); }
  // Throws DomainError if the triple is not materialized.
  const VectorSet& set(int i) const;
  const VectorSet& a0() const { return set(0); }
  const VectorSet& a1() const { return set(1); }
  const VectorSet& a2() const { return set(2); }
  Provenance provenance() const { return provenance_; }
  const std::string& justification() const { return justification_; }

 private:
  ExtendableTriple() = default;

  int dimension_ = 0;
  std::array<BigCount, 3> sizes_;
  std::optional<std::array<VectorSet, 3>> sets_;
  Provenance provenance_ = Provenance::kBruteForce;
  std::string justification_;
};

// A x B with concatenated vectors; dimension dim(a) + dim(b).
VectorSet DirectProduct(const VectorSet& a, const VectorSet& b,
                        const ElementBudget& budget = DefaultElementBudget());

// The m-fold direct product a^m, m >= 1. Throws BudgetExceeded naming
// |a|^m when that exceeds the budget.
VectorSet Power(const VectorSet& a, int m,
                const ElementBudget& budget = DefaultElementBudget());

}  // namespace capset

#endif  // CAPSET_GF3_H_
