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

#ifndef CAPSET_VECTOR_SET_H_
#define CAPSET_VECTOR_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "capset/big_count.h"
#include "capset/ternary_vector.h"

namespace capset {

// A finite set of TernaryVectors of one common dimension. Elements are kept
// sorted lexicographically and unique, so iteration order is canonical.
class VectorSet {
 public:
  using const_iterator = std::vector<TernaryVector>::const_iterator;

  VectorSet() = default;
  explicit VectorSet(int dimension);
  // Sorts and removes duplicates. Throws DimensionError if any element has a
  // length other than `dimension`.
  VectorSet(int dimension, std::vector<TernaryVector> elements);
  // Dimension is taken from the first element; the list must be nonempty.
  VectorSet(std::initializer_list<TernaryVector> elements);

  int dimension() const { return dimension_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  const TernaryVector& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const TernaryVector> elements() const { return elements_; }

  bool Contains(const TernaryVector& v) const;

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  int dimension_ = 0;
  std::vector<TernaryVector> elements_;
};

VectorSet Union(const VectorSet& a, const VectorSet& b);
VectorSet Intersection(const VectorSet& a, const VectorSet& b);

// Applies coordinate permutation `perm` (new coordinate i takes old
// coordinate perm[i]) to every element.
VectorSet PermuteCoordinates(const VectorSet& s, std::span<const int> perm);

// Upper limit on the number of elements any materializing operation may
// produce. Exceeding it is an error (or a switch to count-only results),
// never a silent truncation.
struct ElementBudget {
  static constexpr std::uint64_t kDefault = 1'000'000;
  std::uint64_t max_elements = kDefault;
};

// kDefault, overridden by the CAPSET_ELEMENT_BUDGET environment variable.
ElementBudget DefaultElementBudget();

inline bool WithinBudget(const BigCount& count, const ElementBudget& budget) {
  return count <= BigCount(budget.max_elements);
}

// Throws BudgetExceeded naming `what` and the exact count.
void CheckBudget(const BigCount& count, const ElementBudget& budget,
                 std::string_view what);

}  // namespace capset

#endif  // CAPSET_VECTOR_SET_H_
