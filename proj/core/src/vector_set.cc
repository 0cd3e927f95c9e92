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

#include "capset/vector_set.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "capset/errors.h"

namespace capset {

VectorSet::VectorSet(int dimension) : dimension_(dimension) {
  if (dimension < 0) throw DomainError("negative dimension");
}

VectorSet::VectorSet(int dimension, std::vector<TernaryVector> elements)
    : dimension_(dimension), elements_(std::move(elements)) {
  if (dimension < 0) throw DomainError("negative dimension");
  for (const TernaryVector& v : elements_) {
    if (static_cast<int>(v.size()) != dimension_) {
      throw DimensionError("element " + v.ToString() + " has length " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(dimension_));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

VectorSet::VectorSet(std::initializer_list<TernaryVector> elements)
    : VectorSet(elements.size() == 0
                    ? 0
                    : static_cast<int>(elements.begin()->size()),
                std::vector<TernaryVector>(elements)) {}

bool VectorSet::Contains(const TernaryVector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

VectorSet Union(const VectorSet& a, const VectorSet& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("union of sets of different dimension");
  }
  std::vector<TernaryVector> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VectorSet(a.dimension(), std::move(out));
}

VectorSet Intersection(const VectorSet& a, const VectorSet& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("intersection of sets of different dimension");
  }
  std::vector<TernaryVector> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VectorSet(a.dimension(), std::move(out));
}

VectorSet PermuteCoordinates(const VectorSet& s, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != s.dimension()) {
    throw DimensionError("permutation length differs from set dimension");
  }
  std::vector<TernaryVector> out;
  out.reserve(s.size());
  for (const TernaryVector& v : s) {
    TernaryVector w(v.size());
    for (std::size_t i = 0; i < perm.size(); ++i) w.Set(i, v[perm[i]]);
    out.push_back(std::move(w));
  }
  return VectorSet(s.dimension(), std::move(out));
}

ElementBudget DefaultElementBudget() {
  ElementBudget budget;
  if (const char* env = std::getenv("CAPSET_ELEMENT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') budget.max_elements = value;
  }
  return budget;
}

void CheckBudget(const BigCount& count, const ElementBudget& budget,
                 std::string_view what) {
  if (!WithinBudget(count, budget)) {
    const std::string n = count.str();
    throw BudgetExceeded(std::string(what) + " would materialize " + n +
                             " elements, over the budget of " +
                             std::to_string(budget.max_elements),
                         n);
  }
}

}  // namespace capset
