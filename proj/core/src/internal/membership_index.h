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

#ifndef CAPSET_INTERNAL_MEMBERSHIP_INDEX_H_
#define CAPSET_INTERNAL_MEMBERSHIP_INDEX_H_

#include <cstdint>
#include <unordered_set>

#include "capset/ternary_vector.h"
#include "capset/vector_set.h"

namespace capset::internal {

// Hash index over the elements of a VectorSet. Vectors of length <= 40 are
// packed base 3 into one 64-bit key; longer ones are hashed digit-wise.
class MembershipIndex {
 public:
  explicit MembershipIndex(const VectorSet& s)
      : packed_(s.dimension() <= kMaxPackedLength) {
    if (packed_) {
      keys_.reserve(s.size());
      for (const TernaryVector& v : s) keys_.insert(Pack(v));
    } else {
      vectors_.reserve(s.size());
      for (const TernaryVector& v : s) vectors_.insert(v);
    }
  }

  bool Contains(const TernaryVector& v) const {
    return packed_ ? keys_.contains(Pack(v)) : vectors_.contains(v);
  }

 private:
  static constexpr int kMaxPackedLength = 40;  // 3^40 < 2^64

  static std::uint64_t Pack(const TernaryVector& v) {
    std::uint64_t key = 0;
    for (const auto d : v.digits()) key = key * 3 + d;
    return key;
  }

  bool packed_;
  std::unordered_set<std::uint64_t> keys_;
  std::unordered_set<TernaryVector, TernaryVectorHash> vectors_;
};

}  // namespace capset::internal

#endif  // CAPSET_INTERNAL_MEMBERSHIP_INDEX_H_
