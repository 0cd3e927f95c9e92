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

#ifndef CAPSET_INTERNAL_PATTERN_MASKS_H_
#define CAPSET_INTERNAL_PATTERN_MASKS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "capset/ternary_vector.h"

namespace capset::internal {

// Per-vector bitmasks of the coordinates holding 0, 1 and 2. Coordinate k
// lives in word k / 64, bit k % 64; padding bits are zero in all three masks.
class PatternMasks {
 public:
  PatternMasks(std::span<const TernaryVector> vectors, int length)
      : words_((length + 63) / 64),
        zero_(vectors.size() * words_),
        one_(vectors.size() * words_),
        two_(vectors.size() * words_) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (int k = 0; k < length; ++k) {
        const std::uint64_t bit = std::uint64_t{1} << (k % 64);
        const std::size_t w = i * words_ + k / 64;
        switch (vectors[i][k]) {
          case 0: zero_[w] |= bit; break;
          case 1: one_[w] |= bit; break;
          default: two_[w] |= bit; break;
        }
      }
    }
  }

  int words() const { return words_; }
  const std::uint64_t* zero(std::size_t i) const { return &zero_[i * words_]; }
  const std::uint64_t* one(std::size_t i) const { return &one_[i * words_]; }
  const std::uint64_t* two(std::size_t i) const { return &two_[i * words_]; }

 private:
  int words_;
  std::vector<std::uint64_t> zero_, one_, two_;
};

// Reference to one vector's masks, possibly in different tables.
struct MaskRef {
  const PatternMasks* table;
  std::size_t index;
  const std::uint64_t* z() const { return table->zero(index); }
  const std::uint64_t* o() const { return table->one(index); }
  const std::uint64_t* t() const { return table->two(index); }
};

// Pair condition of admissibility: some coordinate has x = 0 != y and some
// coordinate has x != 0 = y.
inline bool PairOk(const MaskRef& x, const MaskRef& y) {
  bool left = false, right = false;
  for (int w = 0; w < x.table->words(); ++w) {
    left |= (x.z()[w] & ~y.z()[w]) != 0;
    right |= (~x.z()[w] & y.z()[w]) != 0;
  }
  return left && right;
}

// Triple condition: some coordinate with value multiset {0,1,2}, {0,0,1} or
// {0,0,2}, i.e. exactly two zeros, or one zero and two different nonzeros.
inline bool TripleOk(const MaskRef& x, const MaskRef& y, const MaskRef& z) {
  for (int w = 0; w < x.table->words(); ++w) {
    const std::uint64_t zx = x.z()[w], zy = y.z()[w], zz = z.z()[w];
    const std::uint64_t ox = x.o()[w], oy = y.o()[w], oz = z.o()[w];
    const std::uint64_t tx = x.t()[w], ty = y.t()[w], tz = z.t()[w];
    const std::uint64_t two_zeros = (zx & zy & ~zz) | (zx & ~zy & zz) |
                                    (~zx & zy & zz);
    const std::uint64_t rainbow = (zx & ((oy & tz) | (ty & oz))) |
                                  (zy & ((ox & tz) | (tx & oz))) |
                                  (zz & ((ox & ty) | (tx & oy)));
    if (two_zeros | rainbow) return true;
  }
  return false;
}

// Triple condition with the (x, y) part hoisted out of the inner loop over z.
// For a fixed pair the condition at coordinate k reads
//   (zz_xy & ~z_k) | (mixed_xy & z_k) | (pair_one_xy & o_k) | (pair_two_xy & t_k)
// where zz_xy marks common zeros, mixed_xy marks exactly one zero or two
// different nonzeros, pair_one_xy marks {0,2} (completed by a 1) and
// pair_two_xy marks {0,1} (completed by a 2).
class PairMasks {
 public:
  explicit PairMasks(int words)
      : zz_(words), mixed_(words), need_one_(words), need_two_(words) {}

  void Load(const MaskRef& x, const MaskRef& y) {
    for (std::size_t w = 0; w < zz_.size(); ++w) {
      const std::uint64_t zx = x.z()[w], zy = y.z()[w];
      const std::uint64_t ox = x.o()[w], oy = y.o()[w];
      const std::uint64_t tx = x.t()[w], ty = y.t()[w];
      zz_[w] = zx & zy;
      mixed_[w] = (zx ^ zy) | (ox & ty) | (tx & oy);
      need_one_[w] = (zx & ty) | (tx & zy);
      need_two_[w] = (zx & oy) | (ox & zy);
    }
  }

  bool TripleOkWith(const MaskRef& z) const {
    for (std::size_t w = 0; w < zz_.size(); ++w) {
      const std::uint64_t zk = z.z()[w];
      if ((zz_[w] & ~zk) | (mixed_[w] & zk) | (need_one_[w] & z.o()[w]) |
          (need_two_[w] & z.t()[w])) {
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> zz_, mixed_, need_one_, need_two_;
};

}  // namespace capset::internal

#endif  // CAPSET_INTERNAL_PATTERN_MASKS_H_
