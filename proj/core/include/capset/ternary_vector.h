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

#ifndef CAPSET_TERNARY_VECTOR_H_
#define CAPSET_TERNARY_VECTOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capset {

// A fixed-length word over {0,1,2}. Serves both as an element of F_3^n and
// as a pattern vector in {0,1,2}^m. Coordinates are 0-based in the API;
// files and human-readable output use the plain digit string.
//
// Ordering is lexicographic on the digit sequence, which makes set iteration
// and serialized output deterministic.
class TernaryVector {
 public:
  using Digit = std::uint8_t;

  TernaryVector() = default;
  // The all-zero vector of the given length.
  explicit TernaryVector(std::size_t length) : digits_(length, 0) {}
  // Throws DomainError if any digit is outside {0,1,2}.
  explicit TernaryVector(std::vector<Digit> digits);
  TernaryVector(std::initializer_list<int> digits);

  // Parses a string of '0', '1', '2' characters. Throws ParseError.
  static TernaryVector Parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }

  // Throws DomainError for digits outside {0,1,2}.
  void Set(std::size_t i, int digit);

  int Weight() const;
  // Indices of the nonzero digits, increasing.
  std::vector<int> Support() const;
  bool IsZero() const { return Weight() == 0; }

  std::string ToString() const;

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;
  friend std::strong_ordering operator<=>(const TernaryVector& a,
                                          const TernaryVector& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<Digit> digits_;
};

struct TernaryVectorHash {
  std::size_t operator()(const TernaryVector& v) const {
    const auto d = v.digits();
    return std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(d.data()), d.size()));
  }
};

// Componentwise addition in F_3. Throws DimensionError on length mismatch.
TernaryVector AddMod3(const TernaryVector& x, const TernaryVector& y);
// The additive inverse -x (swaps 1 and 2).
TernaryVector Negate(const TernaryVector& x);
// -(x + y), the unique z with x + y + z = 0.
TernaryVector ThirdPoint(const TernaryVector& x, const TernaryVector& y);
// Block concatenation (x, y).
TernaryVector Concat(const TernaryVector& x, const TernaryVector& y);
// Replaces every 1 by 2 and every 2 by 1; equal to Negate over F_3.
inline TernaryVector SwapColors(const TernaryVector& x) { return Negate(x); }

}  // namespace capset

#endif  // CAPSET_TERNARY_VECTOR_H_
