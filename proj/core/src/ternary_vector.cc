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

#include "capset/ternary_vector.h"

#include <algorithm>
#include <string>
#include <utility>

#include "capset/errors.h"

namespace capset {

TernaryVector::TernaryVector(std::vector<Digit> digits)
    : digits_(std::move(digits)) {
  for (const Digit d : digits_) {
    if (d > 2) {
      throw DomainError("digit " + std::to_string(d) + " is not in {0,1,2}");
    }
  }
}

TernaryVector::TernaryVector(std::initializer_list<int> digits) {
  digits_.reserve(digits.size());
  for (const int d : digits) {
    if (d < 0 || d > 2) {
      throw DomainError("digit " + std::to_string(d) + " is not in {0,1,2}");
    }
    digits_.push_back(static_cast<Digit>(d));
  }
}

TernaryVector TernaryVector::Parse(std::string_view text) {
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (const char c : text) {
    if (c < '0' || c > '2') {
      throw ParseError("invalid character '" + std::string(1, c) +
                       "' in vector \"" + std::string(text) + "\"");
    }
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  if (digits.empty()) throw ParseError("empty vector");
  return TernaryVector(std::move(digits));
}

void TernaryVector::Set(std::size_t i, int digit) {
  if (digit < 0 || digit > 2) {
    throw DomainError("digit " + std::to_string(digit) + " is not in {0,1,2}");
  }
  digits_.at(i) = static_cast<Digit>(digit);
}

int TernaryVector::Weight() const {
  return static_cast<int>(
      std::count_if(digits_.begin(), digits_.end(), [](Digit d) { return d; }));
}

std::vector<int> TernaryVector::Support() const {
  std::vector<int> support;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) support.push_back(static_cast<int>(i));
  }
  return support;
}

std::string TernaryVector::ToString() const {
  std::string s(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    s[i] = static_cast<char>('0' + digits_[i]);
  }
  return s;
}

namespace {

void CheckSameLength(const TernaryVector& x, const TernaryVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("length mismatch: " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
  }
}

constexpr TernaryVector::Digit kNeg[3] = {0, 2, 1};
constexpr TernaryVector::Digit kSum[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

}  // namespace

TernaryVector AddMod3(const TernaryVector& x, const TernaryVector& y) {
  CheckSameLength(x, y);
  std::vector<TernaryVector::Digit> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = kSum[x[i]][y[i]];
  return TernaryVector(std::move(out));
}

TernaryVector Negate(const TernaryVector& x) {
  std::vector<TernaryVector::Digit> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = kNeg[x[i]];
  return TernaryVector(std::move(out));
}

TernaryVector ThirdPoint(const TernaryVector& x, const TernaryVector& y) {
  CheckSameLength(x, y);
  std::vector<TernaryVector::Digit> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = kNeg[kSum[x[i]][y[i]]];
  return TernaryVector(std::move(out));
}

TernaryVector Concat(const TernaryVector& x, const TernaryVector& y) {
  std::vector<TernaryVector::Digit> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.digits().begin(), x.digits().end());
  out.insert(out.end(), y.digits().begin(), y.digits().end());
  return TernaryVector(std::move(out));
}

}  // namespace capset
