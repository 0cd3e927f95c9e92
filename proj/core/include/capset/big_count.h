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

#ifndef CAPSET_BIG_COUNT_H_
#define CAPSET_BIG_COUNT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace capset {

// Exact nonnegative cardinalities. Theorem-scale sizes have tens of thousands
// of decimal digits, so no floating point ever touches a count.
using BigCount = boost::multiprecision::mpz_int;

// C(n, k) by the exact multiplicative recurrence c <- c * (n - k + i) / i,
// where every intermediate quotient is an integer. Zero when k > n.
BigCount Binomial(std::uint64_t n, std::uint64_t k);

BigCount Pow(const BigCount& base, std::uint64_t exponent);

// Number of decimal digits of a positive count (1 for zero).
std::size_t DecimalDigitCount(const BigCount& value);

// Natural logarithm of a positive count, accurate to double precision even
// when the count is far beyond the double range.
double NaturalLog(const BigCount& value);

}  // namespace capset

#endif  // CAPSET_BIG_COUNT_H_
