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

#include "capset/big_count.h"

#include <cmath>
#include <limits>

#include <gmp.h>

#include "capset/errors.h"

namespace capset {

BigCount Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

BigCount Pow(const BigCount& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    throw DomainError("exponent too large");
  }
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::size_t DecimalDigitCount(const BigCount& value) {
  if (value == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t digits = mpz_sizeinbase(value.backend().data(), 10);
  BigCount threshold = Pow(BigCount(10), digits - 1);
  if (abs(value) < threshold) --digits;
  return digits;
}

double NaturalLog(const BigCount& value) {
  if (value <= 0) throw DomainError("logarithm of a non-positive count");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.backend().data());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace capset
