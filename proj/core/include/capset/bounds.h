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

#ifndef CAPSET_BOUNDS_H_
#define CAPSET_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capset/big_count.h"
#include "capset/build_plan.h"

namespace capset {

inline constexpr int kDefaultDigits = 10;

// size^(1/n) to `digits` significant digits, truncated (not rounded), e.g.
// "2.217981825". Computed with a correctly rounded MPFR root at a working
// precision of digits + 20 decimal digits. Throws DomainError for size = 0,
// n < 1 or digits < 1.
std::string NthRootBound(const BigCount& size, std::int64_t n,
                         int digits = kDefaultDigits);

// An asymptotic lower-bound constant c = size^(1/n) for a cap set of the
// given exact size in F_3^n.
struct BoundReport {
  std::int64_t dimension = 0;
  BigCount size;
  std::string bound;
  int digits = kDefaultDigits;
  std::string provenance;

  double value() const { return std::stod(bound); }
};

BoundReport BoundForSize(const BigCount& size, std::int64_t n,
                         std::string provenance, int digits = kDefaultDigits);
BoundReport BoundForPlan(const BuildPlan& plan, int digits = kDefaultDigits);

struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  std::string ToString() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
  }
};

// Best constant reachable from a base collection (|A0| = a0, |A1| = |A2| =
// a1 in F_3^n) with I(m, alpha m) sets for large m:
// alpha = a1 / (a0 + a1) in lowest terms, limit = (a0 + a1)^(1/n).
struct LimitReport {
  Rational alpha;
  std::string limit;
};

LimitReport AsymptoticLimit(std::int64_t n, std::int64_t a0, std::int64_t a1,
                            int digits = kDefaultDigits);

// f(x) = x ln(a1/a0) - x ln x - (1-x) ln(1-x), the log-size per block of
// I(m, x m) up to constants, and its derivative. Domain 0 < x < 1.
double LimitObjective(double x, double a0, double a1);
double LimitObjectiveDerivative(double x, double a0, double a1);

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x). Throws DomainError
// unless 0 < x < 1.
double Entropy(double x);

// Padding a cap set A in F_3^n (c = |A|^(1/n)) to dimension m = n k + r,
// 0 <= r < n, by k-fold products: the bound is c^(1 - r/m).
double PaddedBound(double c, std::int64_t n, std::int64_t m);
// The same quantity computed exactly as (|A|^k)^(1/m).
std::string PaddedProductBound(const BigCount& size, std::int64_t n,
                               std::int64_t m, int digits = kDefaultDigits);

// One row of the published bound tables, recomputed from its construction.
struct TableRow {
  std::string table;         // "summary" or "limits"
  std::string construction;  // human-readable
  std::string label;         // plan label or formula
  BoundReport report;
  std::string expected;      // printed leading digits
  // Comparison: relative tolerance on the value, or (when
  // `decimals` is set) truncation to that many decimals must equal
  // `expected`.
  double relative_tolerance = 1e-6;
  std::optional<int> decimals;

  bool Matches() const;
};

// Every row of the summary table and the limits table.
std::vector<TableRow> ReproduceTables(int digits = kDefaultDigits);

// The plans used by the tables, exposed for tests and the CLI.
BuildPlan EdelBasePlan();  // base 6 12 112
BuildPlan TwoStagePlan(int recursive_m, int final_m, int final_w);
BuildPlan SingleStagePlan(int final_m, int final_w);
BuildPlan MetaTheoremPlan();  // I~(6,5) then T' of length 1562, weight 990

}  // namespace capset

#endif  // CAPSET_BOUNDS_H_
