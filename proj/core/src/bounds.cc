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

#include "capset/bounds.h"

#include <cmath>
#include <numeric>
#include <string>

#include <mpfr.h>

#include "capset/errors.h"

namespace capset {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

// Decimal rendering of `digits` significant digits of x, truncated.
std::string TruncatedDecimal(mpfr_ptr x, int digits) {
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10,
                           static_cast<std::size_t>(digits) + 10, x, MPFR_RNDZ);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  mantissa.resize(static_cast<std::size_t>(digits));
  const long e = static_cast<long>(exponent);
  if (e <= 0) return "0." + std::string(static_cast<std::size_t>(-e), '0') + mantissa;
  if (e >= digits) return mantissa + std::string(static_cast<std::size_t>(e - digits), '0');
  return mantissa.substr(0, e) + "." + mantissa.substr(e);
}

mpfr_prec_t WorkingPrecision(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + 20) * 3.3219280948873623)) + 8;
}

}  // namespace

std::string NthRootBound(const BigCount& size, std::int64_t n, int digits) {
  if (size <= 0) throw DomainError("bound of an empty cap set");
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (digits < 1) throw DomainError("digits must be >= 1");
  const mpfr_prec_t precision = WorkingPrecision(digits);
  MpfrValue x(precision), root(precision);
  mpfr_set_z(x.get(), size.backend().data(), MPFR_RNDN);
  mpfr_rootn_ui(root.get(), x.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return TruncatedDecimal(root.get(), digits);
}

BoundReport BoundForSize(const BigCount& size, std::int64_t n,
                         std::string provenance, int digits) {
  BoundReport r;
  r.dimension = n;
  r.size = size;
  r.bound = NthRootBound(size, n, digits);
  r.digits = digits;
  r.provenance = std::move(provenance);
  return r;
}

BoundReport BoundForPlan(const BuildPlan& plan, int digits) {
  PlanCount count = CountPlan(plan);
  return BoundForSize(count.size, count.dimension, plan.Label(), digits);
}

LimitReport AsymptoticLimit(std::int64_t n, std::int64_t a0, std::int64_t a1,
                            int digits) {
  if (a0 < 1 || a1 < 1) throw DomainError("limit needs a0, a1 >= 1");
  const std::int64_t total = a0 + a1;
  const std::int64_t g = std::gcd(a1, total);
  return {{a1 / g, total / g}, NthRootBound(BigCount(total), n, digits)};
}

double LimitObjective(double x, double a0, double a1) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("objective needs 0 < x < 1");
  return x * std::log(a1 / a0) - x * std::log(x) -
         (1.0 - x) * std::log(1.0 - x);
}

double LimitObjectiveDerivative(double x, double a0, double a1) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("objective needs 0 < x < 1");
  return std::log(a1 / a0) + std::log(1.0 - x) - std::log(x);
}

double Entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("entropy needs 0 < x < 1");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double PaddedBound(double c, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < n) throw DomainError("padding needs 1 <= n <= m");
  const std::int64_t r = m % n;
  return std::pow(c, 1.0 - static_cast<double>(r) / static_cast<double>(m));
}

std::string PaddedProductBound(const BigCount& size, std::int64_t n,
                               std::int64_t m, int digits) {
  if (n < 1 || m < n) throw DomainError("padding needs 1 <= n <= m");
  return NthRootBound(Pow(size, static_cast<std::uint64_t>(m / n)), m, digits);
}

bool TableRow::Matches() const {
  if (decimals) {
    const std::size_t point = report.bound.find('.');
    if (point == std::string::npos) return report.bound == expected;
    return report.bound.substr(0, point + 1 + *decimals) == expected;
  }
  const double want = std::stod(expected);
  return std::abs(report.value() - want) <= relative_tolerance * want;
}

BuildPlan EdelBasePlan() {
  BuildPlan plan;
  plan.base = {6, 12, 112};
  return plan;
}

BuildPlan TwoStagePlan(int recursive_m, int final_m, int final_w) {
  BuildPlan plan = EdelBasePlan();
  plan.steps.push_back(RecursivePlanStep{recursive_m});
  plan.steps.push_back(FinalExtendStep{final_m, final_w});
  return plan;
}

BuildPlan SingleStagePlan(int final_m, int final_w) {
  BuildPlan plan = EdelBasePlan();
  plan.steps.push_back(FinalExtendStep{final_m, final_w});
  return plan;
}

BuildPlan MetaTheoremPlan() {
  BuildPlan plan = EdelBasePlan();
  plan.steps.push_back(RecursivePlanStep{6});
  const std::string expr = "142*37*C(11,7)^141";
  plan.steps.push_back(FinalMetaStep{EvaluateSizeExpression(expr), expr, 1562, 990});
  return plan;
}

std::vector<TableRow> ReproduceTables(int digits) {
  std::vector<TableRow> rows;
  auto single = [&](int size, int n, std::string what, std::string expected) {
    TableRow row;
    row.table = "summary";
    row.construction = std::move(what);
    row.label = "cap(" + std::to_string(size) + "," + std::to_string(n) + ")";
    row.report = BoundForSize(size, n, row.label, digits);
    row.expected = std::move(expected);
    rows.push_back(std::move(row));
  };
  auto planned = [&](std::string table, const BuildPlan& plan, std::string what,
                     std::string expected, std::optional<int> decimals) {
    TableRow row;
    row.table = std::move(table);
    row.construction = std::move(what);
    row.label = plan.Label();
    row.report = BoundForPlan(plan, digits);
    row.expected = std::move(expected);
    row.decimals = decimals;
    rows.push_back(std::move(row));
  };

  single(2, 1, "{0,1}^n", "2");
  single(20, 4, "maximal cap of size 20 in F_3^4", "2.114742");
  single(45, 5, "maximal cap of size 45 in F_3^5", "2.141127");
  single(112, 6, "maximal cap of size 112 in F_3^6", "2.195514");
  planned("summary", TwoStagePlan(25, 90, 89), "I~(25,24) and I(90,89)",
          "2.210147", std::nullopt);
  planned("summary", TwoStagePlan(8, 10, 5), "I~(8,7) and I(10,5)", "2.217389",
          std::nullopt);
  planned("summary", TwoStagePlan(7, 10, 6), "I~(7,6) and I(10,6)",
          "2.2175608", std::nullopt);
  planned("summary", TwoStagePlan(7, 11, 6), "I~(7,6) and I(11,6)", "2.217950",
          std::nullopt);
  planned("summary", TwoStagePlan(6, 11, 7), "I~(6,5) and I(11,7)", "2.217981",
          std::nullopt);
  planned("summary", MetaTheoremPlan(), "meta-extendable collection",
          "2.218021", std::nullopt);

  planned("limits", TwoStagePlan(5, 17, 11), "I~(5,4) and I(17,11)", "2.220", 3);
  planned("limits", TwoStagePlan(3, 54, 41), "I~(3,2) and I(54,41)", "2.225", 3);
  planned("limits", SingleStagePlan(311, 281), "I(311,281)", "2.230", 3);
  planned("limits", SingleStagePlan(22948, 20727), "I(22948,20727)", "2.233", 3);
  {
    const LimitReport limit = AsymptoticLimit(6, 12, 112, digits);
    TableRow row;
    row.table = "limits";
    row.construction = "I(m, 28m/31) for large m";
    row.label = "limit(6,12,112)";
    row.report.dimension = 6;
    row.report.size = 124;
    row.report.bound = limit.limit;
    row.report.digits = digits;
    row.report.provenance = "alpha=" + limit.alpha.ToString();
    row.expected = "2.233076";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace capset
