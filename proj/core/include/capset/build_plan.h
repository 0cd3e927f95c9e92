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

#ifndef CAPSET_BUILD_PLAN_H_
#define CAPSET_BUILD_PLAN_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "capset/big_count.h"

namespace capset {

// Symbolic description of a chain of constructions, so that sizes at
// theorem scale can be computed without materializing anything.
//
// Plan file syntax, one directive per line ('#' comments allowed):
//   base <n> <a0> <a1>             extendable triple in F_3^n, |A1| = |A2|
//   rstep <m>                      recursive step with I~(m, m-1)
//   final <m> <w>                  extend by an I(m, w)
//   final-meta <size-expr> <m> <w> extend by an admissible set of that many
//                                  weight-w vectors of length m
// size-expr is a decimal integer or a '*'-separated product of factors
// `k`, `k^e`, `C(a,b)` and `C(a,b)^e`.
struct PlanBase {
  std::int64_t dimension = 0;
  BigCount a0;
  BigCount a1;
};

struct RecursivePlanStep {
  int m = 0;
};

struct FinalExtendStep {
  int m = 0;
  int w = 0;
};

struct FinalMetaStep {
  BigCount size;
  std::string size_expression;
  int m = 0;
  int w = 0;
};

using PlanStep = std::variant<RecursivePlanStep, FinalExtendStep, FinalMetaStep>;

struct BuildPlan {
  PlanBase base;
  std::vector<PlanStep> steps;

  // Compact one-line label, e.g. "base(6,12,112)+rstep(6)+final(11,7)".
  std::string Label() const;
};

// Throws DomainError: nonpositive base values, rstep m < 2, final with
// w outside [0, m], more than one final step, or a final step not last.
void ValidatePlan(const BuildPlan& plan);

// Throws ParseError on syntax errors; the result is validated.
BuildPlan ParsePlan(std::string_view text);
std::string SerializePlan(const BuildPlan& plan);

BigCount EvaluateSizeExpression(std::string_view expression);

struct PlanCount {
  std::int64_t dimension = 0;
  BigCount size;
};

// Exact dimension and cardinality of the cap set a plan denotes, tracking
// (n, |A0|, |A1|):
//   rstep m:        (n, a0, a1) -> (n m, m a1^(m-1) a0, a1^m)
//   final m w:      size C(m,w) a0^(m-w) a1^w at dimension n m
//   final-meta:     size |T| a0^(m-w) a1^w at dimension n m
// Without a final step the plan denotes the current A0.
PlanCount CountPlan(const BuildPlan& plan);

}  // namespace capset

#endif  // CAPSET_BUILD_PLAN_H_
