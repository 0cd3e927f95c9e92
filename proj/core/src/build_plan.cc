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

#include "capset/build_plan.h"

#include <cctype>
#include <limits>
#include <sstream>
#include <string>

#include "capset/errors.h"

namespace capset {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Minimal recursive-descent reader for size expressions.
class ExpressionReader {
 public:
  explicit ExpressionReader(std::string_view text) : text_(text) {}

  BigCount Product() {
    BigCount value = Factor();
    SkipSpace();
    while (Peek() == '*') {
      ++pos_;
      value *= Factor();
      SkipSpace();
    }
    if (pos_ != text_.size()) Fail("unexpected character");
    return value;
  }

 private:
  BigCount Factor() {
    SkipSpace();
    BigCount base;
    if (Peek() == 'C') {
      ++pos_;
      Expect('(');
      const std::uint64_t a = Integer();
      Expect(',');
      const std::uint64_t b = Integer();
      Expect(')');
      base = Binomial(a, b);
    } else {
      base = BigInteger();
    }
    SkipSpace();
    if (Peek() == '^') {
      ++pos_;
      base = Pow(base, Integer());
    }
    return base;
  }

  BigCount BigInteger() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected an integer");
    return BigCount(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t Integer() {
    const BigCount v = BigInteger();
    if (v > BigCount(std::numeric_limits<std::uint32_t>::max())) {
      Fail("integer too large here");
    }
    return static_cast<std::uint64_t>(v);
  }

  void Expect(char c) {
    SkipSpace();
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("size expression \"" + std::string(text_) + "\": " +
                     what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int ParseInt(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("plan line " + std::to_string(line) + ": bad integer '" +
                     token + "'");
  }
}

BigCount ParseBig(const std::string& token, int line) {
  for (const char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("plan line " + std::to_string(line) +
                       ": bad integer '" + token + "'");
    }
  }
  if (token.empty()) throw ParseError("plan line " + std::to_string(line));
  return BigCount(token);
}

}  // namespace

std::string BuildPlan::Label() const {
  std::string out = "base(" + std::to_string(base.dimension) + "," +
                    base.a0.str() + "," + base.a1.str() + ")";
  for (const PlanStep& step : steps) {
    out += std::visit(
        Overloaded{
            [](const RecursivePlanStep& s) {
              return "+rstep(" + std::to_string(s.m) + ")";
            },
            [](const FinalExtendStep& s) {
              return "+final(" + std::to_string(s.m) + "," +
                     std::to_string(s.w) + ")";
            },
            [](const FinalMetaStep& s) {
              return "+final-meta(" + s.size_expression + "," +
                     std::to_string(s.m) + "," + std::to_string(s.w) + ")";
            }},
        step);
  }
  return out;
}

void ValidatePlan(const BuildPlan& plan) {
  if (plan.base.dimension < 1 || plan.base.a0 < 1 || plan.base.a1 < 1) {
    throw DomainError("plan base needs n, a0, a1 >= 1");
  }
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const bool last = i + 1 == plan.steps.size();
    std::visit(Overloaded{
                   [](const RecursivePlanStep& s) {
                     if (s.m < 2) throw DomainError("rstep needs m >= 2");
                   },
                   [last](const FinalExtendStep& s) {
                     if (!last) throw DomainError("final step must be last");
                     if (s.m < 1 || s.w < 0 || s.w > s.m) {
                       throw DomainError("final needs 0 <= w <= m, m >= 1");
                     }
                   },
                   [last](const FinalMetaStep& s) {
                     if (!last) throw DomainError("final step must be last");
                     if (s.m < 1 || s.w < 0 || s.w > s.m) {
                       throw DomainError("final-meta needs 0 <= w <= m");
                     }
                     if (s.size < 1) {
                       throw DomainError("final-meta size must be positive");
                     }
                   }},
               plan.steps[i]);
  }
}

BuildPlan ParsePlan(std::string_view text) {
  BuildPlan plan;
  bool have_base = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::vector<std::string> tokens;
    for (std::string t; line >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    auto need = [&](std::size_t n) {
      if (tokens.size() != n) {
        throw ParseError("plan line " + std::to_string(line_no) + ": '" +
                         kind + "' takes " + std::to_string(n - 1) +
                         " arguments");
      }
    };
    if (kind == "base") {
      need(4);
      if (have_base) throw ParseError("plan has more than one base line");
      plan.base = {ParseInt(tokens[1], line_no), ParseBig(tokens[2], line_no),
                   ParseBig(tokens[3], line_no)};
      have_base = true;
    } else if (kind == "rstep") {
      need(2);
      plan.steps.push_back(RecursivePlanStep{ParseInt(tokens[1], line_no)});
    } else if (kind == "final") {
      need(3);
      plan.steps.push_back(FinalExtendStep{ParseInt(tokens[1], line_no),
                                           ParseInt(tokens[2], line_no)});
    } else if (kind == "final-meta") {
      need(4);
      plan.steps.push_back(FinalMetaStep{EvaluateSizeExpression(tokens[1]),
                                         tokens[1], ParseInt(tokens[2], line_no),
                                         ParseInt(tokens[3], line_no)});
    } else {
      throw ParseError("plan line " + std::to_string(line_no) +
                       ": unknown directive '" + kind + "'");
    }
  }
  if (!have_base) throw ParseError("plan has no base line");
  ValidatePlan(plan);
  return plan;
}

std::string SerializePlan(const BuildPlan& plan) {
  std::string out = "base " + std::to_string(plan.base.dimension) + " " +
                    plan.base.a0.str() + " " + plan.base.a1.str() + "\n";
  for (const PlanStep& step : plan.steps) {
    out += std::visit(
        Overloaded{
            [](const RecursivePlanStep& s) {
              return "rstep " + std::to_string(s.m) + "\n";
            },
            [](const FinalExtendStep& s) {
              return "final " + std::to_string(s.m) + " " +
                     std::to_string(s.w) + "\n";
            },
            [](const FinalMetaStep& s) {
              const std::string expr =
                  s.size_expression.empty() ? s.size.str() : s.size_expression;
              return "final-meta " + expr + " " + std::to_string(s.m) + " " +
                     std::to_string(s.w) + "\n";
            }},
        step);
  }
  return out;
}

BigCount EvaluateSizeExpression(std::string_view expression) {
  return ExpressionReader(expression).Product();
}

PlanCount CountPlan(const BuildPlan& plan) {
  ValidatePlan(plan);
  std::int64_t n = plan.base.dimension;
  BigCount a0 = plan.base.a0;
  BigCount a1 = plan.base.a1;
  for (const PlanStep& step : plan.steps) {
    if (const auto* r = std::get_if<RecursivePlanStep>(&step)) {
      BigCount next_a0 = BigCount(r->m) * Pow(a1, r->m - 1) * a0;
      a1 = Pow(a1, r->m);
      a0 = std::move(next_a0);
      n *= r->m;
    } else if (const auto* f = std::get_if<FinalExtendStep>(&step)) {
      return {n * f->m,
              Binomial(f->m, f->w) * Pow(a0, f->m - f->w) * Pow(a1, f->w)};
    } else {
      const auto& meta = std::get<FinalMetaStep>(step);
      return {n * meta.m,
              meta.size * Pow(a0, meta.m - meta.w) * Pow(a1, meta.w)};
    }
  }
  return {n, a0};
}

}  // namespace capset
