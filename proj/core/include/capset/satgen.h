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


#ifndef CAPSET_SATGEN_H_
#define CAPSET_SATGEN_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "capset/patterns.h"
#include "capset/vector_set.h"

namespace capset {

// Symmetry-breaking rule sets used to find I(11,7), I(11,6) and I(10,6).
enum class ConstraintProfile { kNone, kI11_7, kI11_6, kI10_6 };

std::string_view ProfileName(ConstraintProfile profile);
// Accepts "none", "i11_7", "i11_6", "i10_6". Throws ParseError.
ConstraintProfile ParseProfile(std::string_view name);
// Throws DomainError if a rule of `profile` needs more support positions or
// coordinates than (m, w) provides.
void CheckProfileCompatible(ConstraintProfile profile, int m, int w);

// Variable layout for the I(m, w) existence instance. Supports are the
// w-subsets of {0..m-1} in lexicographic order. Cell variable (i, k) is
// true when the vector on support i has digit 2 at coordinate k (false
// means 1); ids 1 .. w C(m,w), by support then coordinate. Pair variable
// (i, j, k) for i < j and k in both supports is true when the two vectors
// agree at k; ids follow the cells, ordered by (i, j, k).
class VarMap {
 public:
  // Requires 1 <= w <= m <= 64 and a variable count that fits a DIMACS id.
  VarMap(int m, int w);

  int m() const { return m_; }
  int w() const { return w_; }
  std::size_t support_count() const { return supports_.size(); }
  const std::vector<int>& support(std::size_t i) const { return supports_[i]; }
  std::uint64_t support_mask(std::size_t i) const { return masks_[i]; }

  int CellVarAt(std::size_t i, int position) const {
    return static_cast<int>(i) * w_ + position + 1;
  }
  // Throws DomainError if `coordinate` is not in support i.
  int CellVar(std::size_t i, int coordinate) const;
  // Order of i and j is irrelevant. Throws DomainError unless i != j and
  // `coordinate` is in both supports.
  int PairVar(std::size_t i, std::size_t j, int coordinate) const;

  int cell_var_count() const { return static_cast<int>(supports_.size()) * w_; }
  int pair_var_count() const { return num_vars_ - cell_var_count(); }
  int num_vars() const { return num_vars_; }

 private:
  std::size_t PairIndex(std::size_t i, std::size_t j) const;

  int m_;
  int w_;
  std::vector<std::vector<int>> supports_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> pair_offset_;  // first pair var id of each support pair
  int num_vars_ = 0;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Throws EncoderBugError on an empty clause, a literal out of range, or
  // a clause with both v and -v.
  void Validate() const;
};

struct Encoding {
  CnfFormula formula;
  VarMap map;
  ConstraintProfile profile = ConstraintProfile::kNone;
};

// Clause order: pair-variable definitions (four per pair variable), then
// one clause per non-exempt support triple, then profile clauses. A triple
// is exempt when some coordinate lies in exactly one of its supports.
Encoding Encode(int m, int w,
                ConstraintProfile profile = ConstraintProfile::kNone);

// Deterministic DIMACS text with 'c' lines recording m, w, profile and the
// generator version.
void EmitDimacs(std::ostream& out, const Encoding& encoding);

// Decodes the cell variables of `model` (signed literals; pair variables
// optional) and certifies the result as I(m, w). Throws DomainError on a
// missing or contradictory cell assignment and EncoderBugError when the
// decoded set fails verification.
PatternSet DecodeModel(std::span<const int> model, const VarMap& map);

// True iff every clause has a true literal under `assignment`, a list of
// signed literals. Throws DomainError unless every variable is assigned
// exactly once.
bool Evaluate(const CnfFormula& formula, std::span<const int> assignment);

// The total assignment a complete I(m, w) induces on the instance variables.
// Throws DomainError unless `s` has one vector of length m and weight w on
// each support.
std::vector<int> InduceAssignment(const VectorSet& s, const VarMap& map);

struct SolverResult {
  enum class Status { kSatisfiable, kUnsatisfiable, kUnknown };
  Status status = Status::kUnknown;
  std::vector<int> model;
};

// SAT-competition output ("s ..." status and "v ..." model lines, 'c'
// comments), the MiniSat "SAT"/"UNSAT" result file, or a bare list of
// integers (read as a satisfying model). Throws ParseError.
SolverResult ParseSolverOutput(std::istream& in);

struct OracleResult {
  enum class Outcome { kFound, kNonexistent, kInconclusive };
  Outcome outcome = Outcome::kInconclusive;
  std::optional<PatternSet> set;
  std::uint64_t nodes = 0;
  // w C(m,w) <= 30: the search space is small enough that completing it
  // is routine.
  bool exhaustive_regime = false;
};

std::string_view OutcomeName(OracleResult::Outcome outcome);

// Complete backtracking over the colorings of the C(m,w) supports, checking
// the triple condition digit by digit. Reports kInconclusive once
// `node_budget` assignments have been tried.
OracleResult BruteForceAdmissible(int m, int w,
                                  std::uint64_t node_budget = 50'000'000);

}  // namespace capset

#endif  // CAPSET_SATGEN_H_
