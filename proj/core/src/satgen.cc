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


#include "capset/satgen.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "capset/big_count.h"
#include "capset/errors.h"
#include "capset/version.h"
#include "internal/combinations.h"

namespace capset {

namespace {

constexpr std::uint64_t kMaxPairs = std::uint64_t{1} << 26;

std::uint64_t Bit(int k) { return std::uint64_t{1} << k; }

// Sorted coordinates of a mask.
std::vector<int> Coordinates(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

void AddProfileClauses(ConstraintProfile profile, const VarMap& map,
                       std::vector<std::vector<int>>& clauses) {
  const int m = map.m();
  for (std::size_t i = 0; i < map.support_count(); ++i) {
    const std::vector<int>& s = map.support(i);
    auto cell = [&](int position) { return map.CellVarAt(i, position); };
    auto differ = [&](int p, int q) {
      clauses.push_back({cell(p), cell(q)});
      clauses.push_back({-cell(p), -cell(q)});
    };
    // At least one 1 and one 2 among the given positions.
    auto mixed = [&](const std::vector<int>& positions) {
      std::vector<int> some_two, some_one;
      for (int p : positions) {
        some_two.push_back(cell(p));
        some_one.push_back(-cell(p));
      }
      clauses.push_back(some_two);
      clauses.push_back(some_one);
    };
    switch (profile) {
      case ConstraintProfile::kNone:
        return;
      case ConstraintProfile::kI11_7: {
        differ(0, 1);
        mixed({3, 4, 5});
        if (s[2] <= 6) clauses.push_back({-cell(2)});
        if (s[3] <= 6) clauses.push_back({cell(3)});
        break;
      }
      case ConstraintProfile::kI11_6: {
        differ(0, 1);
        const int w = map.w();
        mixed({w - 3, w - 2, w - 1});
        if (s[2] <= 6) clauses.push_back({-cell(2)});
        break;
      }
      case ConstraintProfile::kI10_6: {
        if (s[1] <= 5) clauses.push_back({-cell(1)});
        if (s[2] <= 5) clauses.push_back({cell(2)});
        const int w = map.w();
        if (s[w - 2] == m - 2 && s[w - 1] == m - 1) {
          clauses.push_back({-cell(w - 2), -cell(w - 1)});
        }
        break;
      }
    }
  }
}

// Digit of the vector on support i at coordinate k under a cell assignment
// given per support as a bitmask over support positions (bit set = 2).
std::vector<TernaryVector> Vectors(const VarMap& map,
                                   const std::vector<std::uint64_t>& twos) {
  std::vector<TernaryVector> out;
  out.reserve(map.support_count());
  for (std::size_t i = 0; i < map.support_count(); ++i) {
    TernaryVector v(static_cast<std::size_t>(map.m()));
    const std::vector<int>& s = map.support(i);
    for (int p = 0; p < map.w(); ++p) {
      v.Set(static_cast<std::size_t>(s[p]), (twos[i] >> p) & 1 ? 2 : 1);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string_view ProfileName(ConstraintProfile profile) {
  switch (profile) {
    case ConstraintProfile::kNone:
      return "none";
    case ConstraintProfile::kI11_7:
      return "i11_7";
    case ConstraintProfile::kI11_6:
      return "i11_6";
    case ConstraintProfile::kI10_6:
      return "i10_6";
  }
  return "unknown";
}

ConstraintProfile ParseProfile(std::string_view name) {
  for (auto p : {ConstraintProfile::kNone, ConstraintProfile::kI11_7,
                 ConstraintProfile::kI11_6, ConstraintProfile::kI10_6}) {
    if (ProfileName(p) == name) return p;
  }
  throw ParseError("unknown profile '" + std::string(name) +
                   "' (expected none, i11_7, i11_6 or i10_6)");
}

void CheckProfileCompatible(ConstraintProfile profile, int m, int w) {
  int min_weight = 0;
  switch (profile) {
    case ConstraintProfile::kNone:
      return;
    case ConstraintProfile::kI11_7:
      min_weight = 6;
      break;
    case ConstraintProfile::kI11_6:
    case ConstraintProfile::kI10_6:
      min_weight = 3;
      break;
  }
  if (w < min_weight || m < w) {
    throw DomainError("profile " + std::string(ProfileName(profile)) +
                      " needs w >= " + std::to_string(min_weight) + ", got (" +
                      std::to_string(m) + "," + std::to_string(w) + ")");
  }
}

VarMap::VarMap(int m, int w) : m_(m), w_(w) {
  if (w < 1 || w > m || m > 64) {
    throw DomainError("instance needs 1 <= w <= m <= 64, got (" +
                      std::to_string(m) + "," + std::to_string(w) + ")");
  }
  const BigCount supports = Binomial(static_cast<std::uint64_t>(m),
                                     static_cast<std::uint64_t>(w));
  if (supports * supports / 2 > kMaxPairs) {
    throw DomainError("instance (" + std::to_string(m) + "," +
                      std::to_string(w) + ") has too many support pairs");
  }
  supports_ = internal::Combinations(m, w);
  masks_.reserve(supports_.size());
  for (const auto& s : supports_) {
    std::uint64_t mask = 0;
    for (int k : s) mask |= Bit(k);
    masks_.push_back(mask);
  }
  const std::size_t n = supports_.size();
  std::int64_t next = static_cast<std::int64_t>(n) * w + 1;
  pair_offset_.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pair_offset_.push_back(static_cast<int>(next));
      next += std::popcount(masks_[i] & masks_[j]);
      if (next > std::numeric_limits<int>::max()) {
        throw DomainError("variable count exceeds the DIMACS id range");
      }
    }
  }
  num_vars_ = static_cast<int>(next - 1);
}

std::size_t VarMap::PairIndex(std::size_t i, std::size_t j) const {
  const std::size_t n = supports_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int VarMap::CellVar(std::size_t i, int coordinate) const {
  if (i >= supports_.size() || coordinate < 0 || coordinate >= m_ ||
      !(masks_[i] & Bit(coordinate))) {
    throw DomainError("coordinate " + std::to_string(coordinate) +
                      " is not in support " + std::to_string(i));
  }
  const auto& s = supports_[i];
  const auto pos = std::lower_bound(s.begin(), s.end(), coordinate) - s.begin();
  return CellVarAt(i, static_cast<int>(pos));
}

int VarMap::PairVar(std::size_t i, std::size_t j, int coordinate) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= supports_.size() || coordinate < 0 || coordinate >= m_) {
    throw DomainError("no pair variable for supports " + std::to_string(i) +
                      ", " + std::to_string(j));
  }
  const std::uint64_t shared = masks_[i] & masks_[j];
  if (!(shared & Bit(coordinate))) {
    throw DomainError("coordinate " + std::to_string(coordinate) +
                      " is not shared by supports " + std::to_string(i) +
                      " and " + std::to_string(j));
  }
  return pair_offset_[PairIndex(i, j)] +
         std::popcount(shared & (Bit(coordinate) - 1));
}

void CnfFormula::Validate() const {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.empty()) {
      throw EncoderBugError("clause " + std::to_string(c) + " is empty");
    }
    for (int lit : clause) {
      if (lit == 0 || lit > num_vars || -lit > num_vars) {
        throw EncoderBugError("clause " + std::to_string(c) +
                              " has literal out of range: " +
                              std::to_string(lit));
      }
      if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
        throw EncoderBugError("clause " + std::to_string(c) +
                              " is a tautology on variable " +
                              std::to_string(lit < 0 ? -lit : lit));
      }
    }
  }
}

Encoding Encode(int m, int w, ConstraintProfile profile) {
  CheckProfileCompatible(profile, m, w);
  Encoding enc{CnfFormula{}, VarMap(m, w), profile};
  const VarMap& map = enc.map;
  auto& clauses = enc.formula.clauses;
  enc.formula.num_vars = map.num_vars();
  const std::size_t n = map.support_count();

  // (a) pair <-> (x <-> y)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int k : Coordinates(map.support_mask(i) & map.support_mask(j))) {
        const int p = map.PairVar(i, j, k);
        const int x = map.CellVar(i, k);
        const int y = map.CellVar(j, k);
        clauses.push_back({-p, -x, y});
        clauses.push_back({-p, x, -y});
        clauses.push_back({p, x, y});
        clauses.push_back({p, -x, -y});
      }
    }
  }

  // (b) triples with no coordinate in exactly one support
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = map.support_mask(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t b = map.support_mask(j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::uint64_t c = map.support_mask(k);
        const std::uint64_t exactly_one =
            (a & ~b & ~c) | (b & ~a & ~c) | (c & ~a & ~b);
        if (exactly_one != 0) continue;
        std::vector<int> clause;
        for (int coord : Coordinates(a | b | c)) {
          const std::uint64_t bit = Bit(coord);
          const bool in_a = a & bit, in_b = b & bit, in_c = c & bit;
          if (in_a && in_b && !in_c) clause.push_back(-map.PairVar(i, j, coord));
          if (in_a && in_c && !in_b) clause.push_back(-map.PairVar(i, k, coord));
          if (in_b && in_c && !in_a) clause.push_back(-map.PairVar(j, k, coord));
        }
        if (clause.empty()) {
          throw EncoderBugError("supports " + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) +
                                " leave an empty triple clause");
        }
        clauses.push_back(std::move(clause));
      }
    }
  }

  // (c)
  AddProfileClauses(profile, map, clauses);
  return enc;
}

void EmitDimacs(std::ostream& out, const Encoding& encoding) {
  const CnfFormula& f = encoding.formula;
  std::ostringstream text;
  text << "c constant-weight admissible set I(m,w)\n"
       << "c m=" << encoding.map.m() << " w=" << encoding.map.w()
       << " profile=" << ProfileName(encoding.profile) << '\n'
       << "c cell-vars=" << (f.num_vars == 0 ? 0 : encoding.map.cell_var_count())
       << " generator=capset " << Version() << '\n'
       << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) text << lit << ' ';
    text << "0\n";
  }
  out << text.str();
}

namespace {

// value[v] in {-1 unassigned, 0 false, 1 true} for v in 1..limit; literals
// beyond `limit` are ignored.
std::vector<int> AssignmentTable(std::span<const int> literals, int limit) {
  std::vector<int> value(static_cast<std::size_t>(limit) + 1, -1);
  for (int lit : literals) {
    if (lit == 0) continue;
    const int var = lit < 0 ? -lit : lit;
    if (var > limit) continue;
    const int v = lit > 0 ? 1 : 0;
    if (value[var] != -1 && value[var] != v) {
      throw DomainError("variable " + std::to_string(var) +
                        " assigned both values");
    }
    value[var] = v;
  }
  return value;
}

}  // namespace

PatternSet DecodeModel(std::span<const int> model, const VarMap& map) {
  const std::vector<int> value = AssignmentTable(model, map.cell_var_count());
  std::vector<std::uint64_t> twos(map.support_count(), 0);
  for (std::size_t i = 0; i < map.support_count(); ++i) {
    for (int p = 0; p < map.w(); ++p) {
      const int var = map.CellVarAt(i, p);
      if (value[var] == -1) {
        throw DomainError("model does not assign cell variable " +
                          std::to_string(var));
      }
      if (value[var] == 1) twos[i] |= Bit(p);
    }
  }
  VectorSet decoded(map.m(), Vectors(map, twos));
  try {
    return PatternSet::Certify(std::move(decoded), false, map.w());
  } catch (const CertificationError& e) {
    throw EncoderBugError(std::string("decoded model is not I(m,w): ") +
                          e.what());
  }
}

bool Evaluate(const CnfFormula& formula, std::span<const int> assignment) {
  const std::vector<int> value =
      AssignmentTable(assignment, formula.num_vars);
  for (int v = 1; v <= formula.num_vars; ++v) {
    if (value[v] == -1) {
      throw DomainError("assignment leaves variable " + std::to_string(v) +
                        " unset");
    }
  }
  for (const auto& clause : formula.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      const int var = lit < 0 ? -lit : lit;
      if ((lit > 0) == (value[var] == 1)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::vector<int> InduceAssignment(const VectorSet& s, const VarMap& map) {
  if (s.dimension() != map.m() || s.size() != map.support_count()) {
    throw DomainError("set does not have one vector per support of I(" +
                      std::to_string(map.m()) + "," + std::to_string(map.w()) +
                      ")");
  }
  std::vector<const TernaryVector*> on_support(map.support_count(), nullptr);
  std::vector<std::uint64_t> masks(map.support_count());
  for (std::size_t i = 0; i < map.support_count(); ++i) masks[i] = map.support_mask(i);
  for (const TernaryVector& v : s) {
    std::uint64_t mask = 0;
    for (int k : v.Support()) mask |= Bit(k);
    const auto it = std::find(masks.begin(), masks.end(), mask);
    if (it == masks.end() || on_support[it - masks.begin()] != nullptr) {
      throw DomainError("vector " + v.ToString() +
                        " does not fill a free support of weight " +
                        std::to_string(map.w()));
    }
    on_support[it - masks.begin()] = &v;
  }
  std::vector<int> literals;
  literals.reserve(static_cast<std::size_t>(map.num_vars()));
  for (std::size_t i = 0; i < map.support_count(); ++i) {
    for (int k : map.support(i)) {
      const int var = map.CellVar(i, k);
      literals.push_back((*on_support[i])[k] == 2 ? var : -var);
    }
  }
  for (std::size_t i = 0; i < map.support_count(); ++i) {
    for (std::size_t j = i + 1; j < map.support_count(); ++j) {
      for (int k : Coordinates(masks[i] & masks[j])) {
        const int var = map.PairVar(i, j, k);
        literals.push_back((*on_support[i])[k] == (*on_support[j])[k] ? var
                                                                      : -var);
      }
    }
  }
  return literals;
}

SolverResult ParseSolverOutput(std::istream& in) {
  SolverResult result;
  bool saw_status = false;
  bool minisat = false;
  std::vector<int> bare;
  std::string line;
  auto read_ints = [](std::string_view text, std::vector<int>& out) {
    std::istringstream tokens{std::string(text)};
    std::string token;
    while (tokens >> token) {
      std::size_t used = 0;
      int lit = 0;
      try {
        lit = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("bad literal '" + token + "' in solver output");
      }
      if (lit != 0) out.push_back(lit);
    }
  };
  while (std::getline(in, line)) {
    std::string_view text(line);
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) {
      text.remove_suffix(1);
    }
    if (text.empty() || text.front() == 'c') continue;
    if (text.starts_with("s ")) {
      const std::string_view status = text.substr(2);
      saw_status = true;
      if (status == "SATISFIABLE") {
        result.status = SolverResult::Status::kSatisfiable;
      } else if (status == "UNSATISFIABLE") {
        result.status = SolverResult::Status::kUnsatisfiable;
      } else {
        result.status = SolverResult::Status::kUnknown;
      }
    } else if (text.starts_with("v ") || text == "v") {
      read_ints(text.substr(1), result.model);
    } else if (text == "SAT" || text == "UNSAT" || text == "INDET") {
      saw_status = true;
      minisat = true;
      result.status = text == "SAT"     ? SolverResult::Status::kSatisfiable
                      : text == "UNSAT" ? SolverResult::Status::kUnsatisfiable
                                        : SolverResult::Status::kUnknown;
    } else {
      read_ints(text, bare);
    }
  }
  if (minisat) {
    result.model.insert(result.model.end(), bare.begin(), bare.end());
  } else if (!bare.empty()) {
    if (saw_status || !result.model.empty()) {
      throw ParseError("unexpected integers outside 'v' lines");
    }
    result.model = std::move(bare);
    result.status = SolverResult::Status::kSatisfiable;
  }
  if (!saw_status && result.model.empty()) {
    throw ParseError("solver output has neither a status nor a model");
  }
  if (!saw_status) result.status = SolverResult::Status::kSatisfiable;
  return result;
}

std::string_view OutcomeName(OracleResult::Outcome outcome) {
  switch (outcome) {
    case OracleResult::Outcome::kFound:
      return "exists";
    case OracleResult::Outcome::kNonexistent:
      return "nonexistent";
    case OracleResult::Outcome::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(int m, int w, std::uint64_t budget)
      : m_(m), w_(w), budget_(budget), supports_(internal::Combinations(m, w)) {
    vectors_.assign(supports_.size(), std::vector<int>(m, 0));
  }

  // Returns true when a complete admissible coloring was found.
  bool Run() { return Place(0); }
  bool exhausted_budget() const { return out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& vectors() const { return vectors_; }

 private:
  // {x, y, z} at some coordinate is {0,1,2}, {0,0,1} or {0,0,2}.
  bool TripleGood(const std::vector<int>& x, const std::vector<int>& y,
                  const std::vector<int>& z) const {
    for (int k = 0; k < m_; ++k) {
      int zeros = 0, ones = 0, twos = 0;
      for (int d : {x[k], y[k], z[k]}) {
        zeros += d == 0;
        ones += d == 1;
        twos += d == 2;
      }
      if (zeros == 2 || (zeros == 1 && ones == 1 && twos == 1)) return true;
    }
    return false;
  }

  bool Consistent(std::size_t c) const {
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = a + 1; b < c; ++b) {
        if (!TripleGood(vectors_[a], vectors_[b], vectors_[c])) return false;
      }
    }
    return true;
  }

  bool Place(std::size_t c) {
    if (c == supports_.size()) return true;
    // Swapping 1 and 2 everywhere preserves admissibility, so the first
    // vector may start with a 1.
    const std::uint32_t limit = c == 0 ? (1u << (w_ - 1)) : (1u << w_);
    for (std::uint32_t coloring = 0; coloring < limit; ++coloring) {
      if (++nodes_ > budget_) {
        out_of_budget_ = true;
        return false;
      }
      for (int p = 0; p < w_; ++p) {
        vectors_[c][supports_[c][p]] = (coloring >> (w_ - 1 - p)) & 1 ? 2 : 1;
      }
      if (Consistent(c) && Place(c + 1)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  int m_;
  int w_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::vector<int>> supports_;
  std::vector<std::vector<int>> vectors_;
};

}  // namespace

OracleResult BruteForceAdmissible(int m, int w, std::uint64_t node_budget) {
  if (w < 1 || w > m || m > 64) {
    throw DomainError("oracle needs 1 <= w <= m <= 64");
  }
  OracleResult result;
  result.exhaustive_regime =
      Binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(w)) *
          w <= 30;
  ColoringSearch search(m, w, node_budget);
  const bool found = search.Run();
  result.nodes = search.nodes();
  if (found) {
    std::vector<TernaryVector> vectors;
    for (const auto& v : search.vectors()) {
      std::vector<TernaryVector::Digit> digits(v.begin(), v.end());
      vectors.emplace_back(digits);
    }
    result.set = PatternSet::Certify(VectorSet(m, std::move(vectors)), false, w);
    result.outcome = OracleResult::Outcome::kFound;
  } else if (search.exhausted_budget()) {
    result.outcome = OracleResult::Outcome::kInconclusive;
  } else {
    result.outcome = OracleResult::Outcome::kNonexistent;
  }
  return result;
}

}  // namespace capset
