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

#ifndef CAPSET_PATTERNS_H_
#define CAPSET_PATTERNS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "capset/big_count.h"
#include "capset/gf3.h"
#include "capset/vector_set.h"
#include "capset/verdict.h"

namespace capset {

// Admissibility of S in {0,1,2}^m:
//   pairs:   for distinct s, s' some i has s_i = 0 != s'_i and some j has
//            s_j != 0 = s'_j;
//   triples: for distinct s, s', s'' some coordinate has value multiset
//            {0,1,2}, {0,0,1} or {0,0,2}.
// All pairs are checked before any triple. O(|S|^3 * m / 64).
Verdict IsAdmissible(const VectorSet& s);

// Admissible, |S| >= 2, and every distinct pair has either coordinates with
// {s_i, s'_i} = {0,1} and {s_j, s'_j} = {0,2}, or a common zero.
Verdict IsRecursivelyAdmissible(const VectorSet& s);

// I(m, w): admissible, C(m, w) vectors of length m, each of weight w, with
// pairwise distinct supports. Throws DomainError unless 0 <= w <= m.
Verdict IsConstantWeight(const VectorSet& s, int m, int w);

// The common weight of all elements, if there is one (nullopt when empty).
std::optional<int> UniformWeight(const VectorSet& s);

enum class PatternRole : std::uint8_t {
  kAdmissible = 1,
  kRecursivelyAdmissible = 2,
  kConstantWeight = 4,
};

// A set of pattern vectors together with the properties it has been
// certified to have. Roles are attached only by the certifying factories.
class PatternSet {
 public:
  // Runs the verifier of every requested role. Constant weight needs `w`.
  // Throws CertificationError with the failing verdict.
  static PatternSet Certify(VectorSet elements, bool recursive = false,
                            std::optional<int> constant_weight = std::nullopt);

  // Attaches the admissible role without a check; for outputs of the
  // product and meta constructions too large to verify.
  static PatternSet AdmissibleByLemma(VectorSet elements,
                                      std::string justification);

  const VectorSet& elements() const { return elements_; }
  int length() const { return elements_.dimension(); }
  std::size_t size() const { return elements_.size(); }
  bool Has(PatternRole role) const {
    return (roles_ & static_cast<std::uint8_t>(role)) != 0;
  }
  // Weight w when certified as I(m, w).
  std::optional<int> weight() const { return weight_; }
  Provenance provenance() const { return provenance_; }
  const std::string& justification() const { return justification_; }

 private:
  PatternSet() = default;

  VectorSet elements_;
  std::uint8_t roles_ = 0;
  std::optional<int> weight_;
  Provenance provenance_ = Provenance::kBruteForce;
  std::string justification_;
};

// Output sets up to this size are re-verified by brute force; larger ones
// carry the admissible role by lemma.
inline constexpr std::size_t kReverifyLimit = 600;

// The recursively admissible I~(m, m-1): vector k has 0 at coordinate k,
// 1 before it and 2 after it. Throws DomainError for m < 2.
PatternSet BuildChain(int m);

// An I(m, w) for w in {2, 3} and m > w, by deterministic backtracking over
// the digits of the C(m, w) supports. Throws NotFoundError if the search is
// exhausted.
PatternSet BuildLowWeight(int m, int w);

// S x T. Throws CertificationError if either input is not admissible.
PatternSet ProductAdmissible(const VectorSet& s, const VectorSet& t,
                             const ElementBudget& budget = DefaultElementBudget());

// Exchanges digits 1 and 2 in every element.
VectorSet SwapColors(const VectorSet& s);

// Meta-extendability of admissible (s0, s1, s2) of one length:
//   (1) every weight in s0 is below every weight in s1 u s2;
//   (2) x, y in s0 (x = y allowed), z in s1 u s2: triple condition holds;
//   (3) x in s0, y in s1, z in s2: triple condition holds.
// Throws DimensionError on mismatched lengths.
Verdict IsMetaExtendable(const VectorSet& s0, const VectorSet& s1,
                         const VectorSet& s2);

class MetaTriple {
 public:
  // Throws CertificationError unless IsMetaExtendable passes.
  static MetaTriple Certify(VectorSet s0, VectorSet s1, VectorSet s2);

  int length() const { return sets_[0].dimension(); }
  const VectorSet& set(int i) const { return sets_.at(i); }

 private:
  explicit MetaTriple(std::array<VectorSet, 3> sets) : sets_(std::move(sets)) {}
  std::array<VectorSet, 3> sets_;
};

// Sizes, lengths and (optional) uniform weights of a meta triple, enough to
// count a meta extension without the sets themselves.
struct MetaShape {
  int length = 0;
  std::array<BigCount, 3> sizes;
  std::array<std::optional<int>, 3> weights;
};

MetaShape ShapeOf(const MetaTriple& triple);

struct MetaExtension {
  int length = 0;
  BigCount size;
  // Set when every output vector has the same weight.
  std::optional<int> weight;
  // Absent in count-only mode (size over the element budget).
  std::optional<PatternSet> elements;
};

// T(S0, S1, S2) = union over t in T of S_{t_1} x ... x S_{t_r}.
// Throws CertificationError if T is not admissible. Falls back to count-only
// when the size exceeds the budget.
MetaExtension MetaExtend(const VectorSet& t, const MetaTriple& triple,
                         const ElementBudget& budget = DefaultElementBudget());

// Count-only meta extension: length r * m, size sum_t prod_i |S_{t_i}|.
MetaExtension MetaExtendCount(const VectorSet& t, const MetaShape& shape);

// Finds S0 among the weight-w0 vectors of length m with |S0| >= target such
// that S0 is admissible and (S0, s1, s2) is meta-extendable. Candidates are
// ordered by support (lexicographic), then by digits; the search is a
// deterministic depth-first backtrack. Throws NotFoundError when the search
// proves no such set exists, DomainError on bad preconditions.
PatternSet SearchMetaS0(const VectorSet& s1, const VectorSet& s2, int w0,
                        int target);

}  // namespace capset

#endif  // CAPSET_PATTERNS_H_
