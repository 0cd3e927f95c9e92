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

#ifndef CAPSET_VERDICT_H_
#define CAPSET_VERDICT_H_

#include <string>
#include <string_view>
#include <vector>

#include "capset/ternary_vector.h"

namespace capset {

enum class Violation {
  kNone,
  // is_cap_set: three elements, not all equal, summing to zero.
  kCapTriple,
  // is_extendable: one of the three inputs is not a cap set.
  kNotCapSet,
  kExtendableCondition1,
  kExtendableCondition2,
  kAdmissiblePair,
  kAdmissibleTriple,
  // Recursively admissible sets need at least two elements.
  kTooSmall,
  kRecursivePair,
  kWrongSize,
  kWrongWeight,
  kRepeatedSupport,
  kMetaWeight,
  kMetaCondition2,
  kMetaCondition3,
  // A meta-extendable input is not itself admissible.
  kNotAdmissible,
};

std::string_view ViolationName(Violation v);

// Outcome of a verifier. On failure `witness` holds the first offending
// vectors in canonical iteration order.
struct Verdict {
  Violation violation = Violation::kNone;
  std::vector<TernaryVector> witness;
  std::string detail;

  bool ok() const { return violation == Violation::kNone; }
  explicit operator bool() const { return ok(); }

  static Verdict Pass() { return {}; }
  static Verdict Fail(Violation v, std::vector<TernaryVector> witness,
                      std::string detail = {}) {
    return {v, std::move(witness), std::move(detail)};
  }

  // "pass", or the violation name, the witness and the detail on one line.
  std::string Describe() const;
};

}  // namespace capset

#endif  // CAPSET_VERDICT_H_
