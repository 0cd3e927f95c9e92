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

#include "capset/verdict.h"

namespace capset {

std::string_view ViolationName(Violation v) {
  switch (v) {
    case Violation::kNone: return "pass";
    case Violation::kCapTriple: return "cap-triple";
    case Violation::kNotCapSet: return "not-a-cap-set";
    case Violation::kExtendableCondition1: return "extendable-condition-1";
    case Violation::kExtendableCondition2: return "extendable-condition-2";
    case Violation::kAdmissiblePair: return "admissible-pair";
    case Violation::kAdmissibleTriple: return "admissible-triple";
    case Violation::kTooSmall: return "too-small";
    case Violation::kRecursivePair: return "recursive-pair";
    case Violation::kWrongSize: return "wrong-size";
    case Violation::kWrongWeight: return "wrong-weight";
    case Violation::kRepeatedSupport: return "repeated-support";
    case Violation::kMetaWeight: return "meta-condition-1";
    case Violation::kMetaCondition2: return "meta-condition-2";
    case Violation::kMetaCondition3: return "meta-condition-3";
    case Violation::kNotAdmissible: return "not-admissible";
  }
  return "unknown";
}

std::string Verdict::Describe() const {
  if (ok()) return "pass";
  std::string out(ViolationName(violation));
  if (!witness.empty()) {
    out += " [";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ' ';
      out += witness[i].ToString();
    }
    out += ']';
  }
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace capset
