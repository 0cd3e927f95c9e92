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

#ifndef CAPSET_CONSTRUCTIONS_H_
#define CAPSET_CONSTRUCTIONS_H_

#include <array>
#include <cstdint>
#include <optional>

#include "capset/big_count.h"
#include "capset/gf3.h"
#include "capset/patterns.h"
#include "capset/vector_set.h"
#include "capset/verdict.h"

namespace capset {

// Incidence matrix of the (6,3,2)-design: rows are the 6 points, columns
// the 10 blocks 123, 124, 135, 146, 156, 236, 245, 256, 345, 346.
using DesignMatrix = std::array<std::array<std::uint8_t, 10>, 6>;
const DesignMatrix& SixThreeTwoDesign();

// Every pair of rows shares exactly `lambda` columns of 1s and every column
// has exactly `block_size` 1s.
bool IsPairwiseBalanced(const DesignMatrix& d, int lambda = 2,
                        int block_size = 3);

// The pieces of the F_3^6 collection, kept apart for inspection.
struct Edel6Parts {
  VectorSet d;        // weight 3, support a design block (80)
  VectorSet d_prime;  // the other weight-3 vectors (80)
  VectorSet r;        // no zeros, an even number of 1s (32)
  VectorSet a0;       // weight 1 (12)
};

Edel6Parts BuildEdel6Parts();

// The extendable collection (A0, A1 = D u R, A2 = D' u R) in F_3^6 with
// |A0| = 12 and |A1| = |A2| = 112, certified by brute force. Throws
// CertificationError if the embedded design fails validation or the
// collection fails its check.
ExtendableTriple BuildEdel6();

struct ExtendedProduct {
  int dimension = 0;
  BigCount size;
  // Absent in count-only mode.
  std::optional<VectorSet> elements;
};

// S(A0, A1, A2) = union over s in S of A_{s_1} x ... x A_{s_m}, with block i
// occupying coordinates [i*n, (i+1)*n). Size is sum_s prod_i |A_{s_i}|; the
// blocks of distinct s are disjoint. Materialized only when the triple is
// and the size fits the budget. Throws CertificationError if S is not
// admissible.
ExtendedProduct ExtendProduct(const VectorSet& s, const ExtendableTriple& triple,
                              const ElementBudget& budget = DefaultElementBudget());

// Sets up to this size are brute-force certified after a recursive step.
inline constexpr std::uint64_t kCertifyLimit = 4096;

// (S(A0,A1,A2), A1^m, A2^m). Requires S recursively admissible (throws
// CertificationError otherwise). The result is brute-force certified when
// all three sets fit kCertifyLimit, held unverified with by-lemma
// provenance when they fit the budget, and count-only beyond it.
ExtendableTriple RecursiveStep(const VectorSet& s,
                               const ExtendableTriple& triple,
                               const ElementBudget& budget = DefaultElementBudget());

// Random spot check of the recursive-step triple (S(A0,A1,A2), A1^m, A2^m)
// without materializing it: draws x, y from S(A0,A1,A2) and tests
// membership of -(x+y) blockwise, for the cap property and both
// extendability conditions. `base` must be materialized. Deterministic for a
// given seed.
Verdict SampledRecursiveStepCheck(const VectorSet& s,
                                  const ExtendableTriple& base, int samples,
                                  std::uint64_t seed = 0x5eed);

}  // namespace capset

#endif  // CAPSET_CONSTRUCTIONS_H_
