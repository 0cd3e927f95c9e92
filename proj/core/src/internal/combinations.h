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

#ifndef CAPSET_INTERNAL_COMBINATIONS_H_
#define CAPSET_INTERNAL_COMBINATIONS_H_

#include <vector>

namespace capset::internal {

// All w-subsets of {0, ..., m-1} as increasing index lists, in lexicographic
// order.
inline std::vector<std::vector<int>> Combinations(int m, int w) {
  std::vector<std::vector<int>> out;
  if (w < 0 || w > m) return out;
  std::vector<int> current(w);
  for (int i = 0; i < w; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = w - 1;
    while (i >= 0 && current[i] == m - w + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < w; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace capset::internal

#endif  // CAPSET_INTERNAL_COMBINATIONS_H_
