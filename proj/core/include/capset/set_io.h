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


#ifndef CAPSET_SET_IO_H_
#define CAPSET_SET_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "capset/vector_set.h"

namespace capset {

// Text format shared by cap sets and pattern sets: one vector per line as a
// string of digits 0-2; blank lines and lines starting with '#' are
// ignored. Pattern sets carry a header line
//
//   # admissible m=<length> w=<weight>
//
// (w omitted when the weights are not uniform), checked on read.
struct AdmissibleHeader {
  int length = 0;
  std::optional<int> weight;
};

struct ParsedSet {
  VectorSet set;
  std::optional<AdmissibleHeader> header;
};

// Throws ParseError on bad digits, ragged lengths, a header that
// disagrees with the data, or a file with neither vectors nor header.
ParsedSet ReadSet(std::istream& in);
ParsedSet ReadSetFile(const std::filesystem::path& path);

void WriteSet(std::ostream& out, const VectorSet& s);
void WriteAdmissible(std::ostream& out, const VectorSet& s);
// Throws ParseError if the file cannot be opened.
void WriteSetFile(const std::filesystem::path& path, const VectorSet& s,
                  bool admissible_header = false);

}  // namespace capset

#endif  // CAPSET_SET_IO_H_
