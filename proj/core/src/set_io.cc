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


#include "capset/set_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "capset/errors.h"
#include "capset/patterns.h"

namespace capset {

namespace {

constexpr std::string_view kHeaderTag = "admissible";

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int ParseField(std::string_view token, std::string_view key, int line_no) {
  int value = 0;
  const std::string_view digits = token.substr(key.size());
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": bad header field '" +
                     std::string(token) + "'");
  }
  return value;
}

// Returns a header if `comment` (text after '#') is one.
std::optional<AdmissibleHeader> ParseHeader(std::string_view comment,
                                            int line_no) {
  comment = Trim(comment);
  if (!comment.starts_with(kHeaderTag)) return std::nullopt;
  comment.remove_prefix(kHeaderTag.size());
  AdmissibleHeader header;
  bool have_length = false;
  while (!(comment = Trim(comment)).empty()) {
    const auto end = comment.find_first_of(" \t");
    const std::string_view token = comment.substr(0, end);
    comment = end == std::string_view::npos ? std::string_view{}
                                            : comment.substr(end);
    if (token.starts_with("m=")) {
      header.length = ParseField(token, "m=", line_no);
      have_length = true;
    } else if (token.starts_with("w=")) {
      header.weight = ParseField(token, "w=", line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown header field '" + std::string(token) + "'");
    }
  }
  if (!have_length) {
    throw ParseError("line " + std::to_string(line_no) + ": header lacks m=");
  }
  return header;
}

}  // namespace

ParsedSet ReadSet(std::istream& in) {
  std::optional<AdmissibleHeader> header;
  std::vector<TernaryVector> vectors;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (auto h = ParseHeader(text.substr(1), line_no)) {
        if (header) throw ParseError("duplicate admissible header");
        header = h;
      }
      continue;
    }
    try {
      vectors.push_back(TernaryVector::Parse(text));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (vectors.back().size() != vectors.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": length " +
                       std::to_string(vectors.back().size()) + ", expected " +
                       std::to_string(vectors.front().size()));
    }
  }
  int dimension = 0;
  if (!vectors.empty()) {
    dimension = static_cast<int>(vectors.front().size());
  } else if (header) {
    dimension = header->length;
  } else {
    throw ParseError("no vectors and no header");
  }
  if (header) {
    if (header->length != dimension) {
      throw ParseError("header m=" + std::to_string(header->length) +
                       " but vectors have length " + std::to_string(dimension));
    }
    if (header->weight) {
      for (const auto& v : vectors) {
        if (v.Weight() != *header->weight) {
          throw ParseError("vector " + v.ToString() + " has weight " +
                           std::to_string(v.Weight()) + ", header says w=" +
                           std::to_string(*header->weight));
        }
      }
    }
  }
  const std::size_t count = vectors.size();
  VectorSet set(dimension, std::move(vectors));
  if (set.size() != count) throw ParseError("repeated vector");
  return {std::move(set), header};
}

ParsedSet ReadSetFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return ReadSet(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void WriteSet(std::ostream& out, const VectorSet& s) {
  for (const auto& v : s) out << v.ToString() << '\n';
}

void WriteAdmissible(std::ostream& out, const VectorSet& s) {
  out << "# " << kHeaderTag << " m=" << s.dimension();
  if (auto w = UniformWeight(s)) out << " w=" << *w;
  out << '\n';
  WriteSet(out, s);
}

void WriteSetFile(const std::filesystem::path& path, const VectorSet& s,
                  bool admissible_header) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  if (admissible_header) {
    WriteAdmissible(out, s);
  } else {
    WriteSet(out, s);
  }
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace capset
