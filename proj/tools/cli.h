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


#ifndef CAPSET_TOOLS_CLI_H_
#define CAPSET_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace capset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. Returns 0 on
// success, 1 when a verification fails (the witness goes to `out`), and 2
// on usage or input errors (the message goes to `err`).
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace capset::cli

#endif  // CAPSET_TOOLS_CLI_H_
