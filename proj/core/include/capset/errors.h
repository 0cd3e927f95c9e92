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

#ifndef CAPSET_ERRORS_H_
#define CAPSET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace capset {

// Base class of every error thrown by the library. Verifiers never throw on
// a failed property; they return a Verdict instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of different length / dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A materializing operation would exceed the element budget. The exact
// element count that was requested is kept as a decimal string.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string count)
      : Error(what), count_(std::move(count)) {}
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

// Malformed file contents or unparsable user input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An input that was required to carry a certified property did not.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// A search finished without finding an object of the requested kind.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A decoded SAT model failed verification; indicates an encoder defect or a
// model that does not satisfy the formula.
class EncoderBugError : public Error {
 public:
  using Error::Error;
};

}  // namespace capset

#endif  // CAPSET_ERRORS_H_
