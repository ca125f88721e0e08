// Copyright 2026 The pidsym Authors
//
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

#ifndef PIDSYM_ERRORS_HPP_
#define PIDSYM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pidsym {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PIDSYM_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PIDSYM_DEFINE_ERROR(EmptyPid);
PIDSYM_DEFINE_ERROR(GuardTypeError);
PIDSYM_DEFINE_ERROR(NotEnabled);
PIDSYM_DEFINE_ERROR(MalformedGenerator);
PIDSYM_DEFINE_ERROR(NotInTree);
PIDSYM_DEFINE_ERROR(IllFormedTree);
PIDSYM_DEFINE_ERROR(RetainedNotCovered);
PIDSYM_DEFINE_ERROR(NotSiblingOrdered);
PIDSYM_DEFINE_ERROR(UnanchoredPid);
PIDSYM_DEFINE_ERROR(TooManyPids);
PIDSYM_DEFINE_ERROR(InvalidNet);

#undef PIDSYM_DEFINE_ERROR

// Model text could not be tokenized or parsed. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pidsym

#endif  // PIDSYM_ERRORS_HPP_
