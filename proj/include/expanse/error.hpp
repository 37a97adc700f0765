// Copyright 2026 The Authors.
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

#ifndef EXPANSE_ERROR_HPP
#define EXPANSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace expanse {

enum class ErrorKind {
  DimensionMismatch,
  PreconditionViolation,
  InvalidInput,
  Unsupported,
  Overflow,
  SearchTooLarge,
  BudgetExhausted,
  // An internal consistency check failed. Always a bug.
  InvariantViolation,
};

std::string_view toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const char* what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace expanse

#endif  // EXPANSE_ERROR_HPP
