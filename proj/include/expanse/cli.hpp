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


// The `expanse` command-line tool as a callable function.
//
// Exit codes: 0 verdict computed, 1 property violated, 2 invalid input,
// 3 budget or search limit exhausted.

#ifndef EXPANSE_CLI_HPP
#define EXPANSE_CLI_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace expanse {

inline constexpr const char* kToolVersion = "1.0.0";

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace expanse

#endif  // EXPANSE_CLI_HPP
