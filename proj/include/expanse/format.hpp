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


// Text and JSON renderings shared by the command-line tool and the tests.

#ifndef EXPANSE_FORMAT_HPP
#define EXPANSE_FORMAT_HPP

#include <string>
#include <vector>

#include "expanse/core.hpp"
#include "expanse/expansion.hpp"
#include "expanse/toric.hpp"
#include "json.hpp"

namespace expanse {

using Json = nlohmann::ordered_json;

/// "x1^2*x4_1"; "1" for the zero vector.
std::string monomialText(const ExponentVector& u, const ExpansionShape& shape);
std::string monomialText(const ExponentVector& u);

/// "y1*y5 - y2^2", indices 1-based.
std::string binomialIndexText(const YBinomial& b);
/// "y[x1^2*x2]*y[x2*x4^2] - y[x1*x2*x4]^2".
std::string binomialText(const YBinomial& b, const MonomialSet& configuration,
                         const ExpansionShape& shape);

Json vectorJson(const ExponentVector& u);
Json monomialsJson(const MonomialSet& set, const ExpansionShape& shape);
Json binomialsJson(const std::vector<YBinomial>& binomials, const MonomialSet& configuration,
                   const ExpansionShape& shape);

}  // namespace expanse

#endif  // EXPANSE_FORMAT_HPP
