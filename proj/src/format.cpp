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


#include "expanse/format.hpp"

namespace expanse {

namespace {

template <typename Name>
std::string product(const ExponentVector& u, Name name) {
  std::string s;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += name(i);
    if (u[i] > 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string monomialText(const ExponentVector& u, const ExpansionShape& shape) {
  if (u.dim() != shape.totalDim()) {
    fail(ErrorKind::DimensionMismatch, "monomial does not match the variable names");
  }
  return product(u, [&](std::size_t i) { return shape.variableName(i); });
}

std::string monomialText(const ExponentVector& u) {
  return product(u, [](std::size_t i) { return "x" + std::to_string(i + 1); });
}

std::string binomialIndexText(const YBinomial& b) {
  auto name = [](std::size_t i) { return "y" + std::to_string(i + 1); };
  return product(b.plus, name) + " - " + product(b.minus, name);
}

std::string binomialText(const YBinomial& b, const MonomialSet& configuration,
                         const ExpansionShape& shape) {
  auto name = [&](std::size_t i) { return "y[" + monomialText(configuration[i], shape) + "]"; };
  return product(b.plus, name) + " - " + product(b.minus, name);
}

Json vectorJson(const ExponentVector& u) {
  Json out = Json::array();
  for (Exponent e : u.entries()) out.push_back(e);
  return out;
}

Json monomialsJson(const MonomialSet& set, const ExpansionShape& shape) {
  Json out = Json::array();
  for (const auto& u : set) out.push_back(monomialText(u, shape));
  return out;
}

Json binomialsJson(const std::vector<YBinomial>& binomials, const MonomialSet& configuration,
                   const ExpansionShape& shape) {
  Json out = Json::array();
  for (const auto& b : binomials) {
    out.push_back(Json{{"binomial", binomialText(b, configuration, shape)},
                       {"indices", binomialIndexText(b)}});
  }
  return out;
}

}  // namespace expanse
