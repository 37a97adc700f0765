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


#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "expanse/cli.hpp"
#include "json.hpp"

namespace {

const char* kPaperA =
    R"({"n": 4, "kind": "set", "monomials": ["x1^2*x2", "x1*x2*x4", "x1*x3", "x2*x3^2", "x2*x4^2"]})";
const char* kCm = R"({"n": 2, "monomials": [[3,0],[2,1],[0,3]]})";
const char* kSingleton = R"({"n": 2, "kind": "bases", "monomials": ["x1*x2"]})";

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  if (!input.empty()) {
    args.push_back("--input");
    args.push_back("-");
  }
  const int code = expanse::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: lifted basis of the worked example") {
  const auto r = call({"verify", "grob-exp", "--alpha", "1,1,1,2"}, kPaperA);
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["verdict"] == true);
  CHECK(j["result"]["G0"].size() == 3);
  CHECK(j["result"]["G1"].size() == 3);
  CHECK(j["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
}

TEST_CASE("cli: dimension with and without expansion") {
  CHECK(call({"dim"}, kCm).json()["verdict"] == 2);
  CHECK(call({"dim", "--alpha", "2,2"}, kCm).json()["verdict"] == 4);
  CHECK(call({"verify", "dim", "--alpha", "2,2"}, kCm).code == 0);
}

TEST_CASE("cli: double-swap check on the expanded singleton") {
  const auto r = call({"white", "check", "--alpha", "2,2"}, kSingleton);
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["verdict"] == true);
  CHECK(j["result"]["swap_quadrics"].size() == 1);
  CHECK(j["result"]["basis"]["size"] == 1);
}

TEST_CASE("cli: other commands") {
  CHECK(call({"expand", "--alpha", "2,2"}, kSingleton).json()["verdict"] == 4);
  CHECK(call({"check", "polymatroidal"}, kSingleton).json()["verdict"] == true);
  CHECK(call({"check", "k-decomposable"}, kCm).code == 0);
  const auto neg = call({"check", "polymatroidal"}, R"({"n": 2, "monomials": ["x1^2", "x2^2"]})");
  CHECK(neg.json()["verdict"] == false);
  CHECK(neg.json()["result"]["witness"]["u"] == "x1^2");
  CHECK(call({"toric", "gb"}, kPaperA).json()["verdict"] == 1);
  CHECK(call({"toric", "expand-gb", "--alpha", "1,1,1,2"}, kPaperA).json()["verdict"] == 6);
  CHECK(call({"toric", "contract-gb", "--alpha", "1,1,1,2", "--vars", "1,2,3,4"}, kPaperA)
            .json()["verdict"] == 1);
  CHECK(call({"normal", "--bound", "9"}, kCm).json()["verdict"] == "NotNormal((1,2))");
  CHECK(call({"normal", "theorem-normal", "--alpha", "2,2", "--bound", "9"}, kCm).code == 0);
  CHECK(call({"sortable", "check"}, kCm).json()["verdict"] == false);
  CHECK(call({"white", "oracle", "--alpha", "2,2"}, kSingleton).json()["verdict"] == true);
  for (const char* id : {"poly", "wp", "lq", "pi0", "ohh-grob", "sort", "normal"}) {
    CAPTURE(id);
    CHECK(call({"verify", id, "--alpha", "2,1"}, kCm).code == 0);
  }
  const auto v = call({"toric", "verify-gb"},
                      R"({"n": 4, "monomials": ["x1^2*x2", "x1*x2*x4", "x1*x3", "x2*x3^2", "x2*x4^2"],
                          "binomials": ["y1*y5 - y2^2"]})");
  CHECK(v.json()["verdict"] == true);
}

TEST_CASE("cli: golden examples and sweeps") {
  CHECK(call({"paper-examples"}).code == 0);
  const auto s = call({"sweep", "--suite", "normal", "--count", "3", "--seed", "9"});
  CHECK(s.code == 0);
  CHECK(s.json()["result"]["suites"][0]["verified"] == 3);
  CHECK(s.out == call({"sweep", "--suite", "normal", "--count", "3", "--seed", "9"}).out);
  CHECK(s.out ==
        call({"sweep", "--suite", "normal", "--count", "3", "--seed", "9", "--threads", "3"}).out);
}

TEST_CASE("cli: reports are deterministic and timing is opt-in") {
  const auto a = call({"toric", "gb", "--alpha", "1,1,1,2"}, kPaperA);
  const auto b = call({"toric", "gb", "--alpha", "1,1,1,2"}, kPaperA);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.json().contains("timing_ms"));
  CHECK(call({"dim", "--timing"}, kCm).json().contains("timing_ms"));
  const auto text = call({"dim", "--format", "text"}, kCm);
  CHECK(text.out.find("verdict: 2") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(call({"dim"}, "{not json").code == 2);
  CHECK(call({"frobnicate"}, kCm).code == 2);
  CHECK(call({"check", "nonsense"}, kCm).code == 2);
  CHECK(call({"dim", "--alpha", "1,1,1"}, kCm).code == 2);
  CHECK(call({"dim", "--no-such-flag"}, kCm).code == 2);
  CHECK(call({"dim"}).code == 2);
  CHECK(call({"expand"}, kCm).code == 2);
  const auto invalid = call({"dim"}, R"({"n": 2, "monomials": ["x1*x3"]})");
  CHECK(invalid.code == 2);
  CHECK(invalid.json()["error"]["message"].get<std::string>().find("at byte") != std::string::npos);

  const auto budget = call({"toric", "gb", "--alpha", "2,2,2,2", "--budget", "1"}, kPaperA);
  CHECK(budget.code == 3);
  CHECK(budget.json()["error"]["kind"] == "budget-exhausted");

  setenv("EXPANSIO_BUDGET", "1", 1);
  CHECK(call({"toric", "gb", "--alpha", "2,2,2,2"}, kPaperA).code == 3);
  setenv("EXPANSIO_BUDGET", "zero", 1);
  CHECK(call({"toric", "gb"}, kPaperA).code == 2);
  unsetenv("EXPANSIO_BUDGET");
}
