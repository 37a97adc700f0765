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


#include "expanse/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <map>
#include <memory>
#include <new>
#include <sstream>

#include "CLI11.hpp"
#include "expanse/document.hpp"
#include "expanse/expansion.hpp"
#include "expanse/format.hpp"
#include "expanse/ideal_props.hpp"
#include "expanse/polymatroid.hpp"
#include "expanse/semigroup.hpp"
#include "expanse/sortable.hpp"
#include "expanse/sweep.hpp"
#include "expanse/toric.hpp"

namespace expanse {

namespace {

struct Options {
  std::string command;
  std::string action;
  std::string input;
  std::string alpha;
  std::string format = "json";
  bool timing = false;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t bound = 12;
  std::optional<int> k;
  std::size_t degree = 0;
  std::string vars;
  std::string suite = "all";
  unsigned threads = 1;
  std::size_t maxSize = 40;
};

struct Context {
  Options opt;
  std::optional<ConfigDocument> doc;
  std::optional<ExpansionShape> alpha;
  BuchbergerOptions buchberger;
  std::string digest;

  const ConfigDocument& document() const {
    if (!doc) fail(ErrorKind::InvalidInput, "this command needs --input");
    return *doc;
  }
  const ExpansionShape& requireAlpha() const {
    if (!alpha) fail(ErrorKind::InvalidInput, "this command needs --alpha");
    return *alpha;
  }
};

struct Outcome {
  Json verdict;
  Json result = Json::object();
  bool violated = false;
};

std::string sha256(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::InvariantViolation, "SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int k = 0; k < len; ++k) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  }
  return "sha256:" + hex.str();
}

// ---- configuration helpers -------------------------------------------------

MonomialSet baseSet(const Context& ctx) {
  const auto& doc = ctx.document();
  return MonomialSet(doc.n, doc.monomials);
}

// Ranking of the x-variables, lifted blockwise through alpha when present.
std::vector<std::size_t> ranking(const Context& ctx, bool expanded) {
  const auto& doc = ctx.document();
  std::vector<std::size_t> base(doc.n);
  std::iota(base.begin(), base.end(), std::size_t{0});
  if (doc.order) base = *doc.order;
  if (!expanded || !ctx.alpha) return base;
  std::vector<std::size_t> out;
  for (std::size_t i : base) {
    for (int j = 0; j < ctx.alpha->blockSize(i); ++j) {
      out.push_back(ctx.alpha->flatIndex(i, static_cast<std::size_t>(j)));
    }
  }
  return out;
}

struct Working {
  MonomialSet set;
  ExpansionShape shape;
  TermOrder order;
};

Working working(const Context& ctx) {
  const MonomialSet base = baseSet(ctx);
  if (!ctx.alpha) {
    return {base, ExpansionShape::identity(base.ambientDim()),
            TermOrder::inducedSharp(TermOrder::lex(ranking(ctx, false)), base)};
  }
  auto expanded = expandSet(base, *ctx.alpha);
  TermOrder order = TermOrder::inducedSharp(TermOrder::lex(ranking(ctx, true)), expanded.vectors);
  return {std::move(expanded.vectors), *ctx.alpha, std::move(order)};
}

MonomialIdeal baseIdeal(const Context& ctx) {
  const auto& doc = ctx.document();
  return MonomialIdeal(doc.n, doc.monomials);
}

MonomialIdeal workingIdeal(const Context& ctx) {
  MonomialIdeal ideal = baseIdeal(ctx);
  return ctx.alpha ? expandIdeal(ideal, *ctx.alpha) : ideal;
}

ExpansionShape idealShape(const Context& ctx) {
  return ctx.alpha ? *ctx.alpha : ExpansionShape::identity(ctx.document().n);
}

bool usesDefaultOrder(const Context& ctx) {
  const auto& doc = ctx.document();
  if (!doc.order) return true;
  for (std::size_t k = 0; k < doc.order->size(); ++k) {
    if ((*doc.order)[k] != k) return false;
  }
  return true;
}

Json textList(const MonomialSet& set, const ExpansionShape& shape) {
  Json out = Json::array();
  for (const auto& u : set) out.push_back(monomialText(u, shape));
  return out;
}

Json indexList(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

Json exchangeJson(const ExchangeWitness& w, const ExpansionShape& shape) {
  return Json{{"u", monomialText(w.u, shape)},
              {"v", monomialText(w.v, shape)},
              {"variable", shape.variableName(w.i)}};
}

Json certificateJson(const SheddingCertificate& c, const ExpansionShape& shape) {
  Json out = Json::object();
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(monomialText(g, shape));
  out["generators"] = gens;
  if (!c.shedding) {
    out["shedding"] = nullptr;
    return out;
  }
  out["shedding"] = monomialText(*c.shedding, shape);
  out["upper"] = c.upper ? certificateJson(*c.upper, shape) : Json(nullptr);
  out["lower"] = c.lower ? certificateJson(*c.lower, shape) : Json(nullptr);
  return out;
}

std::vector<YBinomial> documentBinomials(const Context& ctx, const MonomialSet& set,
                                         const TermOrder& order) {
  std::vector<YBinomial> out;
  for (const auto& text : ctx.document().binomials) {
    auto [p, q] = parseBinomial(text, set.size());
    if (auto b = makeBinomial(p, q, order)) out.push_back(std::move(*b));
  }
  return out;
}

// ---- commands --------------------------------------------------------------

Outcome cmdExpand(Context& ctx) {
  const auto& doc = ctx.document();
  const ExpansionShape& alpha = ctx.requireAlpha();
  MonomialSet expanded = doc.kind == DocumentKind::Ideal ? expandIdeal(baseIdeal(ctx), alpha).gens()
                         : doc.kind == DocumentKind::Bases
                             ? expandBases(BaseSet(baseSet(ctx)), alpha).bases()
                             : expandSet(baseSet(ctx), alpha).vectors;
  Json document = Json::object();
  document["n"] = alpha.totalDim();
  document["kind"] = toString(doc.kind);
  Json rows = Json::array();
  for (const auto& u : expanded) rows.push_back(vectorJson(u));
  document["monomials"] = rows;
  if (doc.order) document["order"] = indexList(ranking(ctx, true));
  Outcome o;
  o.verdict = expanded.size();
  o.result["variables"] = [&] {
    Json v = Json::array();
    for (std::size_t f = 0; f < alpha.totalDim(); ++f) v.push_back(alpha.variableName(f));
    return v;
  }();
  o.result["monomials"] = textList(expanded, alpha);
  o.result["document"] = document;
  return o;
}

Outcome cmdCheck(Context& ctx) {
  const MonomialIdeal ideal = workingIdeal(ctx);
  const ExpansionShape shape = idealShape(ctx);
  SearchLimits limits;
  Outcome o;
  o.result["generators"] = textList(ideal.gens(), shape);
  const auto& a = ctx.opt.action;
  if (a == "polymatroidal") {
    const bool poly = isPolymatroidal(ideal);
    o.verdict = poly;
    const auto why = validateBaseSet(ideal.gens());
    if (!poly && !why.valid) {
      o.result["reason"] = why.reason;
      if (why.witness) o.result["witness"] = exchangeJson(*why.witness, shape);
    }
  } else if (a == "weakly-polymatroidal") {
    auto order = findWeaklyPolymatroidalOrder(ideal, limits);
    o.verdict = order.has_value();
    if (!order) o.result["witness"] = "no variable order passes; the search was exhaustive";
    if (order) {
      Json names = Json::array();
      for (std::size_t v : *order) names.push_back(shape.variableName(v));
      o.result["variable_order"] = names;
    }
  } else if (a == "linear-quotients") {
    auto order = findLinearQuotientsOrder(ideal, limits);
    o.verdict = order.has_value();
    if (!order) o.result["witness"] = "no generator order passes; the search was exhaustive";
    if (order) {
      Json gens = Json::array();
      for (std::size_t g : *order) gens.push_back(monomialText(ideal.gens()[g], shape));
      o.result["generator_order"] = gens;
    }
  } else {
    const int k = ctx.opt.k.value_or(static_cast<int>(ideal.ambientDim()) - 1);
    auto cert = isKDecomposable(ideal, k, limits);
    o.verdict = cert.has_value();
    o.result["k"] = k;
    if (cert) o.result["certificate"] = certificateJson(*cert, shape);
    if (!cert) o.result["witness"] = "no shedding decomposition exists; the search was exhaustive";
  }
  return o;
}

Json fiberWitnessJson(const FiberWitness& w, const ExpansionShape& shape) {
  Json out = Json::object();
  out["multidegree"] = monomialText(w.multidegree, shape);
  out["degree"] = w.degree;
  out["first"] = vectorJson(w.first);
  out["second"] = vectorJson(w.second);
  return out;
}

Json basisJson(const GroebnerBasis& g, const ExpansionShape& shape) {
  Json out = Json::object();
  out["order"] = g.order().describe();
  out["size"] = g.size();
  out["max_degree"] = g.maxDegree();
  out["elements"] = binomialsJson(g.elements(), g.configuration(), shape);
  return out;
}

Outcome cmdToric(Context& ctx) {
  const auto& a = ctx.opt.action;
  Outcome o;
  if (a == "expand-gb") {
    const ExpansionShape& alpha = ctx.requireAlpha();
    if (!usesDefaultOrder(ctx)) {
      fail(ErrorKind::Unsupported, "expand-gb works under the default induced lex order");
    }
    const MonomialSet base = baseSet(ctx);
    const GroebnerBasis small = toricGB(base, inducedLex(base), ctx.buchberger);
    const GroebnerBasis lifted = expandGB(base, small, alpha, ctx.buchberger);
    o.verdict = lifted.size();
    o.result["members"] = textList(lifted.configuration(), alpha);
    o.result["basis"] = basisJson(lifted, alpha);
    return o;
  }
  const Working w = working(ctx);
  o.result["members"] = textList(w.set, w.shape);
  if (a == "gb") {
    const GroebnerBasis g = toricGB(w.set, w.order, ctx.buchberger);
    o.verdict = g.size();
    o.result["basis"] = basisJson(g, w.shape);
  } else if (a == "verify-gb") {
    const auto candidate = documentBinomials(ctx, w.set, w.order);
    const GBCheck check = checkGB(candidate, w.set, w.order, ctx.buchberger);
    o.verdict = check.ok();
    o.result["in_ideal"] = check.inIdeal;
    o.result["s_pairs_reduce"] = check.spairsReduce;
    o.result["generates"] = check.generatesIdeal;
    o.result["candidate"] = binomialsJson(candidate, w.set, w.shape);
  } else {
    if (ctx.opt.vars.empty()) fail(ErrorKind::InvalidInput, "contract-gb needs --vars");
    std::vector<std::size_t> subset;
    for (int v : parseIntList(ctx.opt.vars)) {
      if (static_cast<std::size_t>(v) > w.set.ambientDim()) {
        fail(ErrorKind::InvalidInput, "--vars entry out of range");
      }
      subset.push_back(static_cast<std::size_t>(v) - 1);
    }
    const GroebnerBasis g = toricGB(w.set, w.order, ctx.buchberger);
    const GroebnerBasis sub = contractGB(g, subset);
    o.verdict = sub.size();
    o.result["subconfiguration"] = textList(sub.configuration(), w.shape);
    o.result["basis"] = basisJson(sub, w.shape);
  }
  return o;
}

Outcome cmdWhite(Context& ctx) {
  const auto& a = ctx.opt.action;
  Outcome o;
  const BaseSet base(baseSet(ctx));
  if (a == "theorem-main") {
    const ExpansionShape& alpha = ctx.requireAlpha();
    const auto check = verifyTheoremMain(base, alpha, ctx.buchberger);
    o.verdict = check.holds();
    o.violated = !check.holds();
    o.result["premise"] = check.premise;
    o.result["conclusion"] = check.premise ? Json(check.conclusion) : Json(nullptr);
    return o;
  }
  const Working w = working(ctx);
  const BaseSet bases(w.set);
  o.result["bases"] = textList(w.set, w.shape);
  if (a == "check") {
    const bool white = checkWhite(bases, w.order, ctx.buchberger);
    o.verdict = white;
    if (!white) {
      const FiberReport r = fiberConnectedOracle(bases, 0, 2'000'000, ctx.buchberger);
      if (r.witness) o.result["witness"] = fiberWitnessJson(*r.witness, w.shape);
    }
    o.result["swap_quadrics"] = binomialsJson(swapQuadrics(bases, w.order), w.set, w.shape);
    o.result["basis"] = basisJson(toricGB(w.set, w.order, ctx.buchberger), w.shape);
  } else {
    const FiberReport r = fiberConnectedOracle(bases, ctx.opt.degree, 2'000'000, ctx.buchberger);
    o.verdict = r.connected;
    o.result["degree_bound"] = r.degreeBound;
    o.result["fibers_checked"] = r.fibersChecked;
    if (r.witness) o.result["witness"] = fiberWitnessJson(*r.witness, w.shape);
  }
  return o;
}

Outcome cmdSortable(Context& ctx) {
  const auto& a = ctx.opt.action;
  Outcome o;
  if (a == "theorem-sort") {
    const auto check = verifyTheoremSort(baseSet(ctx), ctx.requireAlpha());
    o.verdict = check.holds();
    o.violated = !check.holds();
    o.result["base"] = check.base;
    o.result["expanded"] = check.expanded;
    return o;
  }
  const Working w = working(ctx);
  o.result["members"] = textList(w.set, w.shape);
  if (a == "check") {
    const auto r = isSortable(w.set);
    o.verdict = r.sortable;
    if (r.witness) {
      o.result["witness"] = Json::array({monomialText(r.witness->first, w.shape),
                                         monomialText(r.witness->second, w.shape)});
      o.result["image"] = Json::array({monomialText(r.image->first, w.shape),
                                       monomialText(r.image->second, w.shape)});
    }
  } else {
    const auto relations = sortingRelations(w.set, w.order);
    o.verdict = relations.size();
    o.result["relations"] = binomialsJson(relations, w.set, w.shape);
  }
  return o;
}

Json verdictJson(const NormalityVerdict& v, const ExpansionShape& shape) {
  Json out = Json::object();
  out["bound"] = v.bound;
  out["normal_up_to_bound"] = v.normalUpToBound();
  if (v.witness) {
    out["witness"] = vectorJson(*v.witness);
    out["witness_monomial"] = monomialText(*v.witness, shape);
  }
  return out;
}

Outcome cmdNormal(Context& ctx) {
  Outcome o;
  if (ctx.opt.action == "theorem-normal") {
    const ExpansionShape& alpha = ctx.requireAlpha();
    const auto check = verifyTheoremNormal(baseSet(ctx), alpha, ctx.opt.bound);
    o.verdict = check.holds();
    o.violated = !check.holds();
    o.result["base"] = verdictJson(check.base, ExpansionShape::identity(alpha.baseDim()));
    o.result["expanded"] = verdictJson(check.expanded, alpha);
    o.result["lifted_witness_fails"] = check.liftedWitnessFails;
    o.result["contracted_witness_fails"] = check.contractedWitnessFails;
    return o;
  }
  const Working w = working(ctx);
  const auto v = isNormalUpTo(w.set, ctx.opt.bound);
  o.verdict = v.normalUpToBound() ? "NormalUpTo(" + std::to_string(v.bound) + ")"
                                  : "NotNormal(" + v.witness->toString() + ")";
  o.result = verdictJson(v, w.shape);
  return o;
}

Outcome cmdDim(Context& ctx) {
  const Working w = working(ctx);
  Outcome o;
  o.verdict = krullDimension(w.set);
  o.result["members"] = textList(w.set, w.shape);
  return o;
}

// ---- verify ----------------------------------------------------------------

Outcome sides(Json base, Json expanded, bool holds) {
  Outcome o;
  o.verdict = holds;
  o.violated = !holds;
  o.result["base"] = std::move(base);
  o.result["expanded"] = std::move(expanded);
  return o;
}

Outcome verifyGrobExp(Context& ctx) {
  const ExpansionShape& alpha = ctx.requireAlpha();
  if (!usesDefaultOrder(ctx)) {
    fail(ErrorKind::Unsupported, "grob-exp works under the default induced lex order");
  }
  const MonomialSet base = baseSet(ctx);
  const GroebnerBasis small = toricGB(base, inducedLex(base), ctx.buchberger);
  const auto expanded = expandSet(base, alpha);
  const GroebnerBasis direct =
      toricGB(expanded.vectors, inducedLex(expanded.vectors), ctx.buchberger);
  const GroebnerBasis lifted = expandGB(base, small, alpha, ctx.buchberger);
  bool holds = lifted.elements() == direct.elements();
  Outcome o;
  o.result["base_basis"] = basisJson(small, ExpansionShape::identity(base.ambientDim()));
  std::size_t split = alpha.baseDim();
  std::size_t grown = 0;
  for (std::size_t i = 0; i < alpha.baseDim(); ++i) {
    if (alpha.blockSize(i) > 1) {
      ++grown;
      split = i;
    }
  }
  if (grown == 1 && alpha.blockSize(split) == 2) {
    const auto step = expandGBSingleSplit(base, small, split, ctx.buchberger);
    const bool isGB = verifyGB(step.combined, step.expanded.vectors,
                               inducedLex(step.expanded.vectors), ctx.buchberger);
    holds = holds && isGB;
    o.result["G0"] = binomialsJson(step.swaps, step.expanded.vectors, alpha);
    o.result["G1"] = binomialsJson(step.lifts, step.expanded.vectors, alpha);
    o.result["union_is_groebner_basis"] = isGB;
  }
  o.result["lifted_basis"] = basisJson(lifted, alpha);
  o.result["matches_direct"] = lifted.elements() == direct.elements();
  o.verdict = holds;
  o.violated = !holds;
  return o;
}

Outcome verifyPi0(Context& ctx) {
  const ExpansionShape& alpha = ctx.requireAlpha();
  const MonomialSet base = baseSet(ctx);
  const TermOrder order = inducedLex(base);
  const auto expanded = expandSet(base, alpha);
  const GroebnerBasis big = toricGB(expanded.vectors, inducedLex(expanded.vectors), ctx.buchberger);
  std::vector<YBinomial> flattened;
  bool inIdeal = true;
  for (const auto& g : big.elements()) {
    auto f = flattenBinomial(g, expanded, base, order);
    if (!f) continue;
    inIdeal = inIdeal && kernelTest(*f, base);
    flattened.push_back(std::move(*f));
  }
  std::sort(flattened.begin(), flattened.end());
  flattened.erase(std::unique(flattened.begin(), flattened.end()), flattened.end());
  sortBinomials(flattened, order);
  const bool gens = inIdeal && generates(flattened, base, order, ctx.buchberger);
  Outcome o;
  o.verdict = inIdeal && gens;
  o.violated = !(inIdeal && gens);
  o.result["expanded_basis_size"] = big.size();
  o.result["flattened"] = binomialsJson(flattened, base, ExpansionShape::identity(base.ambientDim()));
  o.result["flattened_in_ideal"] = inIdeal;
  o.result["flattened_generate"] = gens;
  return o;
}

Outcome verifyOhhGrob(Context& ctx) {
  const ExpansionShape& alpha = ctx.requireAlpha();
  const MonomialSet base = baseSet(ctx);
  const auto expanded = expandSet(base, alpha);
  const GroebnerBasis big = toricGB(expanded.vectors, inducedLex(expanded.vectors), ctx.buchberger);
  const GroebnerBasis small = toricGB(base, inducedLex(base), ctx.buchberger);
  const auto restricted = contractToBase(big, alpha, base, small.order());
  const bool holds = restricted == small.elements();
  const ExpansionShape id = ExpansionShape::identity(base.ambientDim());
  return sides(binomialsJson(small.elements(), base, id), binomialsJson(restricted, base, id),
               holds);
}

Outcome cmdVerify(Context& ctx) {
  const auto& a = ctx.opt.action;
  const ExpansionShape& alpha = ctx.requireAlpha();
  if (a == "grob-exp") return verifyGrobExp(ctx);
  if (a == "pi0") return verifyPi0(ctx);
  if (a == "ohh-grob") return verifyOhhGrob(ctx);
  if (a == "sort") {
    ctx.opt.action = "theorem-sort";
    return cmdSortable(ctx);
  }
  if (a == "normal") {
    ctx.opt.action = "theorem-normal";
    return cmdNormal(ctx);
  }
  if (a == "dim") {
    const MonomialSet base = baseSet(ctx);
    const std::size_t lo = krullDimension(base);
    const std::size_t hi = krullDimension(expandSet(base, alpha).vectors);
    return sides(lo, hi, lo <= hi);
  }
  const MonomialIdeal ideal = baseIdeal(ctx);
  const MonomialIdeal big = expandIdeal(ideal, alpha);
  SearchLimits limits;
  if (a == "poly") {
    const bool p = isPolymatroidal(ideal);
    const bool q = isPolymatroidal(big);
    return sides(p, q, p == q);
  }
  if (a == "wp") {
    const bool p = findWeaklyPolymatroidalOrder(ideal, limits).has_value();
    const bool q = findWeaklyPolymatroidalOrder(big, limits).has_value();
    return sides(p, q, p == q);
  }
  const bool p = findLinearQuotientsOrder(ideal, limits).has_value();
  const bool q = findLinearQuotientsOrder(big, limits).has_value();
  return sides(p, q, p == q);
}

// ---- paper examples --------------------------------------------------------

ExponentVector row(std::initializer_list<Exponent> e) { return ExponentVector(e); }

// Set equality after orienting each pair under `order`.
bool sameUpToSign(const std::vector<YBinomial>& got,
                  const std::vector<std::pair<ExponentVector, ExponentVector>>& want,
                  const TermOrder& order) {
  std::vector<YBinomial> expected;
  for (const auto& [p, q] : want) expected.push_back(*makeBinomial(p, q, order));
  auto a = got;
  std::sort(a.begin(), a.end());
  std::sort(expected.begin(), expected.end());
  return a == expected;
}

// y-exponent vector of a product of members given by their exponent rows.
ExponentVector yProduct(const MonomialSet& set, std::initializer_list<ExponentVector> factors) {
  std::vector<Exponent> e(set.size(), 0);
  for (const auto& f : factors) {
    auto idx = set.indexOf(f);
    if (!idx) fail(ErrorKind::InvariantViolation, "golden monomial missing: " + f.toString());
    ++e[*idx];
  }
  return ExponentVector(std::move(e));
}

Outcome cmdPaperExamples(Context& ctx) {
  Json tests = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool passed, Json detail) {
    all = all && passed;
    tests.push_back(Json{{"name", name}, {"passed", passed}, {"detail", std::move(detail)}});
  };

  {
    const MonomialSet a(4, {row({2, 1, 0, 0}), row({1, 1, 0, 1}), row({1, 0, 1, 0}),
                            row({0, 1, 2, 0}), row({0, 1, 0, 2})});
    const GroebnerBasis g = toricGB(a, inducedLex(a), ctx.buchberger);
    const bool baseOk = sameUpToSign(
        g.elements(),
        {{yProduct(a, {row({2, 1, 0, 0}), row({0, 1, 0, 2})}),
          yProduct(a, {row({1, 1, 0, 1}), row({1, 1, 0, 1})})}},
        g.order());
    const ExpansionShape alpha({1, 1, 1, 2});
    const GroebnerBasis lifted = expandGB(a, g, alpha, ctx.buchberger);
    const MonomialSet& b = lifted.configuration();
    // Columns x1, x2, x3, x4_1, x4_2.
    const auto x12x41 = row({1, 1, 0, 1, 0}), x12x42 = row({1, 1, 0, 0, 1});
    const auto x2x41x42 = row({0, 1, 0, 1, 1}), x2x41sq = row({0, 1, 0, 2, 0});
    const auto x2x42sq = row({0, 1, 0, 0, 2}), x1sqx2 = row({2, 1, 0, 0, 0});
    const std::vector<std::pair<ExponentVector, ExponentVector>> want{
        {yProduct(b, {x12x41, x2x41x42}), yProduct(b, {x12x42, x2x41sq})},
        {yProduct(b, {x2x41sq, x2x42sq}), yProduct(b, {x2x41x42, x2x41x42})},
        {yProduct(b, {x12x41, x2x42sq}), yProduct(b, {x12x42, x2x41x42})},
        {yProduct(b, {x1sqx2, x2x41sq}), yProduct(b, {x12x41, x12x41})},
        {yProduct(b, {x1sqx2, x2x42sq}), yProduct(b, {x12x42, x12x42})},
        {yProduct(b, {x1sqx2, x2x41x42}), yProduct(b, {x12x41, x12x42})},
    };
    const bool liftOk = sameUpToSign(lifted.elements(), want, lifted.order());
    record("groebner-expansion", baseOk && liftOk,
           Json{{"base", binomialsJson(g.elements(), a, ExpansionShape::identity(4))},
                {"expanded", binomialsJson(lifted.elements(), b, alpha)}});
  }
  {
    const ExpansionShape alpha({2, 2});
    const BaseSet bases = expandBases(BaseSet(MonomialSet(2, {row({1, 1})})), alpha);
    const MonomialSet want(4, {row({1, 0, 1, 0}), row({1, 0, 0, 1}), row({0, 1, 1, 0}),
                               row({0, 1, 0, 1})});
    const MonomialSet& got = bases.bases();
    const bool basesOk = got.sorted() == want.sorted();
    const GroebnerBasis g = toricGB(got, inducedLex(got), ctx.buchberger);
    const bool quadricOk =
        basesOk && sameUpToSign(g.elements(),
                                {{yProduct(got, {want[0], want[3]}),
                                  yProduct(got, {want[1], want[2]})}},
                                g.order());
    const bool white = checkWhite(bases, ctx.buchberger);
    record("polymatroid-singleton", basesOk && quadricOk && white,
           Json{{"bases", textList(got, alpha)},
                {"basis", binomialsJson(g.elements(), got, alpha)},
                {"white", white}});
  }
  {
    const MonomialSet a(2, {row({3, 0}), row({2, 1}), row({0, 3})});
    const ExpansionShape alpha({2, 2});
    const std::size_t lo = krullDimension(a);
    const std::size_t hi = krullDimension(expandSet(a, alpha).vectors);
    record("dimension", lo == 2 && hi == 4, Json{{"base", lo}, {"expanded", hi}});
  }
  Outcome o;
  o.verdict = all;
  o.violated = !all;
  o.result["tests"] = tests;
  return o;
}

// ---- sweep -----------------------------------------------------------------

Outcome cmdSweep(Context& ctx) {
  SweepConfig config;
  config.seed = ctx.opt.seed;
  config.count = ctx.opt.count;
  config.threads = std::max(1u, ctx.opt.threads);
  config.buchberger = ctx.buchberger;
  config.maxExpandedSize = ctx.opt.maxSize;
  config.normalityBound = ctx.opt.bound;
  std::vector<std::string> names;
  if (ctx.opt.suite == "all") {
    names = suiteNames();
  } else {
    names.push_back(ctx.opt.suite);
  }
  Json suites = Json::array();
  bool passed = true;
  for (const auto& name : names) {
    const SuiteReport r = runSuite(name, config);
    passed = passed && r.passed();
    Json tallies = Json::object();
    for (const auto& [k, v] : r.tallies) tallies[k] = v;
    suites.push_back(Json{{"suite", r.name},
                          {"passed", r.passed()},
                          {"draws", r.draws},
                          {"verified", r.verified},
                          {"skipped", r.skipped},
                          {"violations", r.violations},
                          {"tallies", tallies},
                          {"failures", r.failures}});
  }
  Outcome o;
  o.verdict = passed;
  o.violated = !passed;
  o.result["config"] = Json{{"seed", config.seed},
                            {"count", config.count},
                            {"draw_factor", config.drawFactor},
                            {"pair_budget", config.buchberger.pairBudget},
                            {"max_variables", config.limits.maxVariables},
                            {"max_generators", config.limits.maxGenerators},
                            {"max_states", config.limits.maxStates},
                            {"max_expanded_size", config.maxExpandedSize},
                            {"normality_bound", config.normalityBound}};
  o.result["suites"] = suites;
  return o;
}

// ---- dispatch --------------------------------------------------------------

struct Command {
  std::vector<std::string> actions;  // empty: no action; first entry is the default
  bool needsInput = true;
  bool actionRequired = true;
  std::function<Outcome(Context&)> run;
};

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"expand", {{}, true, false, cmdExpand}},
      {"check",
       {{"polymatroidal", "weakly-polymatroidal", "linear-quotients", "k-decomposable"},
        true,
        true,
        cmdCheck}},
      {"toric", {{"gb", "expand-gb", "verify-gb", "contract-gb"}, true, true, cmdToric}},
      {"white", {{"check", "oracle", "theorem-main"}, true, true, cmdWhite}},
      {"sortable", {{"check", "relations", "theorem-sort"}, true, true, cmdSortable}},
      {"normal", {{"check", "theorem-normal"}, true, false, cmdNormal}},
      {"dim", {{}, true, false, cmdDim}},
      {"verify",
       {{"poly", "wp", "lq", "pi0", "ohh-grob", "grob-exp", "sort", "normal", "dim"},
        true,
        true,
        cmdVerify}},
      {"paper-examples", {{}, false, false, cmdPaperExamples}},
      {"sweep", {{}, false, false, cmdSweep}},
  };
  return table;
}

int exitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchTooLarge:
    case ErrorKind::BudgetExhausted:
      return 3;
    case ErrorKind::InvariantViolation:
      return 1;
    default:
      return 2;
  }
}

std::string statusFor(int code) {
  switch (code) {
    case 0: return "ok";
    case 1: return "violation";
    case 3: return "exhausted";
    default: return "invalid";
  }
}

std::string scalarText(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void renderText(const Json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    const bool flat = v.is_primitive() ||
                      (v.is_array() && std::all_of(v.begin(), v.end(),
                                                   [](const Json& x) { return x.is_primitive(); }));
    if (!flat) {
      out << indent << key << ":\n";
      renderText(v, indent + "  ", out);
    } else if (v.is_array()) {
      if (v.empty()) {
        out << indent << key << ": (none)\n";
        continue;
      }
      if (std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
        out << indent << key << ": " << v.dump() << "\n";
        continue;
      }
      out << indent << key << ":\n";
      for (const auto& x : v) out << indent << "  " << scalarText(x) << "\n";
    } else {
      out << indent << key << ": " << scalarText(v) << "\n";
    }
  }
}

std::string readInput(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidInput, "cannot read input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::size_t budgetFromEnv() {
  const char* env = std::getenv("EXPANSIO_BUDGET");
  if (!env) return BuchbergerOptions{}.pairBudget;
  std::size_t value = 0;
  const std::string text(env);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 18) {
    fail(ErrorKind::InvalidInput, "EXPANSIO_BUDGET must be a positive integer");
  }
  value = std::stoull(text);
  if (value == 0) fail(ErrorKind::InvalidInput, "EXPANSIO_BUDGET must be a positive integer");
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Expansion functor toolkit for monomial ideals and toric rings", "expanse"};
  app.add_option("command", opt.command, "expand|check|toric|white|sortable|normal|dim|verify|"
                                         "paper-examples|sweep")
      ->required();
  app.add_option("action", opt.action, "subcommand of the command");
  app.add_option("-i,--input", opt.input, "input document, '-' for stdin");
  app.add_option("-a,--alpha", opt.alpha, "expansion, e.g. 1,1,2");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opt.timing, "add wall-clock time to the report");
  app.add_option("--budget", opt.budget, "S-pair budget (overrides EXPANSIO_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "sweep seed");
  app.add_option("--count", opt.count, "verified instances per randomized suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound, "normality degree bound")->check(CLI::PositiveNumber);
  app.add_option("--k", opt.k, "k for k-decomposable (default n-1)")->check(CLI::NonNegativeNumber);
  app.add_option("--degree", opt.degree, "fiber degree bound for the oracle (0: GB degree)");
  app.add_option("--vars", opt.vars, "variable subset for contract-gb, e.g. 1,3");
  app.add_option("--suite", opt.suite, "sweep suite or 'all'");
  app.add_option("--threads", opt.threads, "sweep worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-size", opt.maxSize, "sweep cap on expanded configuration size")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "expanse: " << e.what() << "\n";
    return 2;
  }

  Json report = Json::object();
  report["tool"] = "expanse";
  report["version"] = kToolVersion;
  report["command"] = opt.action.empty() ? opt.command : opt.command + " " + opt.action;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto found = commands().find(opt.command);
    if (found == commands().end()) {
      fail(ErrorKind::InvalidInput, "unknown command '" + opt.command + "'");
    }
    const Command& cmd = found->second;
    if (cmd.actions.empty() && !opt.action.empty()) {
      fail(ErrorKind::InvalidInput, "'" + opt.command + "' takes no subcommand");
    }
    if (!cmd.actions.empty()) {
      if (opt.action.empty()) {
        if (cmd.actionRequired) {
          fail(ErrorKind::InvalidInput, "'" + opt.command + "' needs a subcommand");
        }
        opt.action = cmd.actions.front();
      } else if (std::find(cmd.actions.begin(), cmd.actions.end(), opt.action) ==
                 cmd.actions.end()) {
        fail(ErrorKind::InvalidInput,
             "unknown subcommand '" + opt.action + "' for '" + opt.command + "'");
      }
    }

    Context ctx;
    ctx.opt = opt;
    ctx.buchberger.pairBudget = opt.budget ? *opt.budget : budgetFromEnv();
    if (!opt.input.empty()) {
      const std::string bytes = readInput(opt.input, in);
      report["input_digest"] = sha256(bytes);
      ctx.doc = parseDocument(bytes);
    } else if (cmd.needsInput) {
      fail(ErrorKind::InvalidInput, "this command needs --input");
    } else {
      report["input_digest"] = nullptr;
    }
    if (!opt.alpha.empty()) {
      ctx.alpha = ExpansionShape(parseIntList(opt.alpha));
    } else if (ctx.doc && ctx.doc->alpha) {
      ctx.alpha = ExpansionShape(*ctx.doc->alpha);
    }
    if (ctx.alpha && ctx.doc && ctx.alpha->baseDim() != ctx.doc->n) {
      fail(ErrorKind::DimensionMismatch, "alpha has " + std::to_string(ctx.alpha->baseDim()) +
                                             " entries but n = " + std::to_string(ctx.doc->n));
    }
    report["alpha"] = ctx.alpha ? Json(ctx.alpha->blockSizes()) : Json(nullptr);

    Outcome outcome = cmd.run(ctx);
    code = outcome.violated ? 1 : 0;
    report["status"] = statusFor(code);
    report["verdict"] = std::move(outcome.verdict);
    report["result"] = std::move(outcome.result);
  } catch (const Error& e) {
    code = exitCode(e.kind());
    report["status"] = statusFor(code);
    report["error"] = Json{{"kind", std::string(toString(e.kind()))}, {"message", e.what()}};
    err << "expanse: " << toString(e.kind()) << ": " << e.what() << "\n";
  } catch (const std::bad_alloc&) {
    code = 3;
    report["status"] = statusFor(code);
    report["error"] = Json{{"kind", std::string(toString(ErrorKind::BudgetExhausted))}, {"message", "out of memory"}};
    err << "expanse: out of memory\n";
  }
  if (opt.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  if (opt.format == "text") {
    renderText(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace expanse
