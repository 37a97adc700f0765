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

#include "expanse/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace expanse {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Unsupported: return "unsupported-input";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::SearchTooLarge: return "search-too-large";
    case ErrorKind::BudgetExhausted: return "budget-exhausted";
    case ErrorKind::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

namespace {

Exponent checkedAdd(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, "exponent overflow in addition");
  }
  return out;
}

void requireNonnegative(std::span<const Exponent> entries) {
  for (Exponent e : entries) {
    if (e < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries)
    : entries_(entries) {
  requireNonnegative(entries_);
}

ExponentVector::ExponentVector(std::vector<Exponent> entries)
    : entries_(std::move(entries)) {
  requireNonnegative(entries_);
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) fail(ErrorKind::DimensionMismatch, "unit index out of range");
  ExponentVector u(dim);
  u.entries_[index] = 1;
  return u;
}

std::int64_t ExponentVector::modulus() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ExponentVector::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 0) s.push_back(i);
  }
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  requireSameDim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  requireSameDim(*this, other);
  ExponentVector out(dim());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = checkedAdd(entries_[i], other.entries_[i]);
  }
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  requireSameDim(*this, other);
  ExponentVector out(dim());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (other.entries_[i] > entries_[i]) {
      fail(ErrorKind::PreconditionViolation, "subtraction leaves Z^n_+");
    }
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

ExponentVector ExponentVector::scaled(Exponent factor) const {
  if (factor < 0) fail(ErrorKind::PreconditionViolation, "negative scale factor");
  ExponentVector out(dim());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (__builtin_mul_overflow(entries_[i], factor, &out.entries_[i])) {
      fail(ErrorKind::Overflow, "exponent overflow in scaling");
    }
  }
  return out;
}

ExponentVector ExponentVector::shifted(std::size_t i, Exponent delta) const {
  if (i >= dim()) fail(ErrorKind::DimensionMismatch, "index out of range");
  ExponentVector out = *this;
  out.entries_[i] = checkedAdd(out.entries_[i], delta);
  if (out.entries_[i] < 0) {
    fail(ErrorKind::PreconditionViolation, "shift leaves Z^n_+");
  }
  return out;
}

std::string ExponentVector::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& u) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : u.entries()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 0x100000001b3ull;
  }
  return h;
}

void requireSameDim(const ExponentVector& a, const ExponentVector& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorKind::DimensionMismatch,
         "dimension mismatch: " + std::to_string(a.dim()) + " vs " +
             std::to_string(b.dim()));
  }
}

ExponentVector quotientByGcd(const ExponentVector& u, const ExponentVector& v) {
  requireSameDim(u, v);
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::max(u[i] - v[i], 0);
  return ExponentVector(std::move(out));
}

ExponentVector lcm(const ExponentVector& u, const ExponentVector& v) {
  requireSameDim(u, v);
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::max(u[i], v[i]);
  return ExponentVector(std::move(out));
}

ExponentVector gcd(const ExponentVector& u, const ExponentVector& v) {
  requireSameDim(u, v);
  std::vector<Exponent> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::min(u[i], v[i]);
  return ExponentVector(std::move(out));
}

// ---------------------------------------------------------------------------

MonomialSet::MonomialSet(std::size_t ambientDim, std::vector<ExponentVector> members)
    : ambientDim_(ambientDim), members_(std::move(members)) {
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& u : members_) {
    if (u.dim() != ambientDim_) {
      fail(ErrorKind::DimensionMismatch, "member " + u.toString() +
                                             " does not have ambient dimension " +
                                             std::to_string(ambientDim_));
    }
    if (!seen.insert(u).second) {
      fail(ErrorKind::InvalidInput, "duplicate member " + u.toString());
    }
  }
  for (std::size_t i = 0; i < members_.size() && divisMinimal_; ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && members_[i].divides(members_[j])) {
        divisMinimal_ = false;
        break;
      }
    }
  }
}

std::optional<std::size_t> MonomialSet::indexOf(const ExponentVector& u) const {
  auto it = std::find(members_.begin(), members_.end(), u);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool MonomialSet::equigenerated() const {
  return std::all_of(members_.begin(), members_.end(), [&](const ExponentVector& u) {
    return u.modulus() == members_.front().modulus();
  });
}

MonomialSet MonomialSet::sorted() const {
  auto copy = members_;
  std::sort(copy.begin(), copy.end(), std::greater<>());
  return MonomialSet(ambientDim_, std::move(copy));
}

bool operator==(const MonomialSet& a, const MonomialSet& b) {
  if (a.ambientDim_ != b.ambientDim_ || a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const ExponentVector& u) { return b.contains(u); });
}

MonomialSet minimalize(std::size_t ambientDim, std::span<const ExponentVector> vectors) {
  std::vector<ExponentVector> kept;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dim() != ambientDim) {
      fail(ErrorKind::DimensionMismatch, "mixed ambient dimensions");
    }
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& u = vectors[i];
    bool dominated = false;
    for (std::size_t j = 0; j < vectors.size() && !dominated; ++j) {
      if (i == j) continue;
      // Strictly below, or an equal copy that occurs earlier.
      if (vectors[j].divides(u) && (vectors[j] != u || j < i)) dominated = true;
    }
    if (!dominated) kept.push_back(u);
  }
  return MonomialSet(ambientDim, std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::size_t ambientDim,
                             std::span<const ExponentVector> generators)
    : gens_(minimalize(ambientDim, generators).sorted()) {}

bool idealContains(const MonomialIdeal& ideal, const ExponentVector& u) {
  if (u.dim() != ideal.ambientDim()) {
    fail(ErrorKind::DimensionMismatch, "membership test dimension mismatch");
  }
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const ExponentVector& g) { return g.divides(u); });
}

// ---------------------------------------------------------------------------

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)), rankOf_(ranking_.size()) {
  std::vector<bool> seen(ranking_.size(), false);
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    std::size_t v = ranking_[r];
    if (v >= ranking_.size() || seen[v]) {
      fail(ErrorKind::InvalidInput, "variable ranking is not a permutation");
    }
    seen[v] = true;
    rankOf_[v] = r;
  }
}

TermOrder TermOrder::lex(std::size_t dim) {
  std::vector<std::size_t> ranking(dim);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  return TermOrder(Kind::Lex, std::move(ranking));
}

TermOrder TermOrder::lex(std::vector<std::size_t> ranking) {
  return TermOrder(Kind::Lex, std::move(ranking));
}

TermOrder TermOrder::elimination(const TermOrder& yOrder, const TermOrder& xOrder) {
  const std::size_t m = yOrder.dim();
  std::vector<std::size_t> ranking;
  ranking.reserve(m + xOrder.dim());
  for (std::size_t v : xOrder.ranking()) ranking.push_back(m + v);
  for (std::size_t v : yOrder.ranking()) ranking.push_back(v);
  TermOrder order(Kind::Elimination, std::move(ranking));
  order.graded_ = xOrder.dim();
  return order;
}

TermOrder TermOrder::inducedSharp(const TermOrder& baseOrder,
                                  const MonomialSet& configuration) {
  if (baseOrder.dim() != configuration.ambientDim()) {
    fail(ErrorKind::DimensionMismatch, "base order does not match configuration");
  }
  std::vector<std::size_t> ranking(configuration.size());
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  std::sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
    return baseOrder.compare(configuration[a], configuration[b]) > 0;
  });
  return TermOrder(Kind::InducedSharp, std::move(ranking));
}

TermOrder TermOrder::restrictedTo(std::span<const std::size_t> vars) const {
  if (graded_ > 0) fail(ErrorKind::Unsupported, "cannot restrict an elimination order");
  std::vector<std::size_t> local(dim(), dim());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] >= dim() || local[vars[k]] != dim()) {
      fail(ErrorKind::InvalidInput, "restriction variables must be distinct and in range");
    }
    local[vars[k]] = k;
  }
  std::vector<std::size_t> ranking;
  ranking.reserve(vars.size());
  for (std::size_t v : ranking_) {
    if (local[v] != dim()) ranking.push_back(local[v]);
  }
  return TermOrder(kind_, std::move(ranking));
}

std::strong_ordering TermOrder::compare(std::span<const Exponent> a,
                                        std::span<const Exponent> b) const {
  if (graded_ > 0) {
    std::int64_t da = 0, db = 0;
    for (std::size_t r = 0; r < graded_; ++r) {
      da += a[ranking_[r]];
      db += b[ranking_[r]];
    }
    if (da != db) return da <=> db;
    for (std::size_t r = graded_; r-- > 0;) {
      const std::size_t v = ranking_[r];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    for (std::size_t r = graded_; r < ranking_.size(); ++r) {
      const std::size_t v = ranking_[r];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v : ranking_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const ExponentVector& a,
                                        const ExponentVector& b) const {
  requireSameDim(a, b);
  if (a.dim() != dim()) fail(ErrorKind::DimensionMismatch, "order dimension mismatch");
  return compare(a.entries(), b.entries());
}

std::string TermOrder::describe() const {
  std::string s;
  switch (kind_) {
    case Kind::Lex: s = "lex"; break;
    case Kind::Elimination: s = "elimination"; break;
    case Kind::InducedSharp: s = "induced-lex"; break;
  }
  s += "[";
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    if (r) s += ">";
    s += std::to_string(ranking_[r]);
  }
  return s + "]";
}

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             const TermOrder& order) {
  return order.compare(a, b);
}

}  // namespace expanse
