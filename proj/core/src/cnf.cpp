// Copyright 2026 The twomus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twomus/cnf.hpp"

#include <algorithm>
#include <unordered_set>

#include "twomus/errors.hpp"

namespace twomus {

std::ostream& operator<<(std::ostream& os, Literal x) { return os << x.code(); }

Clause::Clause(Literal a) : lits_{a, Literal{}}, size_(1) {
  if (!a.valid()) throw PreconditionError("clause literal 0");
}

Clause::Clause(Literal a, Literal b) {
  if (!a.valid() || !b.valid()) throw PreconditionError("clause literal 0");
  if (a == b) {
    lits_ = {a, Literal{}};
    size_ = 1;
    return;
  }
  if (a == ~b) throw TautologyError("clause contains a literal and its complement");
  if (b.index() < a.index()) std::swap(a, b);
  lits_ = {a, b};
  size_ = 2;
}

Clause Clause::from_literals(std::span<const Literal> lits) {
  std::vector<Literal> distinct;
  for (Literal x : lits) {
    if (!x.valid()) throw PreconditionError("clause literal 0");
    if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (distinct[i] == ~distinct[j])
        throw TautologyError("clause contains a literal and its complement");
  switch (distinct.size()) {
    case 0:
      return Clause{};
    case 1:
      return Clause{distinct[0]};
    case 2:
      return Clause{distinct[0], distinct[1]};
    default:
      throw WidthError("clause has " + std::to_string(distinct.size()) + " distinct literals");
  }
}

Clause Clause::from_codes(std::initializer_list<int> codes) {
  std::vector<Literal> lits;
  for (int c : codes) lits.emplace_back(c);
  return from_literals(lits);
}

bool Clause::contains(Literal x) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (lits_[i] == x) return true;
  return false;
}

bool Clause::contains_var(Var v) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (lits_[i].var() == v) return true;
  return false;
}

std::uint64_t Clause::key() const {
  std::uint64_t k = 0;
  if (size_ >= 1) k |= static_cast<std::uint64_t>(lits_[0].index() + 1) << 32;
  if (size_ >= 2) k |= static_cast<std::uint64_t>(lits_[1].index() + 1);
  return k;
}

std::strong_ordering Clause::operator<=>(const Clause& o) const { return key() <=> o.key(); }

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os << '}';
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) {
  for (const Clause& c : clauses) add(c);
}

ClauseSet ClauseSet::from_codes(std::initializer_list<std::initializer_list<int>> clauses) {
  ClauseSet f;
  for (auto codes : clauses) f.add(Clause::from_codes(codes));
  return f;
}

std::size_t ClauseSet::add(const Clause& c) {
  const std::size_t ordinal = raw_count_++;
  auto [it, inserted] = lookup_.try_emplace(c, clauses_.size());
  if (!inserted) return it->second;
  clauses_.push_back(c);
  input_index_.push_back(ordinal);
  for (Literal x : c.literals()) {
    if (x.var() > max_var_) {
      max_var_ = x.var();
      ldeg_.resize(literal_slots(), 0);
    }
    ++ldeg_[x.index()];
  }
  return it->second;
}

std::optional<std::size_t> ClauseSet::index_of(const Clause& c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ClauseSet::literal_degree(Literal x) const {
  return x.index() < ldeg_.size() ? ldeg_[x.index()] : 0;
}

std::size_t ClauseSet::variable_degree(Var v) const {
  if (v <= 0) return 0;
  const Literal pos(v);
  return literal_degree(pos) + literal_degree(~pos);
}

std::vector<Var> ClauseSet::variables() const {
  std::vector<Var> vars;
  for (Var v = 1; v <= max_var_; ++v)
    if (has_variable(v)) vars.push_back(v);
  return vars;
}

ClauseSet ClauseSet::subset(std::span<const std::size_t> indices) const {
  ClauseSet out;
  for (std::size_t i : indices) out.add(clauses_.at(i));
  return out;
}

ClauseSet ClauseSet::without(std::size_t index) const {
  ClauseSet out;
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    if (i != index) out.add(clauses_[i]);
  return out;
}

bool ClauseSet::same_clauses(const ClauseSet& other) const {
  if (size() != other.size()) return false;
  for (const Clause& c : clauses_)
    if (!other.contains(c)) return false;
  return true;
}

MeasureReport measures(const ClauseSet& f) {
  MeasureReport m;
  m.c = f.size();
  for (const Clause& c : f.clauses()) {
    m.l += c.size();
    if (c.is_unit()) ++m.u;
  }
  for (Var v = 1; v <= f.max_var(); ++v) {
    const Literal pos(v);
    const std::size_t dp = f.literal_degree(pos);
    const std::size_t dn = f.literal_degree(~pos);
    if (dp + dn == 0) continue;
    ++m.n;
    if (dp + dn <= 4)
      ++m.vars_of_degree[dp + dn];
    else
      ++m.vars_above_4;
    for (std::size_t d : {dp, dn}) {
      if (d == 1) ++m.lits_of_degree_1;
      if (d == 2) ++m.lits_of_degree_2;
    }
    if (dp == 1 || dn == 1) m.singular.push_back(v);
    if (dp == 1 && dn == 1) m.one_singular.push_back(v);
  }
  m.deficiency = static_cast<std::int64_t>(m.c) - static_cast<std::int64_t>(m.n);
  return m;
}

void Assignment::set(Var v, bool value) {
  if (v <= 0) throw PreconditionError("assignment to non-positive variable id");
  const auto slot = static_cast<std::size_t>(v);
  if (slot >= values_.size()) values_.resize(slot + 1, -1);
  values_[slot] = value ? 1 : 0;
}

bool Assignment::defined(Var v) const { return value(v).has_value(); }

std::optional<bool> Assignment::value(Var v) const {
  const auto slot = static_cast<std::size_t>(v);
  if (v <= 0 || slot >= values_.size() || values_[slot] < 0) return std::nullopt;
  return values_[slot] == 1;
}

std::optional<bool> Assignment::value(Literal x) const {
  auto b = value(x.var());
  if (!b) return std::nullopt;
  return x.negative() ? !*b : *b;
}

std::vector<Var> Assignment::domain() const {
  std::vector<Var> out;
  for (std::size_t v = 1; v < values_.size(); ++v)
    if (values_[v] >= 0) out.push_back(static_cast<Var>(v));
  return out;
}

std::size_t Assignment::size() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                [](std::int8_t b) { return b >= 0; }));
}

bool satisfies(const Assignment& phi, const ClauseSet& f) {
  bool all = true;
  for (const Clause& c : f.clauses()) {
    bool sat = false;
    for (Literal x : c.literals()) {
      auto b = phi.value(x);
      if (!b) throw PreconditionError("assignment undefined on variable " + std::to_string(x.var()));
      sat = sat || *b;
    }
    all = all && sat;
  }
  return all;
}

ClauseSet apply_isomorphism(const ClauseSet& f, const std::unordered_map<Var, Var>& rename,
                            std::span<const Var> flip) {
  const std::unordered_set<Var> flipped(flip.begin(), flip.end());
  std::unordered_set<Var> image;
  std::unordered_map<Var, Var> map;
  for (Var v : f.variables()) {
    auto it = rename.find(v);
    const Var w = it == rename.end() ? v : it->second;
    if (w <= 0) throw PreconditionError("renaming to non-positive variable id");
    if (!image.insert(w).second) throw PreconditionError("renaming is not injective on var(F)");
    map.emplace(v, w);
  }
  auto image_of = [&](Literal x) {
    const bool neg = x.negative() != (flipped.count(x.var()) > 0);
    const Var w = map.at(x.var());
    return Literal(neg ? -w : w);
  };
  ClauseSet out;
  for (const Clause& c : f.clauses()) {
    switch (c.size()) {
      case 0:
        out.add(Clause{});
        break;
      case 1:
        out.add(Clause{image_of(c[0])});
        break;
      default:
        out.add(Clause{image_of(c[0]), image_of(c[1])});
    }
  }
  return out;
}

}  // namespace twomus
