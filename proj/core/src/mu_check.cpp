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

#include "twomus/mu_check.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <span>

#include "twomus/errors.hpp"

namespace twomus {

std::string_view to_string(CsdpFailure reason) {
  switch (reason) {
    case CsdpFailure::NoSideClauses:
      return "no-side-clauses";
    case CsdpFailure::Clash:
      return "clash";
    case CsdpFailure::EqualRemainders:
      return "equal-remainders";
    case CsdpFailure::ExistingResolvent:
      return "existing-resolvent";
    case CsdpFailure::DegreeBound:
      return "degree-bound";
  }
  return "?";
}

namespace {

Clause resolvent_of(std::optional<Literal> a, std::optional<Literal> b) {
  if (a && b) return Clause{*a, *b};
  if (a) return Clause{*a};
  if (b) return Clause{*b};
  return Clause{};
}

// One occurrence of a literal: the clause's other literal (or kUnit) and its id.
struct Occ {
  std::uint32_t other;
  std::uint32_t id;
};

constexpr std::uint32_t kUnit = 0xFFFFFFFFu;
constexpr std::uint32_t kFree = 0xFFFFFFFEu;
constexpr std::uint32_t kSpill = 0xFFFFFFFDu;

// Occurrence lists with two inline entries; longer lists move to a side pool.
// Removal swaps with the last entry, so list order is deterministic.
class OccTable {
 public:
  explicit OccTable(std::size_t slots) : slots_(slots, Slot{Occ{kFree, 0}, Occ{kFree, 0}}) {}

  std::size_t slot_count() const { return slots_.size(); }

  std::size_t size(std::size_t i) const {
    const Slot& s = slots_[i];
    if (s[0].other == kSpill) return spill_[s[0].id].size();
    return s[0].other == kFree ? 0 : s[1].other == kFree ? 1 : 2;
  }

  std::span<const Occ> items(std::size_t i) const {
    const Slot& s = slots_[i];
    if (s[0].other == kSpill) return spill_[s[0].id];
    return {s.data(), size(i)};
  }

  void push(std::size_t i, Occ e) {
    Slot& s = slots_[i];
    if (s[0].other == kFree) {
      s[0] = e;
    } else if (s[0].other == kSpill) {
      spill_[s[0].id].push_back(e);
    } else if (s[1].other == kFree) {
      s[1] = e;
    } else {
      spill_.push_back({s[0], s[1], e});
      s[0] = {kSpill, static_cast<std::uint32_t>(spill_.size() - 1)};
    }
  }

  // Removes the entry whose other literal is `other`.
  void remove(std::size_t i, std::uint32_t other) {
    Slot& s = slots_[i];
    if (s[0].other == kSpill) {
      auto& list = spill_[s[0].id];
      *std::find_if(list.begin(), list.end(), [&](const Occ& e) { return e.other == other; }) = list.back();
      list.pop_back();
    } else if (s[1].other == kFree) {
      s[0].other = kFree;
    } else {
      if (s[0].other == other) s[0] = s[1];
      s[1].other = kFree;
    }
  }

  void clear(std::size_t i) {
    Slot& s = slots_[i];
    if (s[0].other == kSpill)
      spill_[s[0].id].clear();
    else
      s[0].other = s[1].other = kFree;
  }

 private:
  using Slot = std::array<Occ, 2>;
  std::vector<Slot> slots_;
  std::vector<std::vector<Occ>> spill_;
};

// Mutable clause store. The hot path works on occurrence entries only;
// clauses_ keeps insertion order for result().
class Reducer {
 public:
  Reducer(const ClauseSet& f, const CsdpOptions& options) : options_(options), occ_(f.literal_slots()) {
    clauses_.reserve(2 * f.size());
    for (const Clause& c : f.clauses()) insert(c);
  }

  const std::vector<CsdpStep>& trace() const { return trace_; }
  std::optional<CsdpFail>& failure() { return failure_; }

  bool singular(Var v) const {
    const Literal p(v);
    if (p.index() >= occ_.slot_count()) return false;
    return occ_.size(p.index()) == 1 || occ_.size((~p).index()) == 1;
  }

  bool degree_ok() {
    if (options_.degree_bound == 0) return true;
    for (std::size_t i = 0; i < occ_.slot_count(); ++i)
      if (occ_.size(i) > options_.degree_bound) return degree_failure(Literal::from_index(i));
    return true;
  }

  // Returns false on failure (stored in failure()).
  bool step(Var v, std::vector<Var>* touched) {
    const Literal pos(v);
    const Literal lit = occ_.size(pos.index()) == 1 ? pos : ~pos;
    const Occ main_occ = occ_.items(lit.index()).front();
    const Clause main = clause_of(lit, main_occ.other);
    const auto side_span = occ_.items((~lit).index());
    sides_.assign(side_span.begin(), side_span.end());

    auto fail = [&](CsdpFailure reason, std::initializer_list<Clause> extra) {
      failure_ = CsdpFail{reason, v, {main}};
      failure_->clauses.insert(failure_->clauses.end(), extra);
      return false;
    };

    if (sides_.empty()) return fail(CsdpFailure::NoSideClauses, {});
    const std::uint32_t a = main_occ.other;
    for (const Occ& s : sides_)
      if (a != kUnit && s.other != kUnit && (a ^ 1u) == s.other)
        return fail(CsdpFailure::Clash, {clause_of(~lit, s.other)});
    for (std::size_t i = 0; i < sides_.size(); ++i) {
      for (std::size_t j = i + 1; j < sides_.size(); ++j)
        if (sides_[i].other == sides_[j].other || (sides_[i].other == a && sides_[j].other == kUnit) ||
            (sides_[i].other == kUnit && sides_[j].other == a))
          return fail(CsdpFailure::EqualRemainders,
                      {clause_of(~lit, sides_[i].other), clause_of(~lit, sides_[j].other)});
      // Every clause still containing v is main or a side clause, and no
      // resolvent contains v, so a hit here is an untouched clause.
      if (present(a, sides_[i].other))
        return fail(CsdpFailure::ExistingResolvent,
                    {clause_of(~lit, sides_[i].other), resolvent(a, sides_[i].other)});
    }

    if (options_.record_trace) {
      CsdpStep s{v, lit, main, {}, {}};
      for (const Occ& o : sides_) {
        s.sides.push_back(clause_of(~lit, o.other));
        s.resolvents.push_back(resolvent(a, o.other));
      }
      trace_.push_back(std::move(s));
    }
    if (touched) {
      touched->push_back(v);
      if (a != kUnit) touched->push_back(Literal::from_index(a).var());
      for (const Occ& o : sides_)
        if (o.other != kUnit) touched->push_back(Literal::from_index(o.other).var());
    }

    if (a != kUnit) occ_.remove(a, lit.index());
    for (const Occ& o : sides_) {
      if (o.other != kUnit) occ_.remove(o.other, (~lit).index());
    }
    occ_.clear(lit.index());
    occ_.clear((~lit).index());
    for (const Occ& o : sides_) {
      const Clause r = resolvent(a, o.other);
      insert(r);
      if (options_.degree_bound != 0)
        for (Literal x : r.literals())
          if (occ_.size(x.index()) > options_.degree_bound) return degree_failure(x);
    }
    return true;
  }

  ClauseSet result() const {
    std::vector<char> alive(clauses_.size(), 0);
    for (std::uint32_t id : empty_ids_) alive[id] = 1;
    for (std::size_t i = 0; i < occ_.slot_count(); ++i)
      for (const Occ& e : occ_.items(i))
        if (e.other == kUnit || e.other > i) alive[e.id] = 1;
    ClauseSet out;
    for (std::size_t i = 0; i < clauses_.size(); ++i)
      if (alive[i]) out.add(clauses_[i]);
    return out;
  }

 private:
  static Clause clause_of(Literal x, std::uint32_t other) {
    return other == kUnit ? Clause{x} : Clause{x, Literal::from_index(other)};
  }

  static Clause resolvent(std::uint32_t a, std::uint32_t b) {
    auto lit = [](std::uint32_t i) {
      return i == kUnit ? std::nullopt : std::optional<Literal>(Literal::from_index(i));
    };
    return resolvent_of(lit(a), lit(b));
  }

  bool present(std::uint32_t a, std::uint32_t b) const {
    if (a == kUnit && b == kUnit) return !empty_ids_.empty();
    if (a == kUnit || a == b) std::swap(a, b);
    if (a == b) b = kUnit;
    if (b != kUnit && occ_.size(b) < occ_.size(a)) std::swap(a, b);
    for (const Occ& e : occ_.items(a))
      if (e.other == b) return true;
    return false;
  }

  bool degree_failure(Literal x) {
    failure_ = CsdpFail{CsdpFailure::DegreeBound, x.var(), {}};
    for (const Occ& e : occ_.items(x.index())) failure_->clauses.push_back(clause_of(x, e.other));
    return false;
  }

  void insert(const Clause& c) {
    const auto id = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back(c);
    if (c.empty()) empty_ids_.push_back(id);
    if (c.size() == 1) occ_.push(c[0].index(), {kUnit, id});
    if (c.size() == 2) {
      occ_.push(c[0].index(), {static_cast<std::uint32_t>(c[1].index()), id});
      occ_.push(c[1].index(), {static_cast<std::uint32_t>(c[0].index()), id});
    }
  }

  CsdpOptions options_;
  std::vector<Clause> clauses_;
  OccTable occ_;
  std::vector<std::uint32_t> empty_ids_;
  std::vector<Occ> sides_;
  std::vector<CsdpStep> trace_;
  std::optional<CsdpFail> failure_;
};

}  // namespace

CsdpOutcome csdp_step(const ClauseSet& f, Var v) {
  if (v <= 0 || v > f.max_var()) throw PreconditionError("variable does not occur");
  const Literal pos(v);
  if (f.literal_degree(pos) != 1 && f.literal_degree(~pos) != 1)
    throw PreconditionError("variable " + std::to_string(v) + " is not singular");
  Reducer r(f, CsdpOptions{0, true});
  CsdpOutcome out;
  if (!r.step(v, nullptr)) {
    out.failure = std::move(r.failure());
    return out;
  }
  out.result = r.result();
  out.trace = r.trace();
  return out;
}

CsdpOutcome csdp_full(const ClauseSet& f, const CsdpOptions& options) {
  Reducer r(f, options);
  CsdpOutcome out;
  if (!r.degree_ok()) {
    out.failure = std::move(r.failure());
    return out;
  }
  std::vector<Var> stack;
  for (Var v = f.max_var(); v >= 1; --v)
    if (r.singular(v)) stack.push_back(v);
  std::vector<Var> touched;
  while (!stack.empty()) {
    const Var v = stack.back();
    stack.pop_back();
    if (!r.singular(v)) continue;
    touched.clear();
    if (!r.step(v, &touched)) {
      out.failure = std::move(r.failure());
      out.trace = r.trace();
      return out;
    }
    for (Var w : touched)
      if (w != v && r.singular(w)) stack.push_back(w);
  }
  out.result = r.result();
  out.trace = r.trace();
  return out;
}

std::optional<std::size_t> is_bk(const ClauseSet& f) {
  const std::size_t c = f.size();
  if (c < 4 || c % 2 != 0) return std::nullopt;
  const std::size_t k = c / 2;
  for (const Clause& cl : f.clauses())
    if (cl.size() != 2) return std::nullopt;
  const std::vector<Var> vars = f.variables();
  if (vars.size() != k) return std::nullopt;
  for (Var v : vars)
    if (f.variable_degree(v) != 4) return std::nullopt;

  // Complement pairs {a,b} ~ {-a,-b}; each pair is an edge between var(a) and var(b).
  std::vector<char> paired(c, 0);
  std::vector<std::vector<std::pair<Var, std::size_t>>> adj(static_cast<std::size_t>(f.max_var()) + 1);
  std::size_t negative_pairs = 0, edge = 0;
  for (std::size_t i = 0; i < c; ++i) {
    if (paired[i]) continue;
    const Clause& cl = f[i];
    const auto j = f.index_of(Clause{~cl[0], ~cl[1]});
    if (!j || paired[*j]) return std::nullopt;
    paired[i] = paired[*j] = 1;
    if (cl[0].negative() == cl[1].negative()) ++negative_pairs;
    const Var a = cl[0].var(), b = cl[1].var();
    adj[static_cast<std::size_t>(a)].emplace_back(b, edge);
    adj[static_cast<std::size_t>(b)].emplace_back(a, edge);
    ++edge;
  }
  for (Var v : vars)
    if (adj[static_cast<std::size_t>(v)].size() != 2) return std::nullopt;
  // Walk the 2-regular multigraph from the first variable; one cycle iff we see all k edges.
  std::size_t walked = 0;
  Var cur = vars.front();
  std::size_t via = adj[static_cast<std::size_t>(cur)][0].second;
  cur = adj[static_cast<std::size_t>(cur)][0].first;
  ++walked;
  while (cur != vars.front()) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    const auto& next = nb[0].second == via ? nb[1] : nb[0];
    via = next.second;
    cur = next.first;
    ++walked;
  }
  if (walked != k) return std::nullopt;
  if (negative_pairs % 2 == 0) return std::nullopt;
  return k;
}

bool is_2mu(const ClauseSet& f) {
  if (f.has_empty_clause()) return f.size() == 1;
  const MeasureReport m = measures(f);
  if (m.deficiency <= 0) return false;
  for (Var v = 1; v <= f.max_var(); ++v) {
    const Literal p(v);
    if (f.literal_degree(p) > 2 || f.literal_degree(~p) > 2) return false;
  }
  const CsdpOutcome r = csdp_full(f, CsdpOptions{2, false});
  if (r.failed()) return false;
  if (m.deficiency == 1) return r.result.size() == 1 && r.result.has_empty_clause();
  const auto k = is_bk(r.result);
  return k && static_cast<std::int64_t>(*k) == m.deficiency;
}

Family classify_family(const ClauseSet& f) {
  if (f.has_empty_clause()) throw PreconditionError("{bottom} belongs to no family");
  const MeasureReport m = measures(f);
  if (m.deficiency != 1) throw PreconditionError("deficiency is not 1");
  if (!is_2mu(f)) throw PreconditionError("clause-set is not minimally unsatisfiable");
  if (m.u == 2) return m.n == 1 ? Family::Ia : Family::Ib;
  if (m.u == 1) {
    Var unit_var = 0;
    for (const Clause& c : f.clauses())
      if (c.is_unit()) unit_var = c[0].var();
    return f.variable_degree(unit_var) == 3 && m.n_k(3) == 1 ? Family::IIa : Family::IIb;
  }
  if (m.n_k(3) == 0 && m.n_k(4) == 1) return Family::III;
  if (m.n_k(3) == 2 && m.n_k(4) == 0) return Family::IV;
  throw PreconditionError("degree signature matches no family");
}

namespace {
void write_clauses(std::ostream& os, const std::vector<Clause>& cs) {
  os << '[';
  for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << cs[i];
  os << ']';
}
}  // namespace

void write_trace_line(std::ostream& os, const CsdpStep& step) {
  os << "v=" << step.variable << " main=" << step.main << " sides=";
  write_clauses(os, step.sides);
  os << " resolvents=";
  write_clauses(os, step.resolvents);
  os << '\n';
}

void write_failure(std::ostream& os, const CsdpFail& fail) {
  os << "fail " << to_string(fail.reason) << " v=" << fail.variable << " clauses=";
  write_clauses(os, fail.clauses);
  os << '\n';
}

}  // namespace twomus
