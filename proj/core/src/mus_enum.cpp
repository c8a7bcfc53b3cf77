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

#include "twomus/mus_enum.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "twomus/errors.hpp"

namespace twomus {

std::strong_ordering pathlex_compare(const LitOrder& order, const Path& p, const Path& q) {
  const std::size_t n = std::min(p.vertex_count(), q.vertex_count());
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == q[i]) continue;
    return order.rank(p[i]) <=> order.rank(q[i]);
  }
  return p.vertex_count() <=> q.vertex_count();
}

std::string_view to_string(TraceEvent e) {
  switch (e) {
    case TraceEvent::InitCall:
      return "init call";
    case TraceEvent::Dfs:
      return "DFS(P,y)";
    case TraceEvent::Clash:
      return "clash";
    case TraceEvent::Output:
      return "output";
    case TraceEvent::OutputSilent:
      return "output (silent)";
  }
  return "?";
}

namespace {
void write_tuple(std::ostream& os, std::span<const Literal> lits) {
  os << '(';
  for (std::size_t i = 0; i < lits.size(); ++i) os << (i ? "," : "") << lits[i];
  os << ')';
}
}  // namespace

void write_trace(std::ostream& os, std::span<const TraceRow> rows) {
  for (const TraceRow& row : rows) {
    os << row.step << '\t' << to_string(row.event) << '\t' << row.y << '\t';
    if (row.r)
      write_tuple(os, *row.r);
    else
      os << "--";
    os << '\t';
    write_tuple(os, row.path);
    os << '\t' << row.note << '\n';
  }
}

UnitEnumerator::UnitEnumerator(const ClauseSet& f, const Clause& unit, EnumOptions options)
    : f_(&f), options_(std::move(options)) {
  const auto& active = options_.active;
  if (!active.empty() && active.size() != f.size())
    throw PreconditionError("clause mask size does not match clause-set");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].empty() && (active.empty() || active[i]))
      throw PreconditionError("clause-set contains the empty clause");
  if (!unit.is_unit()) throw PreconditionError("not a unit-clause");
  const auto idx = f.index_of(unit);
  if (!idx || (!active.empty() && !active[*idx])) throw PreconditionError("unit-clause not in clause-set");
  unit_index_ = *idx;
  x_ = unit[0];
  options_.order.require_covers(f);
  graph_ = build_idg(f, options_.order, active);
  on_path_.assign(graph_.literal_slots(), 0);
}

void UnitEnumerator::trace_row(TraceEvent e, Literal y, const std::vector<Literal>* r, std::string note) {
  if (!trace_) return;
  TraceRow row{++step_, e, y, std::nullopt, path_, std::move(note)};
  if (r) row.r = *r;
  trace_->push_back(std::move(row));
}

void UnitEnumerator::push_vertex(Literal z, std::uint32_t clause) {
  path_.push_back(z);
  path_clauses_.push_back(clause);
  on_path_[z.index()] = 1;
}

void UnitEnumerator::pop_vertex() {
  on_path_[path_.back().index()] = 0;
  path_.pop_back();
  path_clauses_.pop_back();
}

void UnitEnumerator::compute_r(Frame& frame) {
  // One reverse BFS from -x in G - V(P), then filter the out-list of the top.
  const Literal target = ~x_;
  scratch_.begin(graph_.literal_slots());
  auto& queue = scratch_.queue();
  queue.push_back(target);
  scratch_.see(target.index());
  ++stats_.steps;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Literal u : graph_.in(queue[head])) {
      ++stats_.steps;
      if (on_path_[u.index()] || scratch_.seen(u.index())) continue;
      scratch_.see(u.index());
      queue.push_back(u);
    }
  }
  const Literal y = path_.back();
  const auto outs = graph_.out(y);
  const auto clauses = graph_.out_clauses(y);
  frame.r.clear();
  frame.pos = 0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    ++stats_.steps;
    if (!on_path_[outs[i].index()] && scratch_.seen(outs[i].index())) frame.r.emplace_back(outs[i], clauses[i]);
  }
}

void UnitEnumerator::check_invariants(Literal y) {
  if (!options_.verify_invariants) return;
  for (Literal v : path_)
    if (on_path_[(~v).index()]) throw std::logic_error("DFS invariant: path has a clash");
  if (on_path_[y.index()]) throw std::logic_error("DFS invariant: y already on path");
  if (!path_.empty() && !graph_.clause_of_arc(path_.back(), y)) throw std::logic_error("DFS invariant: no arc");
  TraversalScratch scratch;
  if (!reach_masked(graph_, y, ~x_, on_path_, scratch))
    throw std::logic_error("DFS invariant: -x unreachable from y");
}

void UnitEnumerator::start() {
  started_ = true;
  TraversalScratch scratch;
  if (!reach_masked(graph_, x_, ~x_, {}, scratch)) {
    done_ = true;
    return;
  }
  check_invariants(x_);
  ++stats_.dfs_calls;
  path_.push_back(x_);
  path_clauses_.push_back(static_cast<std::uint32_t>(unit_index_));  // placeholder; x has no incoming arc
  on_path_[x_.index()] = 1;
  frames_.emplace_back();
  compute_r(frames_.back());
  if (trace_) {
    std::vector<Literal> r;
    for (auto [z, c] : frames_.back().r) r.push_back(z);
    trace_row(TraceEvent::InitCall, x_, &r);
  }
}

void UnitEnumerator::deliver() {
  const std::uint64_t delay = stats_.steps - last_delivery_;
  stats_.max_delay = std::max(stats_.max_delay, delay);
  last_delivery_ = stats_.steps;
}

PathEvent UnitEnumerator::make_event() {
  PathEvent ev;
  const std::size_t k = path_.size() - 1;
  const Literal last = path_[k];
  ev.record.clauses.assign(path_clauses_.begin() + 1, path_clauses_.end());
  ev.record.clauses.push_back(unit_index_);
  std::sort(ev.record.clauses.begin(), ev.record.clauses.end());
  ev.path = Path(path_);
  if (last == ~path_[k - 1]) {
    ev.family = k == 1 ? Family::Ia : Family::Ib;
    ev.printed = true;
  } else {
    std::size_t i = 0;
    while (path_[i] != ~last) ++i;
    std::vector<Literal> sib(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = k - 1; j + 1 > i; --j) sib.push_back(~path_[j]);
    ev.sibling = Path(std::move(sib));
    ev.family = last == ~x_ ? Family::IIa : Family::IIb;
    ev.printed = pathlex_compare(options_.order, ev.path, *ev.sibling) < 0;
  }
  ev.record.family = ev.family;
  ev.record.witness = ev.path;
  ++stats_.paths;
  ++(ev.printed ? stats_.printed : stats_.silent);
  return ev;
}

std::optional<PathEvent> UnitEnumerator::next_path() {
  if (done_) return std::nullopt;
  if (!started_) start();
  while (!done_) {
    if (frames_.empty()) {
      done_ = true;
      break;
    }
    Frame& frame = frames_.back();
    if (frame.pos == frame.r.size()) {
      frames_.pop_back();
      pop_vertex();
      continue;
    }
    const auto [z, clause] = frame.r[frame.pos++];
    check_invariants(z);
    ++stats_.dfs_calls;
    if (on_path_[(~z).index()]) {
      push_vertex(z, clause);
      trace_row(TraceEvent::Dfs, z, nullptr);
      trace_row(TraceEvent::Clash, z, nullptr);
      PathEvent ev = make_event();
      if (trace_) {
        if (ev.printed) {
          const bool one = ev.family == Family::Ia || ev.family == Family::Ib;
          trace_row(TraceEvent::Output, z, nullptr, "Family " + std::string(one ? "I" : to_string(ev.family)));
          printed_steps_.emplace_back(path_, step_);
        } else {
          std::string note = "sibling";
          const auto sib = ev.sibling->vertices();
          for (const auto& [p, s] : printed_steps_)
            if (std::equal(p.begin(), p.end(), sib.begin(), sib.end())) note = "sibling of step " + std::to_string(s);
          trace_row(TraceEvent::OutputSilent, z, nullptr, std::move(note));
        }
      }
      pop_vertex();
      deliver();
      return ev;
    }
    push_vertex(z, clause);
    Frame next;
    compute_r(next);
    if (trace_) {
      std::vector<Literal> r;
      for (auto [w, c] : next.r) r.push_back(w);
      trace_row(TraceEvent::Dfs, z, &r);
    }
    frames_.push_back(std::move(next));
  }
  deliver();
  return std::nullopt;
}

std::optional<MusRecord> UnitEnumerator::next() {
  while (auto ev = next_path())
    if (ev->printed) return std::move(ev->record);
  return std::nullopt;
}

AllUnitsEnumerator::AllUnitsEnumerator(const ClauseSet& f, LitOrder order) : f_(&f), order_(std::move(order)) {
  if (f.has_empty_clause()) throw PreconditionError("clause-set contains the empty clause");
  order_.require_covers(f);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].is_unit()) units_.push_back(i);
  std::sort(units_.begin(), units_.end(),
            [&](std::size_t a, std::size_t b) { return order_.less(f[a][0], f[b][0]); });
  active_.assign(f.size(), 1);
}

bool AllUnitsEnumerator::advance_round() {
  if (round_ >= units_.size()) return false;
  if (round_ > 0) active_[units_[round_ - 1]] = 0;
  current_.emplace(*f_, (*f_)[units_[round_]], EnumOptions{order_, active_, false});
  ++round_;
  return true;
}

void AllUnitsEnumerator::fold_stats() {
  const EnumStats& s = current_->stats();
  folded_.dfs_calls += s.dfs_calls;
  folded_.paths += s.paths;
  folded_.printed += s.printed;
  folded_.silent += s.silent;
  folded_.steps += s.steps;
  folded_.max_delay = std::max(folded_.max_delay, s.max_delay);
  stats_ = folded_;
}

std::optional<PathEvent> AllUnitsEnumerator::next_path() {
  for (;;) {
    if (!current_ && !advance_round()) return std::nullopt;
    if (auto ev = current_->next_path()) {
      stats_ = folded_;
      const EnumStats& s = current_->stats();
      stats_.dfs_calls += s.dfs_calls;
      stats_.paths += s.paths;
      stats_.printed += s.printed;
      stats_.silent += s.silent;
      stats_.steps += s.steps;
      stats_.max_delay = std::max(stats_.max_delay, s.max_delay);
      return ev;
    }
    fold_stats();
    current_.reset();
  }
}

std::optional<MusRecord> AllUnitsEnumerator::next() {
  while (auto ev = next_path())
    if (ev->printed) return std::move(ev->record);
  return std::nullopt;
}

void print_mus(std::ostream& os, const ClauseSet& f, const MusRecord& record) {
  if (record.family || record.witness)
    os << "c family=" << (record.family ? to_string(*record.family) : std::string_view("none"));
  if (record.witness) {
    os << " witness=";
    const auto vs = record.witness->vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '\n';
    const Path& p = *record.witness;
    os << "p cnf " << p.length() << ' ' << p.length() + 1 << '\n';
    os << p.first() << " 0\n";
    for (std::size_t i = 0; i + 1 < p.vertex_count(); ++i) {
      const Literal y = p[i], z = p[i + 1];
      if (z == ~y)
        os << z << " 0\n";
      else
        os << ~y << ' ' << z << " 0\n";
    }
    return;
  }
  if (record.family) os << '\n';
  const ClauseSet sub = materialize(f, record);
  os << "p cnf " << sub.variables().size() << ' ' << sub.size() << '\n';
  for (const Clause& c : sub.clauses()) {
    for (Literal x : c.literals()) os << x << ' ';
    os << "0\n";
  }
}

}  // namespace twomus
