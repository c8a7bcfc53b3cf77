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

// Enumeration of unit-containing MUSs in L-pathlex order.
//
// UnitEnumerator walks the nearly regular paths from x (those ending in the
// first clash) by a guarded DFS over idg(F), out-neighbours taken in the
// order L. Each path maps to an MUS containing {x}; paths whose sibling
// under the same MUS is smaller are delivered as silent.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twomus/cnf.hpp"
#include "twomus/impl_graph.hpp"
#include "twomus/mus_record.hpp"

namespace twomus {

/// Lexicographic comparison of vertex sequences under L; a proper prefix
/// is smaller.
std::strong_ordering pathlex_compare(const LitOrder& order, const Path& p, const Path& q);

enum class TraceEvent { InitCall, Dfs, Clash, Output, OutputSilent };

std::string_view to_string(TraceEvent e);

struct TraceRow {
  std::size_t step = 0;
  TraceEvent event = TraceEvent::Dfs;
  Literal y;
  /// Absent when R was not computed at this row.
  std::optional<std::vector<Literal>> r;
  std::vector<Literal> path;
  std::string note;
};

/// Tab-separated: step, event, y, R as "(a,b)" or "--", P as "(a,b)", note.
void write_trace(std::ostream& os, std::span<const TraceRow> rows);

struct EnumStats {
  std::uint64_t dfs_calls = 0;
  std::uint64_t paths = 0;
  std::uint64_t printed = 0;
  std::uint64_t silent = 0;
  /// Elementary steps: vertex visits and arc scans.
  std::uint64_t steps = 0;
  /// Largest step count between two consecutive path deliveries (or the
  /// start and the first delivery, or the last delivery and exhaustion).
  std::uint64_t max_delay = 0;
};

struct PathEvent {
  Path path;
  bool printed = false;
  Family family = Family::Ib;
  /// The other preimage of the same MUS; absent for Family I.
  std::optional<Path> sibling;
  MusRecord record;
};

struct EnumOptions {
  LitOrder order;
  /// Per-clause activity mask over the host clause-set (empty = all).
  std::vector<char> active;
  /// Re-check the DFS invariants with independent reachability queries.
  bool verify_invariants = false;
};

/// Pull-based enumeration of mus_{x}(F). The host clause-set must outlive
/// the enumerator. Not thread-safe; distinct enumerators are independent.
class UnitEnumerator {
 public:
  /// Throws PreconditionError if `unit` is not a unit-clause of f (active
  /// under the mask), or f contains the empty clause.
  UnitEnumerator(const ClauseSet& f, const Clause& unit, EnumOptions options = {});

  /// Next nearly regular path from x in L-pathlex order, printed or silent.
  std::optional<PathEvent> next_path();
  /// Next MUS; silent paths are skipped.
  std::optional<MusRecord> next();

  const EnumStats& stats() const { return stats_; }
  const ImpDigraph& graph() const { return graph_; }
  Literal unit_literal() const { return x_; }

  /// Rows are appended to `sink` while it is set.
  void set_trace(std::vector<TraceRow>* sink) { trace_ = sink; }

 private:
  struct Frame {
    std::vector<std::pair<Literal, std::uint32_t>> r;  // (z, clause of arc top->z)
    std::size_t pos = 0;
  };

  void start();
  void compute_r(Frame& frame);
  void push_vertex(Literal z, std::uint32_t clause);
  void pop_vertex();
  PathEvent make_event();
  void trace_row(TraceEvent e, Literal y, const std::vector<Literal>* r, std::string note = {});
  void deliver();
  void check_invariants(Literal y);

  const ClauseSet* f_;
  EnumOptions options_;
  ImpDigraph graph_;
  Literal x_;
  std::size_t unit_index_ = 0;
  bool started_ = false;
  bool done_ = false;

  std::vector<Literal> path_;
  std::vector<std::uint32_t> path_clauses_;
  std::vector<char> on_path_;
  std::vector<Frame> frames_;
  TraversalScratch scratch_;

  EnumStats stats_;
  std::uint64_t last_delivery_ = 0;
  std::vector<TraceRow>* trace_ = nullptr;
  std::size_t step_ = 0;
  std::vector<std::pair<std::vector<Literal>, std::size_t>> printed_steps_;
};

/// All MUSs containing some unit-clause: units taken in order L, each
/// removed from F once its round is finished.
class AllUnitsEnumerator {
 public:
  explicit AllUnitsEnumerator(const ClauseSet& f, LitOrder order = {});

  std::optional<MusRecord> next();
  std::optional<PathEvent> next_path();
  /// Units processed so far, including the current one.
  std::size_t rounds() const { return round_; }
  const EnumStats& stats() const { return stats_; }

 private:
  bool advance_round();
  void fold_stats();

  const ClauseSet* f_;
  LitOrder order_;
  std::vector<std::size_t> units_;  // clause indices, sorted by L
  std::size_t round_ = 0;
  std::vector<char> active_;
  std::optional<UnitEnumerator> current_;
  EnumStats stats_;
  EnumStats folded_;
};

/// DIMACS block read off the witness path: a "c family=... witness=..."
/// line, the header "p cnf length(P) length(P)+1", {x}, then one clause per
/// path arc. Records without a witness are written as their clause subset.
void print_mus(std::ostream& os, const ClauseSet& f, const MusRecord& record);

}  // namespace twomus
