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

// Implication digraphs of 2-CNFs, literal orders and paths.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twomus/cnf.hpp"

namespace twomus {

/// A strict total order on literals. The default is the natural order
/// x1 < -x1 < x2 < -x2 < ..., i.e. the literal index.
class LitOrder {
 public:
  LitOrder() = default;

  /// Literals listed first are smallest. Throws PreconditionError on
  /// repeated literals.
  static LitOrder from_sequence(std::span<const Literal> seq);

  bool is_natural() const { return rank_.empty(); }
  bool ranks(Literal x) const;
  /// Unranked literals sort after all ranked ones, by index.
  std::uint64_t rank(Literal x) const;
  bool less(Literal a, Literal b) const { return rank(a) < rank(b); }

  /// Throws PreconditionError unless every literal of lit(f) is ranked.
  void require_covers(const ClauseSet& f) const;

 private:
  std::vector<std::uint32_t> rank_;
};

struct Arc {
  Literal from;
  Literal to;
  std::size_t clause = 0;  // index into the source clause-set

  bool is_unit() const { return to == ~from; }
};

/// idg(F): vertices lit(F); a clause {x, y} contributes (-x, y) and (-y, x),
/// a unit-clause {x} the single unit arc (-x, x). Out- and in-neighbour
/// lists are sorted by the order the digraph was built with.
///
/// Immutable after construction. Traversals take caller-owned scratch, so
/// concurrent read-only queries are fine.
class ImpDigraph {
 public:
  ImpDigraph() = default;

  std::size_t literal_slots() const { return present_.size(); }
  bool has_vertex(Literal x) const { return x.valid() && x.index() < present_.size() && present_[x.index()]; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return out_target_.size(); }
  const LitOrder& order() const { return order_; }

  std::span<const Literal> out(Literal x) const { return slice(out_offset_, out_target_, x); }
  std::span<const std::uint32_t> out_clauses(Literal x) const { return slice(out_offset_, out_clause_, x); }
  std::span<const Literal> in(Literal x) const { return slice(in_offset_, in_target_, x); }

  /// Index of the clause behind arc (from, to), if the arc exists.
  std::optional<std::size_t> clause_of_arc(Literal from, Literal to) const;

  /// All vertices, sorted by the digraph's order.
  std::vector<Literal> vertices() const;
  /// All arcs, grouped by source in vertex order.
  std::vector<Arc> arcs() const;

 private:
  friend ImpDigraph build_idg(const ClauseSet&, const LitOrder&, std::span<const char>);

  template <typename T>
  std::span<const T> slice(const std::vector<std::uint32_t>& off, const std::vector<T>& data,
                           Literal x) const {
    if (!x.valid() || x.index() + 1 >= off.size()) return {};
    return {data.data() + off[x.index()], data.data() + off[x.index() + 1]};
  }

  std::vector<char> present_;
  std::size_t vertex_count_ = 0;
  std::vector<std::uint32_t> out_offset_;
  std::vector<Literal> out_target_;
  std::vector<std::uint32_t> out_clause_;
  std::vector<std::uint32_t> in_offset_;
  std::vector<Literal> in_target_;
  LitOrder order_;
};

/// Builds idg(f). When `active` is non-empty only clauses i with active[i]
/// contribute (vertex set lit of those clauses); arc clause indices still
/// refer to f. Throws PreconditionError if an active clause is empty or the
/// order does not rank every literal.
ImpDigraph build_idg(const ClauseSet& f, const LitOrder& order = {}, std::span<const char> active = {});

/// "x -> y <solid|contra> <clause>" per arc. For a binary clause {a, b}
/// (stored order) the arc (-a, b) is solid and (-b, a) its contraposition;
/// unit arcs are solid.
void dump_arcs(std::ostream& os, const ImpDigraph& g);

/// Reusable visited-marks for traversals over one digraph.
class TraversalScratch {
 public:
  /// Starts a fresh traversal over `slots` literal slots; returns its stamp.
  std::uint32_t begin(std::size_t slots);
  bool seen(std::size_t i) const { return mark_[i] == stamp_; }
  void see(std::size_t i) { mark_[i] = stamp_; }
  std::vector<Literal>& queue() { return queue_; }

 private:
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<Literal> queue_;
};

/// True iff y is reachable from x in g minus the excluded literals.
/// Throws PreconditionError if x or y is not a vertex or is excluded.
bool reach(const ImpDigraph& g, Literal x, Literal y, std::span<const Literal> excluded = {});

/// Same, with the exclusion given as a per-literal-index mask (empty = none).
bool reach_masked(const ImpDigraph& g, Literal x, Literal y, std::span<const char> excluded,
                  TraversalScratch& scratch);

/// A path as its vertex sequence (pairwise distinct literals). The
/// default-constructed path is the empty digraph.
class Path {
 public:
  Path() = default;
  /// Throws PreconditionError on repeated or invalid literals.
  explicit Path(std::vector<Literal> vertices);
  static Path from_codes(std::initializer_list<int> codes);

  bool empty() const { return vertices_.empty(); }
  std::span<const Literal> vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Number of arcs. Zero for both the empty digraph and single vertices.
  std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Literal first() const { return vertices_.front(); }
  Literal last() const { return vertices_.back(); }
  Literal operator[](std::size_t i) const { return vertices_[i]; }
  std::vector<std::pair<Literal, Literal>> arcs() const;

  /// V(P) contains no complementary pair.
  bool is_regular() const;
  /// Exactly one clash, and dropping the last vertex leaves a regular path.
  bool is_nearly_regular() const;

  bool operator==(const Path&) const = default;

 private:
  std::vector<Literal> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Path& p);

/// True iff consecutive vertices of p are joined by arcs of g.
bool is_path_in(const ImpDigraph& g, const Path& p);

/// Contraposition: reverse the order and complement every vertex. Throws
/// PreconditionError on paths of length 0.
Path contrapose_path(const Path& p);

/// P;P' (last(P) == first(P'), otherwise disjoint). An empty head yields tail.
Path concat(const Path& head, const Path& tail);

struct RegularDecomposition {
  Path head;  // P0; empty when the clash is with the first vertex
  Path loop;  // P1, from some y to -y
};

/// Unique decomposition P = P0;P1 of a nearly regular path. Throws
/// PreconditionError if p is not nearly regular.
RegularDecomposition regular_decompose(const Path& p);

/// The clauses CL(E(P)) behind the arcs of p in g, in path order.
std::vector<std::size_t> path_clauses(const ImpDigraph& g, const Path& p);

}  // namespace twomus
