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

#pragma once

#include <optional>

#include "twomus/cnf.hpp"
#include "twomus/impl_graph.hpp"
#include "twomus/mus_record.hpp"

namespace twomus {

/// One pass over the clauses in stored order, dropping every clause whose
/// removal keeps the rest unsatisfiable. Throws PreconditionError if f is
/// satisfiable.
MusRecord find_mus_deletion(const ClauseSet& f);

struct RegularPathOptions {
  /// Minimum number of arcs.
  bool shortest = false;
  /// Exhaustive backtracking instead of the matching reduction.
  bool brute_force = false;
};

/// A path from x to y in g whose vertex set has no complementary pair.
/// Throws PreconditionError if x or y is not a vertex or var(x) == var(y).
///
/// Solved as an augmenting-path problem: every variable contributes its two
/// literals as vertices joined by a matched edge, every binary clause {a, b}
/// an unmatched edge a - b. With -x and y exposed (x and -y removed), the
/// augmenting paths are exactly the regular x -> y paths read off at odd
/// positions. The shortest variant takes a maximum-weight perfect matching
/// with matched-type edges weighted higher.
std::optional<Path> regular_path(const ImpDigraph& g, Literal x, Literal y, RegularPathOptions options = {});

/// MUS containing the two unit-clauses {x}, {y}: {x}, {y} plus the clauses
/// of a regular path from x to -y. The witness is that path extended by the
/// unit arc (-y, y). Throws PreconditionError if a clause is missing, not a
/// unit, the two coincide, or f contains the empty clause.
std::optional<MusRecord> mus_two_units(const ClauseSet& f, const Clause& ux, const Clause& uy,
                                       bool shortest = false);

/// The first MUS containing {x} in L-pathlex order.
std::optional<MusRecord> mus_one_unit(const ClauseSet& f, const Clause& ux, const LitOrder& order = {});

/// A Family IIa MUS containing {x}: a regular path x -> y with {-y, -x} in f.
/// Candidates y are the in-neighbours of -x, tried in the digraph's order.
std::optional<MusRecord> mus_family_iia(const ClauseSet& f, const Clause& ux);

enum class UnitSweep { ExactlyTwo, ExactlyOne, AtLeastOne };

/// ExactlyTwo tries unit pairs in literal order (with `shortest`, all pairs,
/// keeping a shortest MUS); AtLeastOne runs mus_one_unit per unit;
/// ExactlyOne does the same with all other unit-clauses removed.
std::optional<MusRecord> mus_unit_sweep(const ClauseSet& f, UnitSweep mode, bool shortest = false);

}  // namespace twomus
