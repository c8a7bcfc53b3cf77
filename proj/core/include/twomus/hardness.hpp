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

// st-digraphs and their translations into 2-CNF.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "twomus/cnf.hpp"

namespace twomus {

/// A digraph on variable ids with distinguished s and t. Arcs (s,t), (t,s)
/// and self-loops are not allowed.
struct StDigraph {
  Var s = 0;
  Var t = 0;
  std::vector<std::pair<Var, Var>> arcs;

  /// {s, t} plus all arc endpoints, ascending.
  std::vector<Var> vertices() const;
  /// Largest vertex id + 1.
  Var x0() const;
  Var y0() const { return x0() + 1; }

  /// Throws InputError describing the first violated condition.
  void validate() const;
};

/// Lines "s <id>", "t <id>", "e <from> <to>"; '#' starts a comment.
/// Throws ParseError / InputError.
StDigraph parse_st_digraph(std::istream& in);
StDigraph parse_st_digraph(std::string_view text);
void write_st_digraph(std::ostream& os, const StDigraph& g);

/// tFC(G): arc (a,b) becomes {-t(a), t(b)} with t(s) = x0, t(t) = -x0.
ClauseSet translate_cdpp(const StDigraph& g);
/// tFC'(G): tFC(G) plus {x0, y0}, with arcs (t,v) as {-y0, v} and (v,s) as
/// {-v, -y0}.
ClauseSet translate_cdpp_prime(const StDigraph& g);

/// Some s -> t path and some t -> s path exist.
bool has_special_closed_walk(const StDigraph& g);

inline constexpr std::size_t kDefaultCycleBound = 16;

/// Internally vertex-disjoint s -> t and t -> s paths exist. Exhaustive;
/// throws BoundExceeded above `bound` vertices.
bool has_special_cycle(const StDigraph& g, std::size_t bound = kDefaultCycleBound);

/// When s or t lacks an incoming or outgoing arc: the constant assignment
/// (x0 and every other vertex variable fixed) that satisfies tFC(G).
std::optional<Assignment> constant_model(const StDigraph& g);

}  // namespace twomus
