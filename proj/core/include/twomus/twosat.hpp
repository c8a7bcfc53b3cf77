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
#include <span>

#include "twomus/cnf.hpp"

namespace twomus {

struct TwoSatResult {
  bool satisfiable = false;
  /// Total on var(F) when satisfiable.
  Assignment model;
  /// When unsatisfiable: a literal x with x ->* -x and -x ->* x in idg(F).
  /// Absent if the refutation is the empty clause itself.
  std::optional<Literal> witness;
};

/// Linear-time 2-SAT via strongly connected components of the implication
/// digraph. `active` (optional, one flag per clause) restricts to a subset.
TwoSatResult solve_2sat(const ClauseSet& f, std::span<const char> active = {});

bool is_satisfiable(const ClauseSet& f, std::span<const char> active = {});

}  // namespace twomus
