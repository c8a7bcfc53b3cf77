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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "twomus/cnf.hpp"
#include "twomus/impl_graph.hpp"

namespace twomus {

/// Isomorphism classes of deficiency-1 2-MUs, keyed by (u, n_3, n_4).
enum class Family { Ia, Ib, IIa, IIb, III, IV };

std::string_view to_string(Family f);
/// Inverse of to_string; nullopt for unknown tags.
std::optional<Family> family_from_string(std::string_view tag);

/// A minimally unsatisfiable subset of some host clause-set.
struct MusRecord {
  /// Indices into the host clause-set, ascending.
  std::vector<std::size_t> clauses;
  std::optional<Family> family;
  /// The path the MUS was read off, if it came from a path search.
  std::optional<Path> witness;
};

/// The clause-set of `record` taken from its host `f`.
ClauseSet materialize(const ClauseSet& f, const MusRecord& record);

}  // namespace twomus
