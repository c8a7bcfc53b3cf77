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

// Exhaustive reference implementations and Family instance generators.
// Exponential by design; intended for cross-checking at small sizes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twomus/cnf.hpp"
#include "twomus/impl_graph.hpp"
#include "twomus/mus_record.hpp"

namespace twomus {

inline constexpr std::size_t kDefaultMusBound = 20;
inline constexpr std::size_t kDefaultPathBound = 24;

/// Unsatisfiable and every single-clause deletion satisfiable, decided by
/// truth tables (up to 16 variables) or 2-SAT beyond.
bool brute_is_mu(const ClauseSet& f);

/// Every MU subset of f, ordered by size then lexicographically by clause
/// indices. Throws BoundExceeded if c(f) > bound.
std::vector<MusRecord> brute_mus_enum(const ClauseSet& f, std::size_t bound = kDefaultMusBound);

enum class PathMode {
  Simple,         // all simple paths from x to y
  Regular,        // clash-free paths from x to y
  NearlyRegular,  // paths from x whose only clash is at the last vertex
};

/// All paths of the given kind, in pathlex order of g's ordering. Throws
/// BoundExceeded if g has more than `bound` vertices.
std::vector<Path> brute_paths(const ImpDigraph& g, Literal x, PathMode mode, Literal y = Literal{},
                              std::size_t bound = kDefaultPathBound);

/// Instance of the Family template with the given numbers of internal
/// variables per chain, under a seeded random renaming, flipping and clause
/// shuffle. Chains: Ia none; Ib {k >= 0}; IIa {k >= 1}; IIb {k1 >= 0,
/// k2 >= 1}; III {k1 >= 1, k2 >= 1}; IV {k1 >= 1, k2 >= 0, k3 >= 1}.
/// Throws PreconditionError on inconsistent lengths.
ClauseSet gen_family(Family tag, std::span<const std::size_t> lengths, std::uint64_t seed);

/// gen_family without the random isomorphism (variables 1..n in chain order).
ClauseSet family_template(Family tag, std::span<const std::size_t> lengths);

}  // namespace twomus
