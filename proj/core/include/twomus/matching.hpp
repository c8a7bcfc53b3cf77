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

// General-graph matching primitives on vertices 0..n-1.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace twomus {

inline constexpr int kUnmatched = -1;

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

/// Edmonds search for one M-augmenting path starting at the exposed vertex
/// `root`. `mate[v]` is v's partner or kUnmatched. Returns the vertex
/// sequence root..end (even number of vertices), or empty if none exists.
std::vector<int> find_augmenting_path(std::span<const std::vector<int>> adjacency, std::span<const int> mate,
                                      int root);

/// Maximum-weight matching by the primal-dual blossom method. With
/// `max_cardinality`, maximum weight among maximum-cardinality matchings.
/// Returns mate per vertex (size n).
std::vector<int> max_weight_matching(int n, std::span<const WeightedEdge> edges, bool max_cardinality);

}  // namespace twomus
