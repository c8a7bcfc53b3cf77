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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "twomus/matching.hpp"

namespace twomus {
namespace {

using Score = std::pair<int, std::int64_t>;

Score brute_best(int n, const std::vector<WeightedEdge>& es, bool max_card) {
  Score best{-1, -1};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int, std::int64_t)> rec = [&](std::size_t k, int c, std::int64_t w) {
    if (k == es.size()) {
      best = std::max(best, max_card ? Score{c, w} : Score{0, w});
      return;
    }
    rec(k + 1, c, w);
    const auto& e = es[k];
    if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
      rec(k + 1, c + 1, w + e.weight);
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  rec(0, 0, 0);
  return best;
}

TEST(MaxWeightMatching, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(1);
  for (int it = 0; it < 5000; ++it) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 14);
    std::vector<WeightedEdge> es;
    for (int k = 0; k < m; ++k) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u != v) es.push_back({u, v, static_cast<std::int64_t>(rng() % 5 + 1) * 2});
    }
    const bool mc = rng() % 2 == 0;
    const std::vector<int> mate = max_weight_matching(n, es, mc);
    ASSERT_EQ(mate.size(), static_cast<std::size_t>(n));
    int c = 0;
    std::int64_t w = 0;
    for (int v = 0; v < n; ++v) {
      const int p = mate[static_cast<std::size_t>(v)];
      if (p == kUnmatched) continue;
      ASSERT_EQ(mate[static_cast<std::size_t>(p)], v);
      if (v > p) continue;
      ++c;
      std::int64_t bw = -1;
      for (const auto& e : es)
        if ((e.u == v && e.v == p) || (e.u == p && e.v == v)) bw = std::max(bw, e.weight);
      ASSERT_GE(bw, 0);
      w += bw;
    }
    const Score got = mc ? Score{c, w} : Score{0, w};
    EXPECT_EQ(got, brute_best(n, es, mc)) << "iteration " << it;
  }
}

TEST(MaxWeightMatching, EmptyGraph) {
  const std::vector<int> mate = max_weight_matching(3, {}, true);
  EXPECT_EQ(mate, (std::vector<int>{kUnmatched, kUnmatched, kUnmatched}));
}

// Exhaustive search for an alternating path root, ..., exposed vertex.
bool brute_augmenting(const std::vector<std::vector<int>>& adj, const std::vector<int>& mate, int root) {
  std::vector<char> on(adj.size(), 0);
  std::function<bool(int, bool)> rec = [&](int v, bool need_free_edge) -> bool {
    if (need_free_edge) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (on[static_cast<std::size_t>(w)] || mate[static_cast<std::size_t>(v)] == w) continue;
        if (mate[static_cast<std::size_t>(w)] == kUnmatched) return true;
        on[static_cast<std::size_t>(w)] = 1;
        if (rec(w, false)) return true;
        on[static_cast<std::size_t>(w)] = 0;
      }
      return false;
    }
    const int p = mate[static_cast<std::size_t>(v)];
    if (on[static_cast<std::size_t>(p)]) return false;
    on[static_cast<std::size_t>(p)] = 1;
    const bool ok = rec(p, true);
    on[static_cast<std::size_t>(p)] = 0;
    return ok;
  };
  on[static_cast<std::size_t>(root)] = 1;
  return rec(root, true);
}

TEST(AugmentingPath, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(4);
  int found = 0;
  for (int it = 0; it < 5000; ++it) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> mate(static_cast<std::size_t>(n), kUnmatched);
    const int m = static_cast<int>(rng() % 16);
    for (int k = 0; k < m; ++k) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v) continue;
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
      if (rng() % 2 == 0 && mate[static_cast<std::size_t>(u)] == kUnmatched &&
          mate[static_cast<std::size_t>(v)] == kUnmatched) {
        mate[static_cast<std::size_t>(u)] = v;
        mate[static_cast<std::size_t>(v)] = u;
      }
    }
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
      if (mate[static_cast<std::size_t>(v)] == kUnmatched) root = v;
    if (root < 0) continue;
    const std::vector<int> path = find_augmenting_path(adj, mate, root);
    ASSERT_EQ(!path.empty(), brute_augmenting(adj, mate, root)) << "iteration " << it;
    if (path.empty()) continue;
    ++found;
    ASSERT_EQ(path.size() % 2, 0U);
    EXPECT_EQ(path.front(), root);
    EXPECT_EQ(mate[static_cast<std::size_t>(path.back())], kUnmatched);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
      EXPECT_FALSE(seen[static_cast<std::size_t>(path[i])]);
      seen[static_cast<std::size_t>(path[i])] = 1;
      if (i + 1 == path.size()) break;
      const int a = path[i];
      const int b = path[i + 1];
      const auto& na = adj[static_cast<std::size_t>(a)];
      EXPECT_NE(std::find(na.begin(), na.end(), b), na.end());
      EXPECT_EQ(mate[static_cast<std::size_t>(a)] == b, i % 2 == 1);
    }
  }
  EXPECT_GT(found, 500);
}

}  // namespace
}  // namespace twomus
