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

#include "twomus/twosat.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "twomus/errors.hpp"

namespace twomus {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Components {
  std::vector<std::uint32_t> id;  // per literal index; Tarjan numbering is reverse topological
  bool empty_clause = false;
  std::vector<char> used;         // literal index occurs in an active clause (either polarity)
};

Components strongly_connected(const ClauseSet& f, std::span<const char> active) {
  const std::size_t slots = f.literal_slots();
  Components comp;
  comp.used.assign(slots, 0);
  std::vector<std::uint32_t> offset(slots + 1, 0);
  std::vector<std::uint32_t> target;
  auto each_arc = [&](auto&& fn) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!active.empty() && !active[i]) continue;
      const Clause& c = f[i];
      if (c.is_unit()) {
        fn((~c[0]).index(), c[0].index());
      } else if (c.size() == 2) {
        fn((~c[0]).index(), c[1].index());
        fn((~c[1]).index(), c[0].index());
      }
    }
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!active.empty() && !active[i]) continue;
    if (f[i].empty()) comp.empty_clause = true;
    for (Literal x : f[i].literals()) comp.used[x.index()] = comp.used[(~x).index()] = 1;
  }
  each_arc([&](std::size_t a, std::size_t) { ++offset[a + 1]; });
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  target.resize(offset.back());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    each_arc([&](std::size_t a, std::size_t b) { target[fill[a]++] = static_cast<std::uint32_t>(b); });
  }

  comp.id.assign(slots, kNone);
  std::vector<std::uint32_t> low(slots, 0), num(slots, kNone), edge_pos(slots, 0);
  std::vector<std::uint32_t> stack, call;
  std::vector<char> on_stack(slots, 0);
  std::uint32_t counter = 0, next_id = 0;
  for (std::uint32_t root = 0; root < slots; ++root) {
    if (!comp.used[root] || num[root] != kNone) continue;
    call.push_back(root);
    while (!call.empty()) {
      const std::uint32_t v = call.back();
      if (num[v] == kNone) {
        num[v] = low[v] = counter++;
        edge_pos[v] = offset[v];
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (edge_pos[v] < offset[v + 1]) {
        const std::uint32_t w = target[edge_pos[v]++];
        if (num[w] == kNone) {
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == num[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.id[w] = next_id;
        } while (w != v);
        ++next_id;
      }
    }
  }
  return comp;
}

}  // namespace

TwoSatResult solve_2sat(const ClauseSet& f, std::span<const char> active) {
  if (!active.empty() && active.size() != f.size())
    throw PreconditionError("clause mask size does not match clause-set");
  const Components comp = strongly_connected(f, active);
  TwoSatResult result;
  if (comp.empty_clause) return result;
  for (std::size_t i = 0; i < comp.id.size(); i += 2) {
    if (!comp.used[i]) continue;
    if (comp.id[i] == comp.id[i + 1]) {
      result.witness = Literal::from_index(i);
      return result;
    }
  }
  result.satisfiable = true;
  for (std::size_t i = 0; i < comp.id.size(); i += 2) {
    if (!comp.used[i]) continue;
    // Sinks are numbered first; a literal is true when it lies downstream of its complement.
    result.model.set(Literal::from_index(i).var(), comp.id[i] < comp.id[i + 1]);
  }
  return result;
}

bool is_satisfiable(const ClauseSet& f, std::span<const char> active) { return solve_2sat(f, active).satisfiable; }

}  // namespace twomus
