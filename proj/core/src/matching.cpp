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

#include "twomus/matching.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>

namespace twomus {

std::vector<int> find_augmenting_path(std::span<const std::vector<int>> adjacency, std::span<const int> mate,
                                      int root) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> parent(n, -1), base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<char> used(n, 0), blossom(n, 0), mark(n, 0);
  std::deque<int> queue;

  auto lca = [&](int a, int b) {
    std::fill(mark.begin(), mark.end(), 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (mate[a] == kUnmatched) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[mate[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  used[root] = 1;
  queue.push_back(root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int to : adjacency[v]) {
      if (base[v] == base[to] || mate[v] == to) continue;
      if (to == root || (mate[to] != kUnmatched && parent[mate[to]] != -1)) {
        const int cur = lca(v, to);
        std::fill(blossom.begin(), blossom.end(), 0);
        mark_path(v, cur, to);
        mark_path(to, cur, v);
        for (int i = 0; i < n; ++i) {
          if (blossom[base[i]]) {
            base[i] = cur;
            if (!used[i]) {
              used[i] = 1;
              queue.push_back(i);
            }
          }
        }
      } else if (parent[to] == -1) {
        parent[to] = v;
        if (mate[to] == kUnmatched) {
          std::vector<int> path{to};
          int cur = to;
          for (;;) {
            const int pv = parent[cur];
            path.push_back(pv);
            if (mate[pv] == kUnmatched) break;
            cur = mate[pv];
            path.push_back(cur);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        used[mate[to]] = 1;
        queue.push_back(mate[to]);
      }
    }
  }
  return {};
}

namespace {

// Primal-dual weighted blossom algorithm (Galil's formulation), O(n^3).
// Endpoints are numbered 2k and 2k+1 for edge k; dual variables are kept
// doubled so integer weights give integer arithmetic.
class WeightedMatcher {
 public:
  WeightedMatcher(int n, std::span<const WeightedEdge> edges, bool max_cardinality)
      : n_(n), edges_(edges.begin(), edges.end()), max_cardinality_(max_cardinality) {}

  std::vector<int> run();

 private:
  std::int64_t slack(int k) const {
    const auto& e = edges_[static_cast<std::size_t>(k)];
    return dual_[e.u] + dual_[e.v] - 2 * e.weight;
  }
  int endpoint(int p) const { return p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v; }
  int wrap(int b, int j) const {
    const int len = static_cast<int>(childs_[b].size());
    return ((j % len) + len) % len;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : childs_[b]) leaves(t, out);
  }
  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int n_;
  std::vector<WeightedEdge> edges_;
  bool max_cardinality_;

  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, parent_, base_, bestedge_;
  std::vector<std::vector<int>> childs_, endps_, bestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allow_;
  std::vector<int> queue_;
};

void WeightedMatcher::assign_label(int w, int t, int p) {
  const int b = inblossom_[w];
  assert(label_[w] == 0 && label_[b] == 0);
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const int base = base_[b];
    assert(mate_[base] >= 0);
    assign_label(endpoint(mate_[base]), 1, mate_[base] ^ 1);
  }
}

int WeightedMatcher::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
      break;
    }
    assert(label_[b] == 1);
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint(labelend_[b]);
      b = inblossom_[v];
      assert(label_[b] == 2);
      v = endpoint(labelend_[b]);
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void WeightedMatcher::add_blossom(int base, int k) {
  int v = edges_[k].u, w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v], bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  auto& path = childs_[b];
  auto& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint(labelend_[bv]);
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint(labelend_[bw]);
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for (int leaf : leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  std::vector<int> bestedgeto(2 * n_, -1);
  for (int sub : path) {
    std::vector<std::vector<int>> lists;
    if (!has_bestedges_[sub]) {
      for (int leaf : leaves(sub)) {
        std::vector<int> l;
        for (int p : neighbend_[leaf]) l.push_back(p / 2);
        lists.push_back(std::move(l));
      }
    } else {
      lists.push_back(bestedges_[sub]);
    }
    for (const auto& list : lists) {
      for (int e : list) {
        int i = edges_[e].u, j = edges_[e].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
          bestedgeto[bj] = e;
      }
    }
    bestedges_[sub].clear();
    has_bestedges_[sub] = 0;
    bestedge_[sub] = -1;
  }
  bestedges_[b].clear();
  for (int e : bestedgeto)
    if (e != -1) bestedges_[b].push_back(e);
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int e : bestedges_[b])
    if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
}

void WeightedMatcher::expand_blossom(int b, bool endstage) {
  const std::vector<int> children = childs_[b];
  for (int s : children) {
    parent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for (int leaf : leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const int entrychild = inblossom_[endpoint(labelend_[b] ^ 1)];
    int j = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), entrychild) - childs_[b].begin());
    int jstep, endptrick;
    if (j & 1) {
      j -= static_cast<int>(childs_[b].size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint(p ^ 1)] = 0;
      label_[endpoint(endps_[b][wrap(b, j - endptrick)] ^ endptrick ^ 1)] = 0;
      assign_label(endpoint(p ^ 1), 2, p);
      allow_[endps_[b][wrap(b, j - endptrick)] / 2] = 1;
      j += jstep;
      p = endps_[b][wrap(b, j - endptrick)] ^ endptrick;
      allow_[p / 2] = 1;
      j += jstep;
    }
    int bv = childs_[b][wrap(b, j)];
    label_[endpoint(p ^ 1)] = label_[bv] = 2;
    labelend_[endpoint(p ^ 1)] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (childs_[b][wrap(b, j)] != entrychild) {
      bv = childs_[b][wrap(b, j)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int found = -1;
      for (int leaf : leaves(bv)) {
        if (label_[leaf] != 0) {
          found = leaf;
          break;
        }
      }
      if (found != -1) {
        assert(label_[found] == 2 && inblossom_[found] == bv);
        label_[found] = 0;
        label_[endpoint(mate_[base_[bv]])] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  bestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void WeightedMatcher::augment_blossom(int b, int v) {
  int t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= n_) augment_blossom(t, v);
  const int i = static_cast<int>(std::find(childs_[b].begin(), childs_[b].end(), t) - childs_[b].begin());
  int j = i, jstep, endptrick;
  if (i & 1) {
    j -= static_cast<int>(childs_[b].size());
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = childs_[b][wrap(b, j)];
    const int p = endps_[b][wrap(b, j - endptrick)] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint(p));
    j += jstep;
    t = childs_[b][wrap(b, j)];
    if (t >= n_) augment_blossom(t, endpoint(p ^ 1));
    mate_[endpoint(p)] = p ^ 1;
    mate_[endpoint(p ^ 1)] = p;
  }
  std::rotate(childs_[b].begin(), childs_[b].begin() + i, childs_[b].end());
  std::rotate(endps_[b].begin(), endps_[b].begin() + i, endps_[b].end());
  base_[b] = base_[childs_[b][0]];
  assert(base_[b] == v);
}

void WeightedMatcher::augment_matching(int k) {
  const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (const auto& sp : ends) {
    int s = sp[0], p = sp[1];
    for (;;) {
      const int bs = inblossom_[s];
      assert(label_[bs] == 1);
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint(labelend_[bs]);
      const int bt = inblossom_[t];
      assert(label_[bt] == 2);
      s = endpoint(labelend_[bt]);
      const int j = endpoint(labelend_[bt] ^ 1);
      assert(base_[bt] == t);
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> WeightedMatcher::run() {
  const int n = n_;
  std::vector<int> result(static_cast<std::size_t>(n), kUnmatched);
  if (edges_.empty() || n == 0) return result;
  const int m = static_cast<int>(edges_.size());
  std::int64_t maxweight = 0;
  for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);

  neighbend_.assign(n, {});
  for (int k = 0; k < m; ++k) {
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(n, -1);
  label_.assign(2 * n, 0);
  labelend_.assign(2 * n, -1);
  inblossom_.resize(n);
  std::iota(inblossom_.begin(), inblossom_.end(), 0);
  parent_.assign(2 * n, -1);
  childs_.assign(2 * n, {});
  base_.assign(2 * n, -1);
  std::iota(base_.begin(), base_.begin() + n, 0);
  endps_.assign(2 * n, {});
  bestedge_.assign(2 * n, -1);
  bestedges_.assign(2 * n, {});
  has_bestedges_.assign(2 * n, 0);
  unused_.clear();
  for (int b = n; b < 2 * n; ++b) unused_.push_back(b);
  dual_.assign(2 * n, 0);
  std::fill(dual_.begin(), dual_.begin() + n, maxweight);
  allow_.assign(m, 0);

  for (int stage = 0; stage < n; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n; b < 2 * n; ++b) {
      bestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allow_.begin(), allow_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n; ++v)
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

    bool augmented = false;
    for (;;) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        assert(label_[inblossom_[v]] == 1);
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint(p);
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allow_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allow_[k] = 1;
          }
          if (allow_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1, deltaedge = -1, deltablossom = -1;
      std::int64_t delta = 0;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n);
      }
      for (int v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t kslack = slack(bestedge_[b]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n));
      }
      for (int v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 1)
          dual_[v] -= delta;
        else if (label_[inblossom_[v]] == 2)
          dual_[v] += delta;
      }
      for (int b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1)
            dual_[b] += delta;
          else if (label_[b] == 2)
            dual_[b] -= delta;
        }
      }
      if (deltatype == 1) break;
      if (deltatype == 2) {
        allow_[deltaedge] = 1;
        int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allow_[deltaedge] = 1;
        queue_.push_back(edges_[deltaedge].u);
      } else if (deltatype == 4) {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n; b < 2 * n; ++b)
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) expand_blossom(b, true);
  }
  for (int v = 0; v < n; ++v)
    if (mate_[v] >= 0) result[v] = endpoint(mate_[v]);
  return result;
}

}  // namespace

std::vector<int> max_weight_matching(int n, std::span<const WeightedEdge> edges, bool max_cardinality) {
  return WeightedMatcher(n, edges, max_cardinality).run();
}

}  // namespace twomus
