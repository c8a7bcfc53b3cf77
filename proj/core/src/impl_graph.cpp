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

#include "twomus/impl_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "twomus/errors.hpp"

namespace twomus {
namespace {

constexpr std::uint32_t kUnranked = std::numeric_limits<std::uint32_t>::max();

}  // namespace

LitOrder LitOrder::from_sequence(std::span<const Literal> seq) {
  LitOrder order;
  for (std::size_t r = 0; r < seq.size(); ++r) {
    const Literal x = seq[r];
    if (!x.valid()) throw PreconditionError("literal order contains 0");
    if (x.index() >= order.rank_.size()) order.rank_.resize(x.index() + 2, kUnranked);
    if (order.rank_[x.index()] != kUnranked) throw PreconditionError("literal order repeats a literal");
    order.rank_[x.index()] = static_cast<std::uint32_t>(r);
  }
  if (order.rank_.empty()) order.rank_.assign(2, kUnranked);
  return order;
}

bool LitOrder::ranks(Literal x) const {
  if (is_natural()) return x.valid();
  return x.valid() && x.index() < rank_.size() && rank_[x.index()] != kUnranked;
}

std::uint64_t LitOrder::rank(Literal x) const {
  if (is_natural()) return x.index();
  if (ranks(x)) return rank_[x.index()];
  return (std::uint64_t{1} << 32) + x.index();
}

void LitOrder::require_covers(const ClauseSet& f) const {
  if (is_natural()) return;
  for (const Clause& c : f.clauses())
    for (Literal x : c.literals())
      if (!ranks(x) || !ranks(~x))
        throw PreconditionError("literal order does not rank literal " + std::to_string(x.code()));
}

std::optional<std::size_t> ImpDigraph::clause_of_arc(Literal from, Literal to) const {
  auto targets = out(from);
  auto clauses = out_clauses(from);
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (targets[i] == to) return clauses[i];
  return std::nullopt;
}

std::vector<Literal> ImpDigraph::vertices() const {
  std::vector<Literal> vs;
  vs.reserve(vertex_count_);
  for (std::size_t i = 0; i < present_.size(); ++i)
    if (present_[i]) vs.push_back(Literal::from_index(i));
  std::sort(vs.begin(), vs.end(), [&](Literal a, Literal b) { return order_.less(a, b); });
  return vs;
}

std::vector<Arc> ImpDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Literal x : vertices()) {
    auto targets = out(x);
    auto clauses = out_clauses(x);
    for (std::size_t i = 0; i < targets.size(); ++i) result.push_back({x, targets[i], clauses[i]});
  }
  return result;
}

ImpDigraph build_idg(const ClauseSet& f, const LitOrder& order, std::span<const char> active) {
  if (!active.empty() && active.size() != f.size())
    throw PreconditionError("clause mask size does not match clause-set");
  ImpDigraph g;
  g.order_ = order;
  const std::size_t slots = f.literal_slots();
  g.present_.assign(slots, 0);

  struct Raw {
    Literal from, to;
    std::uint32_t clause;
  };
  std::vector<Raw> raw;
  raw.reserve(2 * f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!active.empty() && !active[i]) continue;
    const Clause& c = f[i];
    if (c.empty()) throw PreconditionError("implication digraph of a clause-set containing the empty clause");
    for (Literal x : c.literals()) {
      if (!order.ranks(x) || !order.ranks(~x))
        throw PreconditionError("literal order does not rank literal " + std::to_string(x.code()));
      g.present_[x.index()] = 1;
      g.present_[(~x).index()] = 1;
    }
    const auto ci = static_cast<std::uint32_t>(i);
    if (c.is_unit()) {
      raw.push_back({~c[0], c[0], ci});
    } else {
      raw.push_back({~c[0], c[1], ci});
      raw.push_back({~c[1], c[0], ci});
    }
  }
  g.vertex_count_ = static_cast<std::size_t>(std::count(g.present_.begin(), g.present_.end(), 1));

  // Counting sort by source, then order each list by target rank.
  g.out_offset_.assign(slots + 1, 0);
  g.in_offset_.assign(slots + 1, 0);
  for (const Raw& a : raw) {
    ++g.out_offset_[a.from.index() + 1];
    ++g.in_offset_[a.to.index() + 1];
  }
  std::partial_sum(g.out_offset_.begin(), g.out_offset_.end(), g.out_offset_.begin());
  std::partial_sum(g.in_offset_.begin(), g.in_offset_.end(), g.in_offset_.begin());
  g.out_target_.resize(raw.size());
  g.out_clause_.resize(raw.size());
  g.in_target_.resize(raw.size());
  {
    std::vector<std::uint32_t> out_fill(g.out_offset_.begin(), g.out_offset_.end() - 1);
    std::vector<std::uint32_t> in_fill(g.in_offset_.begin(), g.in_offset_.end() - 1);
    for (const Raw& a : raw) {
      const std::uint32_t o = out_fill[a.from.index()]++;
      g.out_target_[o] = a.to;
      g.out_clause_[o] = a.clause;
      g.in_target_[in_fill[a.to.index()]++] = a.from;
    }
  }
  std::vector<std::pair<Literal, std::uint32_t>> buf;
  for (std::size_t v = 0; v < slots; ++v) {
    const std::uint32_t lo = g.out_offset_[v], hi = g.out_offset_[v + 1];
    if (hi - lo > 1) {
      buf.clear();
      for (std::uint32_t k = lo; k < hi; ++k) buf.emplace_back(g.out_target_[k], g.out_clause_[k]);
      std::sort(buf.begin(), buf.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
      for (std::uint32_t k = lo; k < hi; ++k) {
        g.out_target_[k] = buf[k - lo].first;
        g.out_clause_[k] = buf[k - lo].second;
      }
    }
    const std::uint32_t ilo = g.in_offset_[v], ihi = g.in_offset_[v + 1];
    std::sort(g.in_target_.begin() + ilo, g.in_target_.begin() + ihi,
              [&](Literal a, Literal b) { return order.less(a, b); });
  }
  return g;
}

void dump_arcs(std::ostream& os, const ImpDigraph& g) {
  for (const Arc& a : g.arcs()) {
    // Clause {-from, to} is stored sorted by index; -c0 -> c1 is the solid arc.
    const bool solid = a.is_unit() || (~a.from).index() < a.to.index();
    os << a.from << " -> " << a.to << ' ' << (solid ? "solid" : "contra") << ' ' << a.clause << '\n';
  }
}

std::uint32_t TraversalScratch::begin(std::size_t slots) {
  if (mark_.size() < slots) mark_.resize(slots, 0);
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  queue_.clear();
  return stamp_;
}

bool reach_masked(const ImpDigraph& g, Literal x, Literal y, std::span<const char> excluded,
                  TraversalScratch& scratch) {
  auto blocked = [&](Literal z) { return !excluded.empty() && excluded[z.index()]; };
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw PreconditionError("reach: literal is not a vertex");
  if (blocked(x) || blocked(y)) throw PreconditionError("reach: endpoint is excluded");
  if (x == y) return true;
  scratch.begin(g.literal_slots());
  auto& queue = scratch.queue();
  queue.push_back(x);
  scratch.see(x.index());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Literal z : g.out(queue[head])) {
      if (scratch.seen(z.index()) || blocked(z)) continue;
      if (z == y) return true;
      scratch.see(z.index());
      queue.push_back(z);
    }
  }
  return false;
}

bool reach(const ImpDigraph& g, Literal x, Literal y, std::span<const Literal> excluded) {
  std::vector<char> mask;
  if (!excluded.empty()) {
    mask.assign(g.literal_slots(), 0);
    for (Literal z : excluded)
      if (g.has_vertex(z)) mask[z.index()] = 1;
  }
  TraversalScratch scratch;
  return reach_masked(g, x, y, mask, scratch);
}

Path::Path(std::vector<Literal> vertices) : vertices_(std::move(vertices)) {
  std::vector<Literal> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("path repeats a vertex");
  if (!sorted.empty() && (!sorted.front().valid() || !sorted.back().valid()))
    throw PreconditionError("path contains literal 0");
  for (Literal x : vertices_)
    if (!x.valid()) throw PreconditionError("path contains literal 0");
}

Path Path::from_codes(std::initializer_list<int> codes) {
  std::vector<Literal> vs;
  for (int c : codes) vs.emplace_back(c);
  return Path(std::move(vs));
}

std::vector<std::pair<Literal, Literal>> Path::arcs() const {
  std::vector<std::pair<Literal, Literal>> result;
  for (std::size_t i = 1; i < vertices_.size(); ++i) result.emplace_back(vertices_[i - 1], vertices_[i]);
  return result;
}

namespace {

// Number of complementary pairs in `vs`; vertices are distinct.
std::size_t clash_count(std::span<const Literal> vs) {
  std::vector<int> vars;
  vars.reserve(vs.size());
  for (Literal x : vs) vars.push_back(x.var());
  std::sort(vars.begin(), vars.end());
  std::size_t clashes = 0;
  for (std::size_t i = 1; i < vars.size(); ++i)
    if (vars[i] == vars[i - 1]) ++clashes;
  return clashes;
}

}  // namespace

bool Path::is_regular() const { return clash_count(vertices_) == 0; }

bool Path::is_nearly_regular() const {
  if (vertices_.size() < 2) return false;
  return clash_count(vertices_) == 1 &&
         clash_count(std::span<const Literal>(vertices_).first(vertices_.size() - 1)) == 0;
}

std::ostream& operator<<(std::ostream& os, const Path& p) {
  os << '(';
  for (std::size_t i = 0; i < p.vertex_count(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

bool is_path_in(const ImpDigraph& g, const Path& p) {
  for (Literal x : p.vertices())
    if (!g.has_vertex(x)) return false;
  for (auto [a, b] : p.arcs())
    if (!g.clause_of_arc(a, b)) return false;
  return true;
}

Path contrapose_path(const Path& p) {
  if (p.length() == 0) throw PreconditionError("contraposition of a path of length 0");
  std::vector<Literal> vs;
  vs.reserve(p.vertex_count());
  for (std::size_t i = p.vertex_count(); i-- > 0;) vs.push_back(~p[i]);
  return Path(std::move(vs));
}

Path concat(const Path& head, const Path& tail) {
  if (head.empty()) return tail;
  if (tail.empty()) return head;
  if (head.last() != tail.first()) throw PreconditionError("concatenation: endpoints do not meet");
  std::vector<Literal> vs(head.vertices().begin(), head.vertices().end());
  vs.insert(vs.end(), tail.vertices().begin() + 1, tail.vertices().end());
  return Path(std::move(vs));
}

RegularDecomposition regular_decompose(const Path& p) {
  if (!p.is_nearly_regular()) throw PreconditionError("regular decomposition of a path that is not nearly regular");
  const Literal clash = ~p.last();
  std::size_t i = 0;
  while (p[i] != clash) ++i;
  auto vs = p.vertices();
  RegularDecomposition d;
  if (i > 0) d.head = Path(std::vector<Literal>(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1));
  d.loop = Path(std::vector<Literal>(vs.begin() + static_cast<std::ptrdiff_t>(i), vs.end()));
  return d;
}

std::vector<std::size_t> path_clauses(const ImpDigraph& g, const Path& p) {
  std::vector<std::size_t> result;
  result.reserve(p.length());
  for (auto [a, b] : p.arcs()) {
    auto c = g.clause_of_arc(a, b);
    if (!c) throw PreconditionError("path uses a non-arc");
    result.push_back(*c);
  }
  return result;
}

}  // namespace twomus
