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

#include "twomus/mus_find.hpp"

#include <algorithm>
#include <functional>

#include "twomus/errors.hpp"
#include "twomus/matching.hpp"
#include "twomus/mu_check.hpp"
#include "twomus/mus_enum.hpp"
#include "twomus/twosat.hpp"

namespace twomus {

MusRecord find_mus_deletion(const ClauseSet& f) {
  if (is_satisfiable(f)) throw PreconditionError("clause-set is satisfiable");
  std::vector<char> active(f.size(), 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    active[i] = 0;
    if (is_satisfiable(f, active)) active[i] = 1;
  }
  MusRecord rec;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (active[i]) rec.clauses.push_back(i);
  const ClauseSet sub = materialize(f, rec);
  if (!sub.has_empty_clause() && measures(sub).deficiency == 1) rec.family = classify_family(sub);
  return rec;
}

namespace {

std::optional<Path> brute_regular_path(const ImpDigraph& g, Literal x, Literal y, bool shortest) {
  std::vector<char> used(g.literal_slots(), 0);
  std::vector<Literal> cur{x}, best;
  used[x.index()] = 1;
  bool found = false;
  std::function<void()> dfs = [&] {
    if (found && !shortest) return;
    const Literal top = cur.back();
    if (top == y) {
      if (!found || cur.size() < best.size()) best = cur;
      found = true;
      return;
    }
    if (shortest && found && cur.size() >= best.size()) return;
    for (Literal z : g.out(top)) {
      if (used[z.index()] || used[(~z).index()]) continue;
      used[z.index()] = 1;
      cur.push_back(z);
      dfs();
      cur.pop_back();
      used[z.index()] = 0;
    }
  };
  dfs();
  if (!found) return std::nullopt;
  return Path(best);
}

}  // namespace

std::optional<Path> regular_path(const ImpDigraph& g, Literal x, Literal y, RegularPathOptions options) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw PreconditionError("regular_path: literal is not a vertex");
  if (x.var() == y.var()) throw PreconditionError("regular_path: endpoints share a variable");
  if (options.brute_force) return brute_regular_path(g, x, y, options.shortest);

  // Vertex i of the auxiliary graph is the literal with index i.
  const int n = static_cast<int>(g.literal_slots());
  const int removed_a = static_cast<int>(x.index());
  const int removed_b = static_cast<int>((~y).index());
  const int s = static_cast<int>((~x).index());
  const int t = static_cast<int>(y.index());
  auto live = [&](int v) { return v != removed_a && v != removed_b; };

  std::vector<std::pair<int, int>> clause_edges;
  for (const Arc& a : g.arcs()) {
    if (a.is_unit()) continue;
    const int u = static_cast<int>((~a.from).index());
    const int v = static_cast<int>(a.to.index());
    if (u < v && live(u) && live(v)) clause_edges.emplace_back(u, v);
  }
  std::vector<int> mate(static_cast<std::size_t>(n), kUnmatched);
  for (int v = 0; v + 1 < n; v += 2) {
    if (v / 2 == static_cast<int>(x.var()) - 1 || v / 2 == static_cast<int>(y.var()) - 1) continue;
    mate[v] = v + 1;
    mate[v + 1] = v;
  }

  std::vector<int> seq;
  if (!options.shortest) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : clause_edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v)
      if (mate[v] != kUnmatched) adj[v].push_back(mate[v]);
    seq = find_augmenting_path(adj, mate, s);
    if (seq.empty() || seq.back() != t) return std::nullopt;
  } else {
    std::vector<WeightedEdge> edges;
    for (int v = 0; v < n; ++v)
      if (mate[v] > v) edges.push_back({v, mate[v], 4});
    for (auto [u, v] : clause_edges) edges.push_back({u, v, 2});
    const std::vector<int> best = max_weight_matching(n, edges, true);
    // Follow best from s, alternating with the internal edges, until t.
    int v = s;
    seq.push_back(v);
    for (;;) {
      const int w = best[static_cast<std::size_t>(v)];
      if (w == kUnmatched || mate[v] == w) return std::nullopt;
      seq.push_back(w);
      if (w == t) break;
      if (mate[w] == kUnmatched) return std::nullopt;
      v = mate[w];
      seq.push_back(v);
    }
  }
  std::vector<Literal> lits{x};
  for (std::size_t i = 1; i < seq.size(); i += 2) lits.push_back(Literal::from_index(static_cast<std::size_t>(seq[i])));
  return Path(std::move(lits));
}

namespace {

std::size_t require_unit(const ClauseSet& f, const Clause& u) {
  if (!u.is_unit()) throw PreconditionError("not a unit-clause");
  const auto idx = f.index_of(u);
  if (!idx) throw PreconditionError("unit-clause not in clause-set");
  return *idx;
}

void require_no_bottom(const ClauseSet& f) {
  if (f.has_empty_clause()) throw PreconditionError("clause-set contains the empty clause");
}

MusRecord record_from_path(const ImpDigraph& g, const Path& witness, std::size_t unit, Family family) {
  MusRecord rec;
  rec.clauses = path_clauses(g, witness);
  rec.clauses.push_back(unit);
  std::sort(rec.clauses.begin(), rec.clauses.end());
  rec.clauses.erase(std::unique(rec.clauses.begin(), rec.clauses.end()), rec.clauses.end());
  rec.family = family;
  rec.witness = witness;
  return rec;
}

}  // namespace

std::optional<MusRecord> mus_two_units(const ClauseSet& f, const Clause& ux, const Clause& uy, bool shortest) {
  require_no_bottom(f);
  const std::size_t ix = require_unit(f, ux);
  const std::size_t iy = require_unit(f, uy);
  if (ix == iy) throw PreconditionError("the two unit-clauses coincide");
  const Literal x = ux[0], y = uy[0];
  const ImpDigraph g = build_idg(f);
  std::optional<Path> p;
  if (y == ~x)
    p = Path({x});
  else
    p = regular_path(g, x, ~y, {shortest, false});
  if (!p) return std::nullopt;
  std::vector<Literal> w(p->vertices().begin(), p->vertices().end());
  w.push_back(y);
  return record_from_path(g, Path(std::move(w)), ix, p->length() == 0 ? Family::Ia : Family::Ib);
}

std::optional<MusRecord> mus_one_unit(const ClauseSet& f, const Clause& ux, const LitOrder& order) {
  require_no_bottom(f);
  require_unit(f, ux);
  UnitEnumerator e(f, ux, EnumOptions{order, {}, false});
  return e.next();
}

std::optional<MusRecord> mus_family_iia(const ClauseSet& f, const Clause& ux) {
  require_no_bottom(f);
  const std::size_t ix = require_unit(f, ux);
  const Literal x = ux[0];
  const ImpDigraph g = build_idg(f);
  for (Literal y : g.in(~x)) {
    if (y.var() == x.var()) continue;
    const auto p = regular_path(g, x, y);
    if (!p) continue;
    std::vector<Literal> w(p->vertices().begin(), p->vertices().end());
    w.push_back(~x);
    return record_from_path(g, Path(std::move(w)), ix, Family::IIa);
  }
  return std::nullopt;
}

std::optional<MusRecord> mus_unit_sweep(const ClauseSet& f, UnitSweep mode, bool shortest) {
  require_no_bottom(f);
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].is_unit()) units.push_back(i);
  std::sort(units.begin(), units.end(),
            [&](std::size_t a, std::size_t b) { return f[a][0].index() < f[b][0].index(); });

  switch (mode) {
    case UnitSweep::ExactlyTwo: {
      std::optional<MusRecord> best;
      for (std::size_t i = 0; i < units.size(); ++i) {
        for (std::size_t j = i + 1; j < units.size(); ++j) {
          auto rec = mus_two_units(f, f[units[i]], f[units[j]], shortest);
          if (!rec) continue;
          if (!shortest) return rec;
          if (!best || rec->clauses.size() < best->clauses.size()) best = std::move(rec);
        }
      }
      return best;
    }
    case UnitSweep::AtLeastOne:
      for (std::size_t u : units)
        if (auto rec = mus_one_unit(f, f[u])) return rec;
      return std::nullopt;
    case UnitSweep::ExactlyOne:
      for (std::size_t u : units) {
        std::vector<char> active(f.size(), 1);
        for (std::size_t other : units)
          if (other != u) active[other] = 0;
        UnitEnumerator e(f, f[u], EnumOptions{{}, std::move(active), false});
        if (auto rec = e.next()) return rec;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace twomus
