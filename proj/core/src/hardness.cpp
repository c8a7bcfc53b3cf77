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

#include "twomus/hardness.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "twomus/errors.hpp"

namespace twomus {

std::vector<Var> StDigraph::vertices() const {
  std::vector<Var> vs{s, t};
  for (auto [a, b] : arcs) {
    vs.push_back(a);
    vs.push_back(b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Var StDigraph::x0() const {
  Var m = std::max(s, t);
  for (auto [a, b] : arcs) m = std::max({m, a, b});
  return m + 1;
}

void StDigraph::validate() const {
  if (s <= 0 || t <= 0) throw InputError("st-digraph: s and t must be positive ids");
  if (s == t) throw InputError("st-digraph: s equals t");
  for (auto [a, b] : arcs) {
    if (a <= 0 || b <= 0) throw InputError("st-digraph: vertex ids must be positive");
    if (a == b) throw InputError("st-digraph: self-loop at " + std::to_string(a));
    if ((a == s && b == t) || (a == t && b == s)) throw InputError("st-digraph: arc between s and t");
  }
}

StDigraph parse_st_digraph(std::istream& in) {
  StDigraph g;
  std::string line;
  std::size_t lineno = 0;
  bool have_s = false, have_t = false;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    long long a = 0, b = 0;
    if (tag == "s" || tag == "t") {
      if (!(ls >> a)) fail("expected a vertex id");
      bool& have = tag == "s" ? have_s : have_t;
      if (have) fail("duplicate '" + tag + "' line");
      have = true;
      (tag == "s" ? g.s : g.t) = static_cast<Var>(a);
    } else if (tag == "e") {
      if (!(ls >> a >> b)) fail("expected two vertex ids");
      g.arcs.emplace_back(static_cast<Var>(a), static_cast<Var>(b));
    } else {
      fail("unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
    if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000) fail("vertex id out of range");
  }
  if (!have_s || !have_t) throw ParseError("st-digraph: missing 's' or 't' line");
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  g.validate();
  return g;
}

StDigraph parse_st_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_st_digraph(in);
}

void write_st_digraph(std::ostream& os, const StDigraph& g) {
  os << "s " << g.s << "\nt " << g.t << '\n';
  for (auto [a, b] : g.arcs) os << "e " << a << ' ' << b << '\n';
}

namespace {

Literal image(const StDigraph& g, Var v) {
  if (v == g.s) return Literal(g.x0());
  if (v == g.t) return ~Literal(g.x0());
  return Literal(v);
}

}  // namespace

ClauseSet translate_cdpp(const StDigraph& g) {
  g.validate();
  ClauseSet f;
  for (auto [a, b] : g.arcs) f.add(Clause{~image(g, a), image(g, b)});
  return f;
}

ClauseSet translate_cdpp_prime(const StDigraph& g) {
  g.validate();
  const Literal x0(g.x0()), y0(g.y0());
  ClauseSet f;
  f.add(Clause{x0, y0});
  for (auto [a, b] : g.arcs) {
    if (a == g.t)
      f.add(Clause{~y0, image(g, b)});
    else if (b == g.s)
      f.add(Clause{~image(g, a), ~y0});
    else
      f.add(Clause{~image(g, a), image(g, b)});
  }
  return f;
}

namespace {

struct Adjacency {
  explicit Adjacency(const StDigraph& g) {
    Var m = g.x0();
    out.resize(static_cast<std::size_t>(m));
    for (auto [a, b] : g.arcs) out[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<std::vector<Var>> out;
};

bool reaches(const Adjacency& adj, Var from, Var to, const std::vector<char>& blocked) {
  std::vector<char> seen(adj.out.size(), 0);
  std::vector<Var> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    const Var v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (Var w : adj.out[static_cast<std::size_t>(v)]) {
      const auto i = static_cast<std::size_t>(w);
      if (seen[i] || blocked[i]) continue;
      seen[i] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace

bool has_special_closed_walk(const StDigraph& g) {
  g.validate();
  const Adjacency adj(g);
  const std::vector<char> none(adj.out.size(), 0);
  return reaches(adj, g.s, g.t, none) && reaches(adj, g.t, g.s, none);
}

bool has_special_cycle(const StDigraph& g, std::size_t bound) {
  g.validate();
  const std::size_t nv = g.vertices().size();
  if (nv > bound)
    throw BoundExceeded("special-cycle search: " + std::to_string(nv) + " vertices exceed bound " +
                        std::to_string(bound));
  const Adjacency adj(g);
  std::vector<char> on_path(adj.out.size(), 0);
  // Enumerate simple s -> t paths; the internal vertices are blocked for the return path.
  std::function<bool(Var)> dfs = [&](Var v) {
    if (v == g.t) {
      on_path[static_cast<std::size_t>(g.s)] = 0;
      const bool ok = reaches(adj, g.t, g.s, on_path);
      on_path[static_cast<std::size_t>(g.s)] = 1;
      return ok;
    }
    for (Var w : adj.out[static_cast<std::size_t>(v)]) {
      const auto i = static_cast<std::size_t>(w);
      if (on_path[i]) continue;
      if (w != g.t) on_path[i] = 1;
      const bool found = dfs(w);
      if (w != g.t) on_path[i] = 0;
      if (found) return true;
    }
    return false;
  };
  on_path[static_cast<std::size_t>(g.s)] = 1;
  return dfs(g.s);
}

std::optional<Assignment> constant_model(const StDigraph& g) {
  g.validate();
  bool s_out = false, s_in = false, t_out = false, t_in = false;
  for (auto [a, b] : g.arcs) {
    s_out |= a == g.s;
    s_in |= b == g.s;
    t_out |= a == g.t;
    t_in |= b == g.t;
  }
  bool x0_value, rest_value;
  if (!s_out) {
    x0_value = true, rest_value = false;
  } else if (!s_in) {
    x0_value = false, rest_value = true;
  } else if (!t_out) {
    x0_value = false, rest_value = false;
  } else if (!t_in) {
    x0_value = true, rest_value = true;
  } else {
    return std::nullopt;
  }
  Assignment phi;
  phi.set(g.x0(), x0_value);
  for (Var v : g.vertices())
    if (v != g.s && v != g.t) phi.set(v, rest_value);
  return phi;
}

}  // namespace twomus
