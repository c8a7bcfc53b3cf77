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

#include "twomus/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "twomus/errors.hpp"
#include "twomus/twosat.hpp"

namespace twomus {
namespace {

constexpr std::size_t kTableVars = 16;

// Truth tables over var(f) renumbered densely; bit a of a clause's table is
// set iff assignment a satisfies it.
class TruthTables {
 public:
  explicit TruthTables(const ClauseSet& f) {
    std::unordered_map<Var, std::size_t> pos;
    for (Var v : f.variables()) pos.emplace(v, pos.size());
    n_ = pos.size();
    words_ = n_ >= 6 ? (std::size_t{1} << n_) / 64 : 1;
    const std::size_t assignments = std::size_t{1} << n_;
    tables_.assign(f.size() * words_, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t a = 0; a < assignments; ++a) {
        bool sat = false;
        for (Literal x : f[i].literals()) {
          const bool val = ((a >> pos.at(x.var())) & 1U) != 0;
          sat = sat || (x.negative() ? !val : val);
        }
        if (sat) tables_[i * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
    full_.assign(words_, ~std::uint64_t{0});
    if (assignments < 64) full_[0] = (std::uint64_t{1} << assignments) - 1;
  }

  std::size_t words() const { return words_; }
  const std::vector<std::uint64_t>& full() const { return full_; }
  const std::uint64_t* table(std::size_t i) const { return tables_.data() + i * words_; }

  bool satisfiable(std::span<const char> active) const {
    std::vector<std::uint64_t> acc = full_;
    for (std::size_t i = 0; i < active.size(); ++i)
      if (active[i])
        for (std::size_t w = 0; w < words_; ++w) acc[w] &= table(i)[w];
    return std::any_of(acc.begin(), acc.end(), [](std::uint64_t w) { return w != 0; });
  }

 private:
  std::size_t n_ = 0, words_ = 1;
  std::vector<std::uint64_t> tables_;
  std::vector<std::uint64_t> full_;
};

}  // namespace

bool brute_is_mu(const ClauseSet& f) {
  std::vector<char> active(f.size(), 1);
  if (f.variables().size() <= kTableVars) {
    const TruthTables tt(f);
    if (tt.satisfiable(active)) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      active[i] = 0;
      const bool sat = tt.satisfiable(active);
      active[i] = 1;
      if (!sat) return false;
    }
    return true;
  }
  if (is_satisfiable(f, active)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    active[i] = 0;
    const bool sat = is_satisfiable(f, active);
    active[i] = 1;
    if (!sat) return false;
  }
  return true;
}

std::vector<MusRecord> brute_mus_enum(const ClauseSet& f, std::size_t bound) {
  const std::size_t c = f.size();
  if (c > bound)
    throw BoundExceeded("MUS oracle: " + std::to_string(c) + " clauses exceed bound " + std::to_string(bound));
  const std::size_t subsets = std::size_t{1} << c;
  std::vector<char> unsat(subsets, 0);

  if (f.variables().size() <= 12) {
    // Depth-first over subsets, intersecting satisfying-assignment tables.
    const TruthTables tt(f);
    const std::size_t words = tt.words();
    std::vector<std::uint64_t> stack((c + 1) * words);
    std::copy(tt.full().begin(), tt.full().end(), stack.begin());
    std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t next, std::size_t mask,
                                                                          std::size_t depth) {
      const std::uint64_t* cur = stack.data() + depth * words;
      bool any = false;
      for (std::size_t w = 0; w < words && !any; ++w) any = cur[w] != 0;
      if (!any) {
        // Every superset is unsatisfiable as well.
        const std::size_t rest = ((subsets - 1) >> next) << next;
        for (std::size_t sup = rest;; sup = (sup - 1) & rest) {
          unsat[mask | sup] = 1;
          if (sup == 0) break;
        }
        return;
      }
      for (std::size_t i = next; i < c; ++i) {
        std::uint64_t* nxt = stack.data() + (depth + 1) * words;
        const std::uint64_t* t = tt.table(i);
        for (std::size_t w = 0; w < words; ++w) nxt[w] = cur[w] & t[w];
        walk(i + 1, mask | (std::size_t{1} << i), depth + 1);
      }
    };
    walk(0, 0, 0);
  } else {
    std::vector<char> active(c);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      for (std::size_t i = 0; i < c; ++i) active[i] = static_cast<char>((mask >> i) & 1U);
      unsat[mask] = !is_satisfiable(f, active);
    }
  }

  std::vector<std::size_t> found;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (!unsat[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < c && minimal; ++i)
      if (((mask >> i) & 1U) && unsat[mask & ~(std::size_t{1} << i)]) minimal = false;
    if (minimal) found.push_back(mask);
  }
  std::vector<MusRecord> out;
  for (std::size_t mask : found) {
    MusRecord rec;
    for (std::size_t i = 0; i < c; ++i)
      if ((mask >> i) & 1U) rec.clauses.push_back(i);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const MusRecord& a, const MusRecord& b) {
    if (a.clauses.size() != b.clauses.size()) return a.clauses.size() < b.clauses.size();
    return a.clauses < b.clauses;
  });
  return out;
}

std::vector<Path> brute_paths(const ImpDigraph& g, Literal x, PathMode mode, Literal y, std::size_t bound) {
  if (g.vertex_count() > bound)
    throw BoundExceeded("path oracle: " + std::to_string(g.vertex_count()) + " vertices exceed bound " +
                        std::to_string(bound));
  if (!g.has_vertex(x)) throw PreconditionError("path oracle: start is not a vertex");
  if (mode != PathMode::NearlyRegular && !g.has_vertex(y)) throw PreconditionError("path oracle: end is not a vertex");
  std::vector<Path> out;
  std::vector<Literal> cur{x};
  std::vector<char> used(g.literal_slots(), 0);
  used[x.index()] = 1;
  std::function<void()> dfs = [&] {
    const Literal top = cur.back();
    if (mode != PathMode::NearlyRegular && top == y) {
      out.emplace_back(cur);
      return;
    }
    for (Literal z : g.out(top)) {
      if (used[z.index()]) continue;
      const bool clash = used[(~z).index()] != 0;
      if (clash && mode == PathMode::Regular) continue;
      cur.push_back(z);
      if (clash) {
        if (mode == PathMode::NearlyRegular) out.emplace_back(cur);
        if (mode == PathMode::Simple) {
          used[z.index()] = 1;
          dfs();
          used[z.index()] = 0;
        }
      } else {
        used[z.index()] = 1;
        dfs();
        used[z.index()] = 0;
      }
      cur.pop_back();
    }
  };
  dfs();
  return out;
}

namespace {

void require_lengths(Family tag, std::span<const std::size_t> k) {
  auto bad = [&] { throw PreconditionError("inconsistent chain lengths for Family " + std::string(to_string(tag))); };
  switch (tag) {
    case Family::Ia:
      if (!k.empty()) bad();
      break;
    case Family::Ib:
      if (k.size() != 1) bad();
      break;
    case Family::IIa:
      if (k.size() != 1 || k[0] < 1) bad();
      break;
    case Family::IIb:
      if (k.size() != 2 || k[1] < 1) bad();
      break;
    case Family::III:
      if (k.size() != 2 || k[0] < 1 || k[1] < 1) bad();
      break;
    case Family::IV:
      if (k.size() != 3 || k[0] < 1 || k[2] < 1) bad();
      break;
  }
}

// Adds the implication chain from -> a_1 -> ... -> a_k -> to with fresh a_i.
void chain(ClauseSet& f, Var& next, Literal from, std::size_t k, Literal to) {
  Literal prev = from;
  for (std::size_t i = 0; i < k; ++i) {
    const Literal a(next++);
    f.add(Clause{~prev, a});
    prev = a;
  }
  f.add(Clause{~prev, to});
}

}  // namespace

ClauseSet family_template(Family tag, std::span<const std::size_t> k) {
  require_lengths(tag, k);
  ClauseSet f;
  const Literal x(1);
  Var next = 2;
  switch (tag) {
    case Family::Ia:
      f.add(Clause{x});
      f.add(Clause{~x});
      break;
    case Family::Ib: {
      f.add(Clause{x});
      const Literal y(static_cast<Var>(2 + k[0]));
      chain(f, next, x, k[0], ~y);
      f.add(Clause{y});
      break;
    }
    case Family::IIa:
      f.add(Clause{x});
      chain(f, next, x, k[0], ~x);
      break;
    case Family::IIb: {
      f.add(Clause{x});
      const Literal y(static_cast<Var>(2 + k[0]));
      chain(f, next, x, k[0], y);
      ++next;
      chain(f, next, y, k[1], ~y);
      break;
    }
    case Family::III:
      chain(f, next, x, k[0], ~x);
      chain(f, next, ~x, k[1], x);
      break;
    case Family::IV: {
      chain(f, next, x, k[0], ~x);
      const Literal y(static_cast<Var>(next + static_cast<Var>(k[1])));
      chain(f, next, ~x, k[1], y);
      ++next;
      chain(f, next, y, k[2], ~y);
      break;
    }
  }
  return f;
}

ClauseSet gen_family(Family tag, std::span<const std::size_t> lengths, std::uint64_t seed) {
  const ClauseSet base = family_template(tag, lengths);
  std::mt19937_64 rng(seed);
  const std::vector<Var> vars = base.variables();
  std::vector<Var> image = vars;
  std::shuffle(image.begin(), image.end(), rng);
  std::unordered_map<Var, Var> rename;
  std::vector<Var> flip;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    rename.emplace(vars[i], image[i]);
    if (coin(rng)) flip.push_back(vars[i]);
  }
  const ClauseSet mapped = apply_isomorphism(base, rename, flip);
  std::vector<Clause> clauses = mapped.clauses();
  std::shuffle(clauses.begin(), clauses.end(), rng);
  return ClauseSet(std::move(clauses));
}

}  // namespace twomus
