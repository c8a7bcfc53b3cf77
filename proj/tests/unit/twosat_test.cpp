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

#include <random>

#include "test_support.hpp"
#include "twomus/impl_graph.hpp"
#include "twomus/twosat.hpp"

namespace twomus {
namespace {

bool truth_table_sat(const ClauseSet& f) {
  const Var n = f.max_var();
  for (std::uint32_t a = 0; a < (1U << n); ++a) {
    Assignment phi;
    for (Var v = 1; v <= n; ++v) phi.set(v, ((a >> (v - 1)) & 1U) != 0);
    bool ok = true;
    for (const Clause& c : f.clauses()) {
      bool sat = false;
      for (Literal x : c.literals()) sat = sat || *phi.value(x);
      ok = ok && sat;
    }
    if (ok) return true;
  }
  return false;
}

void check_answer(const ClauseSet& f, const TwoSatResult& r) {
  if (r.satisfiable) {
    EXPECT_TRUE(satisfies(r.model, f));
    return;
  }
  if (f.has_empty_clause()) return;
  ASSERT_TRUE(r.witness.has_value());
  const ImpDigraph g = build_idg(f);
  EXPECT_TRUE(reach(g, *r.witness, ~*r.witness));
  EXPECT_TRUE(reach(g, ~*r.witness, *r.witness));
}

TEST(TwoSat, Examples) {
  const TwoSatResult u = solve_2sat(testing::u22());
  EXPECT_FALSE(u.satisfiable);
  check_answer(testing::u22(), u);
  const ClauseSet f = ClauseSet::from_codes({{1, 2}});
  const TwoSatResult s = solve_2sat(f);
  EXPECT_TRUE(s.satisfiable);
  EXPECT_TRUE(satisfies(s.model, f));
  EXPECT_FALSE(is_satisfiable(testing::union_cnf()));
  EXPECT_TRUE(is_satisfiable(ClauseSet{}));
}

TEST(TwoSat, EmptyClause) {
  ClauseSet f;
  f.add(Clause{Literal(1)});
  f.add(Clause{});
  EXPECT_FALSE(solve_2sat(f).satisfiable);
}

TEST(TwoSat, ActiveMask) {
  const ClauseSet f = testing::u22();
  const std::vector<char> active{1, 1, 0};
  EXPECT_TRUE(is_satisfiable(f, active));
}

TEST(TwoSat, AgreesWithTruthTablesUpToFourVariables) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 4000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const ClauseSet f = testing::random_cnf(rng, n, 1 + rng() % 9, 0.2);
    const TwoSatResult r = solve_2sat(f);
    EXPECT_EQ(r.satisfiable, truth_table_sat(f));
    check_answer(f, r);
  }
}

}  // namespace
}  // namespace twomus
