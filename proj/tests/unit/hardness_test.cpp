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
#include <sstream>

#include "test_support.hpp"
#include "twomus/errors.hpp"
#include "twomus/hardness.hpp"
#include "twomus/mu_check.hpp"
#include "twomus/oracle.hpp"
#include "twomus/twosat.hpp"

namespace twomus {
namespace {

using testing::appendix_a;

TEST(StDigraph, ParseAndWrite) {
  const StDigraph g = parse_st_digraph("# demo\ns 1\nt 2\ne 1 3\ne 3 2 # inline\ne 2 4\ne 4 1\ne 4 1\n");
  EXPECT_EQ(g.s, 1);
  EXPECT_EQ(g.t, 2);
  EXPECT_EQ(g.arcs.size(), 4U);
  EXPECT_EQ(g.x0(), 5);
  EXPECT_EQ(g.y0(), 6);
  std::ostringstream os;
  write_st_digraph(os, g);
  const StDigraph h = parse_st_digraph(os.str());
  EXPECT_EQ(h.arcs, g.arcs);
}

TEST(StDigraph, Rejections) {
  EXPECT_THROW(parse_st_digraph("s 1\nt 2\ne 1 2\n"), InputError);
  EXPECT_THROW(parse_st_digraph("s 1\nt 2\ne 2 1\n"), InputError);
  EXPECT_THROW(parse_st_digraph("s 1\nt 2\ne 3 3\n"), InputError);
  EXPECT_THROW(parse_st_digraph("s 1\ne 1 3\n"), InputError);
  EXPECT_THROW(parse_st_digraph("s 1\nt 1\n"), InputError);
  EXPECT_THROW(parse_st_digraph("s 1\nt 2\nq 1 3\n"), ParseError);
  EXPECT_THROW(parse_st_digraph("s 1\nt 2\ne 1 x\n"), ParseError);
}

TEST(Translate, AppendixExample) {
  const ClauseSet f = translate_cdpp(appendix_a());
  EXPECT_TRUE(f.same_clauses(ClauseSet::from_codes({{-5, 3}, {-3, -5}, {5, 4}, {-4, 5}})));
  EXPECT_EQ(measures(f).n, 3U);
  EXPECT_EQ(measures(f).c, 4U);
  const ClauseSet p = translate_cdpp_prime(appendix_a());
  EXPECT_TRUE(p.same_clauses(ClauseSet::from_codes({{-5, 3}, {-3, -5}, {5, 6}, {-6, 4}, {-4, -6}})));
  EXPECT_EQ(measures(p).n, 4U);
  EXPECT_EQ(measures(p).c, 5U);
}

TEST(Translate, SmallCases) {
  const StDigraph empty{1, 2, {}};
  EXPECT_TRUE(translate_cdpp(empty).empty());
  EXPECT_TRUE(translate_cdpp_prime(empty).same_clauses(ClauseSet::from_codes({{3, 4}})));
  const StDigraph chain{1, 2, {{1, 3}, {3, 2}}};
  EXPECT_TRUE(translate_cdpp(chain).same_clauses(ClauseSet::from_codes({{-4, 3}, {-3, -4}})));
  const StDigraph from_t{1, 2, {{2, 3}}};
  EXPECT_TRUE(translate_cdpp_prime(from_t).same_clauses(ClauseSet::from_codes({{4, 5}, {-5, 3}})));
}

TEST(Translate, NoUnitsNoEmptyClause) {
  testing::for_each_st_digraph(4, [](const StDigraph& g) {
    for (const ClauseSet& f : {translate_cdpp(g), translate_cdpp_prime(g)}) {
      EXPECT_EQ(measures(f).u, 0U);
      EXPECT_FALSE(f.has_empty_clause());
    }
  });
}

TEST(SpecialWalkAndCycle, Examples) {
  EXPECT_TRUE(has_special_closed_walk(appendix_a()));
  EXPECT_TRUE(has_special_cycle(appendix_a()));
  const StDigraph no_return{1, 2, {{1, 3}, {3, 2}}};
  EXPECT_FALSE(has_special_closed_walk(no_return));
  EXPECT_FALSE(has_special_cycle(no_return));
  const StDigraph no_into_s{1, 2, {{1, 3}, {3, 2}, {2, 4}}};
  EXPECT_FALSE(has_special_closed_walk(no_into_s));
  // Both directions must pass through vertex 3.
  const StDigraph shared{1, 2, {{1, 3}, {3, 2}, {2, 3}, {3, 1}}};
  EXPECT_TRUE(has_special_closed_walk(shared));
  EXPECT_FALSE(has_special_cycle(shared));
}

TEST(SpecialCycle, BoundExceeded) {
  StDigraph big{1, 2, {}};
  for (Var v = 3; v <= 20; ++v) big.arcs.emplace_back(v - 1 == 2 ? 1 : v - 1, v);
  EXPECT_THROW(has_special_cycle(big), BoundExceeded);
  EXPECT_NO_THROW(has_special_cycle(big, 64));
}

TEST(ConstantModel, SatisfiesWhenSOrTIsOneSided) {
  std::size_t used = 0;
  testing::for_each_st_digraph(4, [&](const StDigraph& g) {
    const auto phi = constant_model(g);
    const ClauseSet f = translate_cdpp(g);
    if (!phi) return;
    ++used;
    for (Var v : f.variables())
      if (!phi->defined(v)) return;  // isolated vertices do not occur in f
    EXPECT_TRUE(satisfies(*phi, f));
  });
  EXPECT_GT(used, 500U);
}

TEST(StTranslation, SmallUniverse) {
  for (int nv = 2; nv <= 4; ++nv) {
    testing::for_each_st_digraph(nv, [](const StDigraph& g) {
      const ClauseSet f = translate_cdpp(g);
      const bool walk = has_special_closed_walk(g);
      EXPECT_EQ(walk, !is_satisfiable(f));
      const bool cycle = has_special_cycle(g);
      bool family_iii = false;
      for (const MusRecord& r : brute_mus_enum(f)) {
        const ClauseSet m = materialize(f, r);
        EXPECT_EQ(m.variable_degree(g.x0()), 4U);
        const bool d1 = measures(m).deficiency == 1;
        if (d1) family_iii = family_iii || classify_family(m) == Family::III;
        if (!cycle) {
          EXPECT_FALSE(d1);
        }
      }
      EXPECT_EQ(cycle, family_iii);

      const ClauseSet fp = translate_cdpp_prime(g);
      bool family_iv = false;
      for (const MusRecord& r : brute_mus_enum(fp)) {
        const ClauseSet m = materialize(fp, r);
        if (measures(m).deficiency == 1) family_iv = family_iv || classify_family(m) == Family::IV;
      }
      EXPECT_EQ(cycle, family_iv);
    });
  }
}

}  // namespace
}  // namespace twomus
