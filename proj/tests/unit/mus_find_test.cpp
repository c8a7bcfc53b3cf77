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
#include <array>
#include <random>
#include <set>

#include "test_support.hpp"
#include "twomus/errors.hpp"
#include "twomus/hardness.hpp"
#include "twomus/mu_check.hpp"
#include "twomus/mus_find.hpp"
#include "twomus/oracle.hpp"
#include "twomus/twosat.hpp"

namespace twomus {
namespace {

using testing::u22;
using testing::union_cnf;

// {x1}, {-x2}, and the only x1 -> x2 walk visits both z = x3 and -z.
ClauseSet clash_forcing() { return ClauseSet::from_codes({{1}, {-2}, {-1, 3}, {-3, 4}, {-4, -3}, {3, 2}}); }

bool is_member(const MusRecord& rec, const std::vector<MusRecord>& oracle) {
  return std::any_of(oracle.begin(), oracle.end(), [&](const MusRecord& r) { return r.clauses == rec.clauses; });
}

bool contains_unit(const ClauseSet& mus, Literal x) { return mus.contains(Clause{x}); }

TEST(RegularPath, Examples) {
  const ImpDigraph g = build_idg(u22());
  EXPECT_EQ(regular_path(g, Literal(1), Literal(2)), Path::from_codes({1, 2}));

  const ImpDigraph h = build_idg(clash_forcing());
  EXPECT_TRUE(reach(h, Literal(1), Literal(2)));
  EXPECT_FALSE(regular_path(h, Literal(1), Literal(2)).has_value());
  EXPECT_FALSE(regular_path(h, Literal(1), Literal(2), {true, false}).has_value());
  EXPECT_FALSE(regular_path(h, Literal(1), Literal(2), {false, true}).has_value());

  const ImpDigraph d = build_idg(ClauseSet::from_codes({{1, 2}, {3, 4}}));
  EXPECT_FALSE(regular_path(d, Literal(-1), Literal(3)).has_value());
  EXPECT_THROW(regular_path(g, Literal(1), Literal(-1)), PreconditionError);
  EXPECT_THROW(regular_path(g, Literal(1), Literal(9)), PreconditionError);
}

TEST(RegularPath, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(2024);
  int positive = 0;
  for (int it = 0; it < 400; ++it) {
    const ClauseSet f = testing::random_cnf(rng, 6, 4 + rng() % 8, 0.15);
    const ImpDigraph g = build_idg(f);
    const auto vs = g.vertices();
    if (vs.size() > 12) continue;
    for (Literal x : vs)
      for (Literal y : vs) {
        if (x.var() == y.var()) continue;
        const auto all = brute_paths(g, x, PathMode::Regular, y);
        const auto plain = regular_path(g, x, y);
        const auto shortest = regular_path(g, x, y, {true, false});
        const auto brute = regular_path(g, x, y, {false, true});
        ASSERT_EQ(plain.has_value(), !all.empty());
        ASSERT_EQ(shortest.has_value(), !all.empty());
        ASSERT_EQ(brute.has_value(), !all.empty());
        if (all.empty()) continue;
        ++positive;
        for (const auto& p : {*plain, *shortest, *brute}) {
          EXPECT_TRUE(p.is_regular());
          EXPECT_TRUE(is_path_in(g, p));
          EXPECT_EQ(p.first(), x);
          EXPECT_EQ(p.last(), y);
        }
        std::size_t best = all.front().length();
        for (const Path& p : all) best = std::min(best, p.length());
        EXPECT_EQ(shortest->length(), best);
      }
  }
  EXPECT_GT(positive, 1000);
}

TEST(MusTwoUnits, Examples) {
  const auto r = mus_two_units(u22(), Clause{Literal(1)}, Clause{Literal(-2)});
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(materialize(u22(), *r).same_clauses(u22()));
  EXPECT_EQ(r->family, Family::Ib);

  EXPECT_FALSE(mus_two_units(clash_forcing(), Clause{Literal(1)}, Clause{Literal(-2)}).has_value());
  for (const MusRecord& m : brute_mus_enum(clash_forcing())) {
    const ClauseSet s = materialize(clash_forcing(), m);
    EXPECT_FALSE(contains_unit(s, Literal(1)) && contains_unit(s, Literal(-2)));
  }

  const ClauseSet ia = ClauseSet::from_codes({{1}, {-1}, {2}});
  const auto a = mus_two_units(ia, Clause{Literal(1)}, Clause{Literal(-1)});
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->family, Family::Ia);

  EXPECT_THROW(mus_two_units(u22(), Clause{Literal(1)}, Clause{Literal(2)}), PreconditionError);
  EXPECT_THROW(mus_two_units(u22(), Clause{Literal(1)}, Clause{Literal(1)}), PreconditionError);
}

TEST(MusTwoUnits, ShortestPicksShorterChain) {
  const ClauseSet f = ClauseSet::from_codes({{1}, {2}, {-1, 4}, {-4, 5}, {-5, -2}, {-1, 3}, {-3, -2}});
  const auto r = mus_two_units(f, Clause{Literal(1)}, Clause{Literal(2)}, true);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->clauses.size(), 4U);
  EXPECT_EQ(brute_mus_enum(f).size(), 2U);
}

TEST(MusTwoUnits, ShortestMinimisesAllMeasures) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int it = 0; it < 3000 && checked < 200; ++it) {
    ClauseSet f = testing::random_cnf(rng, 6, 6 + rng() % 8, 0.0);
    const Literal x(static_cast<int>(1 + rng() % 6));
    Literal y(static_cast<int>(1 + rng() % 6) * (rng() % 2 ? 1 : -1));
    if (x.var() == y.var()) continue;
    f.add(Clause{x});
    f.add(Clause{y});
    const auto r = mus_two_units(f, Clause{x}, Clause{y}, true);
    std::vector<ClauseSet> two_unit;
    for (const MusRecord& m : brute_mus_enum(f)) {
      const ClauseSet s = materialize(f, m);
      if (contains_unit(s, x) && contains_unit(s, y)) two_unit.push_back(s);
    }
    ASSERT_EQ(r.has_value(), !two_unit.empty());
    if (!r) continue;
    ++checked;
    const ClauseSet got = materialize(f, *r);
    EXPECT_TRUE(is_2mu(got));
    const MeasureReport gm = measures(got);
    for (const ClauseSet& s : two_unit) {
      const MeasureReport m = measures(s);
      EXPECT_LE(gm.n, m.n);
      EXPECT_LE(gm.c, m.c);
      EXPECT_LE(gm.l, m.l);
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(MusOneUnit, Examples) {
  const ClauseSet f = union_cnf();
  const auto r = mus_one_unit(f, Clause{Literal(1)});
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(is_member(*r, brute_mus_enum(f)));
  EXPECT_TRUE(materialize(f, *r).same_clauses(testing::u1_21()));

  EXPECT_FALSE(mus_one_unit(ClauseSet::from_codes({{1}, {-1, 2}}), Clause{Literal(1)}).has_value());

  const auto u = mus_one_unit(u22(), Clause{Literal(1)});
  ASSERT_TRUE(u.has_value());
  EXPECT_TRUE(materialize(u22(), *u).same_clauses(u22()));
  EXPECT_EQ(u->witness, Path::from_codes({1, 2, -2}));
  EXPECT_THROW(mus_one_unit(u22(), Clause{Literal(3)}), PreconditionError);
}

TEST(MusOneUnit, ResultsAreMusWithTheUnit) {
  std::mt19937_64 rng(5);
  int found = 0;
  for (int it = 0; it < 1000; ++it) {
    ClauseSet f = testing::random_cnf(rng, 6, 5 + rng() % 10, 0.1);
    const Literal x(static_cast<int>(1 + rng() % 6) * (rng() % 2 ? 1 : -1));
    f.add(Clause{x});
    const auto r = mus_one_unit(f, Clause{x});
    const auto oracle = brute_mus_enum(f);
    const bool exists = std::any_of(oracle.begin(), oracle.end(),
                                    [&](const MusRecord& m) { return contains_unit(materialize(f, m), x); });
    ASSERT_EQ(r.has_value(), exists);
    if (!r) continue;
    ++found;
    const ClauseSet s = materialize(f, *r);
    EXPECT_TRUE(is_2mu(s));
    EXPECT_TRUE(contains_unit(s, x));
    EXPECT_EQ(r->family, classify_family(s));
  }
  EXPECT_GT(found, 100);
}

TEST(MusFamilyIIa, Examples) {
  const auto r = mus_family_iia(testing::u1_21(), Clause{Literal(1)});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->family, Family::IIa);
  EXPECT_EQ(r->clauses.size(), 3U);
  EXPECT_FALSE(mus_family_iia(u22(), Clause{Literal(1)}).has_value());
  EXPECT_FALSE(mus_family_iia(ClauseSet::from_codes({{1}, {-1, 2}, {-2, 3}}), Clause{Literal(1)}).has_value());
}

TEST(MusFamilyIIa, FindsExactlyWhenOracleHasOne) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 800; ++it) {
    ClauseSet f = testing::random_cnf(rng, 5, 5 + rng() % 8, 0.05);
    const Literal x(static_cast<int>(1 + rng() % 5));
    f.add(Clause{x});
    bool exists = false;
    for (const MusRecord& m : brute_mus_enum(f)) {
      const ClauseSet s = materialize(f, m);
      exists = exists || (contains_unit(s, x) && classify_family(s) == Family::IIa);
    }
    const auto r = mus_family_iia(f, Clause{x});
    ASSERT_EQ(r.has_value(), exists);
    if (r) {
      EXPECT_EQ(classify_family(materialize(f, *r)), Family::IIa);
    }
  }
}

TEST(MusUnitSweep, Examples) {
  const ClauseSet f = union_cnf();
  const auto oracle = brute_mus_enum(f);
  const auto any = mus_unit_sweep(f, UnitSweep::AtLeastOne);
  ASSERT_TRUE(any.has_value());
  EXPECT_TRUE(is_member(*any, oracle));
  const auto two = mus_unit_sweep(f, UnitSweep::ExactlyTwo);
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(materialize(f, *two).same_clauses(u22()));
  const auto one = mus_unit_sweep(f, UnitSweep::ExactlyOne);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(measures(materialize(f, *one)).u, 1U);

  const ClauseSet iii = translate_cdpp(testing::appendix_a());
  for (UnitSweep mode : {UnitSweep::ExactlyTwo, UnitSweep::ExactlyOne, UnitSweep::AtLeastOne})
    EXPECT_FALSE(mus_unit_sweep(iii, mode).has_value());
}

TEST(MusUnitSweep, ModesMatchOracle) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 600; ++it) {
    const ClauseSet f = testing::random_cnf(rng, 5, 5 + rng() % 8, 0.3);
    std::array<bool, 3> exists{};  // exactly two, exactly one, at least one
    for (const MusRecord& m : brute_mus_enum(f)) {
      const std::size_t u = measures(materialize(f, m)).u;
      exists[0] = exists[0] || u == 2;
      exists[1] = exists[1] || u == 1;
      exists[2] = exists[2] || u >= 1;
    }
    const auto two = mus_unit_sweep(f, UnitSweep::ExactlyTwo);
    const auto one = mus_unit_sweep(f, UnitSweep::ExactlyOne);
    const auto any = mus_unit_sweep(f, UnitSweep::AtLeastOne);
    ASSERT_EQ(two.has_value(), exists[0]);
    ASSERT_EQ(one.has_value(), exists[1]);
    ASSERT_EQ(any.has_value(), exists[2]);
    if (two) {
      EXPECT_EQ(measures(materialize(f, *two)).u, 2U);
    }
    if (one) {
      EXPECT_EQ(measures(materialize(f, *one)).u, 1U);
    }
    if (any) {
      EXPECT_TRUE(is_2mu(materialize(f, *any)));
    }
  }
}

TEST(FindMusDeletion, Examples) {
  const ClauseSet f = union_cnf();
  const MusRecord r = find_mus_deletion(f);
  EXPECT_TRUE(is_member(r, brute_mus_enum(f)));
  EXPECT_TRUE(materialize(u22(), find_mus_deletion(u22())).same_clauses(u22()));
  ClauseSet b;
  b.add(Clause{});
  b.add(Clause{Literal(1)});
  const MusRecord rb = find_mus_deletion(b);
  ASSERT_EQ(rb.clauses.size(), 1U);
  EXPECT_TRUE(b[rb.clauses[0]].empty());
  EXPECT_THROW(find_mus_deletion(ClauseSet::from_codes({{1, 2}})), PreconditionError);
}

TEST(FindMusDeletion, AlwaysMu) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 2000; ++it) {
    const ClauseSet f = testing::random_cnf(rng, 5, 6 + rng() % 12, 0.2);
    if (is_satisfiable(f)) continue;
    EXPECT_TRUE(brute_is_mu(materialize(f, find_mus_deletion(f))));
  }
}

}  // namespace
}  // namespace twomus
