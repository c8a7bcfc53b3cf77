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
#include "twomus/cli/commands.hpp"
#include "twomus/dimacs.hpp"
#include "twomus/errors.hpp"
#include "twomus/hardness.hpp"
#include "twomus/mu_check.hpp"
#include "twomus/mus_enum.hpp"
#include "twomus/oracle.hpp"

namespace twomus::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename Opt, typename Cmd>
Outcome run(Cmd cmd, const std::string& input, const Opt& opt) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome r;
  r.code = cmd(in, out, err, opt);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string union_text() { return testing::read_file(testing::data_path("union.cnf")); }

TEST(Check, Reports) {
  Outcome r = run(cmd_check, "p cnf 2 3\n1 0\n-1 2 0\n-2 0\n", CheckOptions{});
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "MU yes, δ=1, family=Ib");
  r = run(cmd_check, union_text(), CheckOptions{});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "MU no, UNSAT");
  r = run(cmd_check, "p cnf 2 1\n1 2 0\n", CheckOptions{});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "MU no, SAT");
  EXPECT_EQ(r.code, kFound);
}

TEST(Check, ErrorsAndJson) {
  EXPECT_EQ(run(cmd_check, "p cnf 1 1\n1 -1 0\n", CheckOptions{}).code, kInputError);
  Outcome r = run(cmd_check, "p cnf 3 1\n1 2 3 0\n", CheckOptions{});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.out.find("2cnf no"), std::string::npos);
  CheckOptions o;
  o.json = true;
  o.oracle = true;
  o.trace = true;
  r = run(cmd_check, union_text(), o);
  EXPECT_NE(r.out.find("\"is_mu\":false"), std::string::npos);
  EXPECT_NE(r.out.find("\"oracle_is_mu\":false"), std::string::npos);
  EXPECT_NE(r.err.find("c csdp"), std::string::npos);
}

TEST(Find, Modes) {
  FindOptions o;
  o.unit = 1;
  Outcome r = run(cmd_find, union_text(), o);
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.out.find("p cnf"), std::string::npos);

  FindOptions two;
  two.units = {1, -2};
  r = run(cmd_find, union_text(), two);
  EXPECT_EQ(r.code, kFound);
  EXPECT_EQ(r.out, "c family=Ib witness=1,2,-2\np cnf 2 3\n1 0\n-1 2 0\n-2 0\n");

  FindOptions any;
  any.any_unit = true;
  r = run(cmd_find, "p cnf 5 4\n-5 3 0\n-3 -5 0\n5 4 0\n-4 5 0\n", any);
  EXPECT_EQ(r.code, kNotFound);
  EXPECT_EQ(r.out, "none\n");

  r = run(cmd_find, union_text(), FindOptions{});
  EXPECT_EQ(r.code, kFound);
  r = run(cmd_find, "p cnf 2 1\n1 2 0\n", FindOptions{});
  EXPECT_EQ(r.code, kNotFound);

  FindOptions bad;
  bad.unit = 1;
  bad.any_unit = true;
  EXPECT_EQ(run(cmd_find, union_text(), bad).code, kInputError);
  FindOptions missing;
  missing.unit = 3;
  EXPECT_EQ(run(cmd_find, union_text(), missing).code, kInputError);
  EXPECT_EQ(run(cmd_find, "p cnf x\n", FindOptions{}).code, kInputError);
}

TEST(Find, OracleAndJson) {
  FindOptions o;
  o.exactly_two = true;
  o.shortest = true;
  o.json = true;
  o.oracle = true;
  const Outcome r = run(cmd_find, union_text(), o);
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.out.find("c oracle verified"), std::string::npos);
  const ParsedMus m = mus_from_json(r.out.substr(0, r.out.find('\n')));
  EXPECT_TRUE(m.clauses.same_clauses(testing::u22()));
}

TEST(Enum, Stream) {
  EnumOptions o;
  o.unit = 1;
  Outcome r = run(cmd_enum, union_text(), o);
  EXPECT_EQ(r.code, kFound);
  const std::string expected =
      "c family=IIa witness=1,2,-1\np cnf 2 3\n1 0\n-1 2 0\n-2 -1 0\n\n"
      "c family=Ib witness=1,2,-2\np cnf 2 3\n1 0\n-1 2 0\n-2 0\n\n"
      "c family=IIb witness=1,2,3,-2\np cnf 3 4\n1 0\n-1 2 0\n-2 3 0\n-3 -2 0\n";
  EXPECT_EQ(r.out, expected);

  o.trace = true;
  r = run(cmd_enum, union_text(), o);
  EXPECT_EQ(r.out, testing::read_file(testing::data_path("union_trace.tsv")));

  EnumOptions lim;
  lim.limit = 1;
  r = run(cmd_enum, union_text(), lim);
  EXPECT_EQ(r.out, "c family=IIa witness=1,2,-1\np cnf 2 3\n1 0\n-1 2 0\n-2 -1 0\n");

  EnumOptions bad;
  bad.trace = true;
  EXPECT_EQ(run(cmd_enum, union_text(), bad).code, kInputError);
  EXPECT_EQ(run(cmd_enum, "p cnf 2 1\n1 2 0\n", EnumOptions{}).code, kNotFound);
}

TEST(Enum, PathsStatsOracleAndOrder) {
  EnumOptions o;
  o.paths = true;
  o.stats = true;
  o.oracle = true;
  Outcome r = run(cmd_enum, union_text(), o);
  EXPECT_EQ(r.code, kFound);
  EXPECT_NE(r.out.find("path 1 2 -3 -2 silent IIb"), std::string::npos);
  EXPECT_NE(r.err.find("c stats"), std::string::npos);
  EXPECT_NE(r.err.find("c oracle agrees (3 MUSs)"), std::string::npos);

  EnumOptions ord;
  ord.order = parse_literal_list("1,-2,-1,2,3,-3");
  ord.json = true;
  r = run(cmd_enum, union_text(), ord);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), R"({"clauses":[[1],[-1,2],[-1,-2]],"family":"IIa","witness":[1,-2,-1]})");
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    const ClauseSet f = testing::random_cnf(rng, 5, 4 + rng() % 8, 0.3);
    AllUnitsEnumerator e(f);
    while (auto rec = e.next()) {
      const ParsedMus m = mus_from_json(mus_to_json(f, *rec));
      EXPECT_TRUE(m.clauses.same_clauses(materialize(f, *rec)));
      EXPECT_EQ(m.family, rec->family);
      EXPECT_EQ(m.witness, rec->witness);
    }
  }
  EXPECT_THROW(mus_from_json("{"), InputError);
  EXPECT_THROW(mus_from_json(R"({"clauses":[[1]],"family":"V"})"), InputError);
}

TEST(LiteralList, Parsing) {
  EXPECT_EQ(parse_literal_list("1,-1, 2 -2"), (std::vector<int>{1, -1, 2, -2}));
  EXPECT_THROW(parse_literal_list("1,0"), InputError);
  EXPECT_THROW(parse_literal_list("1,a"), InputError);
}

TEST(Cdpp, Commands) {
  const std::string a = testing::read_file(testing::data_path("appendix_a.st"));
  Outcome r = run(cmd_cdpp, a, CdppOptions{});
  EXPECT_EQ(r.code, kFound);
  EXPECT_TRUE(parse_dimacs(r.out).same_clauses(translate_cdpp(testing::appendix_a())));
  CdppOptions p;
  p.prime = true;
  r = run(cmd_cdpp, a, p);
  EXPECT_TRUE(parse_dimacs(r.out).same_clauses(translate_cdpp_prime(testing::appendix_a())));
  CdppOptions c;
  c.check_cycle = true;
  r = run(cmd_cdpp, a, c);
  EXPECT_EQ(r.out, "yes\n");
  EXPECT_EQ(r.code, kFound);
  CdppOptions w;
  w.check_walk = true;
  r = run(cmd_cdpp, "s 1\nt 2\ne 1 3\ne 3 2\n", w);
  EXPECT_EQ(r.out, "no\n");
  EXPECT_EQ(r.code, kNotFound);
  c.bound = 3;
  EXPECT_EQ(run(cmd_cdpp, a, c).code, kBoundExceeded);
  EXPECT_EQ(run(cmd_cdpp, "s 1\nt 2\ne 1 2\n", CdppOptions{}).code, kInputError);
}

TEST(Gen, Command) {
  std::ostringstream out, err;
  GenOptions o{"IV", {1, 0, 2}, 9};
  EXPECT_EQ(cmd_gen(out, err, o), kFound);
  EXPECT_EQ(classify_family(parse_dimacs(out.str())), Family::IV);
  GenOptions bad{"V", {}, 0};
  EXPECT_EQ(cmd_gen(out, err, bad), kInputError);
  GenOptions short_lengths{"III", {1}, 0};
  EXPECT_EQ(cmd_gen(out, err, short_lengths), kInputError);
}

}  // namespace
}  // namespace twomus::cli
