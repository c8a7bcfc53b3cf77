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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twomus/cli/commands.hpp"

namespace {

using twomus::cli::kInputError;

// Runs `cmd` on the named file, or on stdin for "-".
template <typename Cmd>
int with_input(const std::string& path, Cmd cmd) {
  if (path == "-") return cmd(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kInputError;
  }
  return cmd(in);
}

std::size_t env_bound() {
  const char* v = std::getenv("TWOMUS_BOUND");
  if (v == nullptr) return 0;
  try {
    return static_cast<std::size_t>(std::stoul(v));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = twomus::cli;
  CLI::App app{"Minimal unsatisfiable subsets of 2-CNF formulas"};
  app.require_subcommand(1);
  std::string file = "-";
  int code = 0;
  const std::size_t bound = env_bound();

  cli::CheckOptions check;
  auto* c = app.add_subcommand("check", "Report satisfiability, MU status, deficiency and family");
  c->add_option("file", file, "DIMACS file, - for stdin");
  c->add_flag("--trace", check.trace, "Print csDP steps on stderr");
  c->add_flag("--json", check.json, "JSON report");
  c->add_flag("--oracle", check.oracle, "Cross-check MU status by brute force");

  cli::FindOptions find;
  std::vector<int> units;
  auto* f = app.add_subcommand("find", "Find one MUS");
  f->add_option("file", file, "DIMACS file, - for stdin");
  f->add_option("--unit", find.unit, "MUS containing this unit literal");
  f->add_option("--units", units, "MUS containing both unit literals")->expected(2);
  f->add_flag("--any-unit", find.any_unit, "MUS containing at least one unit");
  f->add_flag("--exactly-one", find.exactly_one, "MUS containing exactly one unit");
  f->add_flag("--exactly-two", find.exactly_two, "MUS containing exactly two units");
  f->add_flag("--iia", find.family_iia, "With --unit: a MUS of family IIa");
  f->add_flag("--shortest", find.shortest, "Minimum clause count among two-unit MUSs");
  f->add_flag("--deletion", find.deletion, "Deletion-based MUS of the whole formula");
  f->add_flag("--json", find.json, "JSON-lines output");
  f->add_flag("--oracle", find.oracle, "Verify the result by brute force");

  cli::EnumOptions en;
  std::string order;
  auto* e = app.add_subcommand("enum", "Enumerate MUSs containing unit clauses");
  e->add_option("file", file, "DIMACS file, - for stdin");
  e->add_option("--unit", en.unit, "Only MUSs containing this unit literal");
  e->add_flag("--all-units", en.all_units, "MUSs containing any unit (default)");
  e->add_option("--limit", en.limit, "Stop after N MUSs");
  e->add_flag("--trace", en.trace, "Print the search trace table (requires --unit)");
  e->add_flag("--json", en.json, "JSON-lines output");
  e->add_flag("--paths", en.paths, "Print every path found, printed or silent");
  e->add_flag("--stats", en.stats, "Search statistics on stderr");
  e->add_flag("--oracle", en.oracle, "Compare against brute-force enumeration");
  e->add_option("--order", order, "Literal order, e.g. \"1,-1,2,-2\"");

  cli::CdppOptions cd;
  auto* d = app.add_subcommand("cdpp", "Translate an st-digraph to 2-CNF or test it");
  d->add_option("file", file, "st-digraph file, - for stdin");
  d->add_flag("--prime", cd.prime, "Emit the primed translation");
  d->add_flag("--check-walk", cd.check_walk, "Is there a special closed walk?");
  d->add_flag("--check-cycle", cd.check_cycle, "Is there a special cycle? (exhaustive)");

  cli::GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a random deficiency-1 MU of a given family");
  g->add_option("family", gen.family, "Ia, Ib, IIa, IIb, III or IV")->required();
  g->add_option("lengths", gen.lengths, "Chain lengths");
  g->add_option("--seed", gen.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kInputError;
  }

  if (*c) {
    check.oracle_bound = bound;
    code = with_input(file, [&](std::istream& in) { return cli::cmd_check(in, std::cout, std::cerr, check); });
  } else if (*f) {
    find.units = units;
    code = with_input(file, [&](std::istream& in) { return cli::cmd_find(in, std::cout, std::cerr, find); });
  } else if (*e) {
    en.oracle_bound = bound;
    try {
      if (!order.empty()) en.order = cli::parse_literal_list(order);
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << '\n';
      return kInputError;
    }
    code = with_input(file, [&](std::istream& in) { return cli::cmd_enum(in, std::cout, std::cerr, en); });
  } else if (*d) {
    cd.bound = bound;
    code = with_input(file, [&](std::istream& in) { return cli::cmd_cdpp(in, std::cout, std::cerr, cd); });
  } else if (*g) {
    code = cli::cmd_gen(std::cout, std::cerr, gen);
  }
  return code;
}
