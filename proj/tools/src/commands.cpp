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

#include "twomus/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "twomus/dimacs.hpp"
#include "twomus/errors.hpp"
#include "twomus/hardness.hpp"
#include "twomus/mu_check.hpp"
#include "twomus/mus_enum.hpp"
#include "twomus/mus_find.hpp"
#include "twomus/oracle.hpp"
#include "twomus/twosat.hpp"

namespace twomus::cli {

using nlohmann::json;

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

Clause unit_clause(int code) {
  if (code == 0) throw InputError("literal 0 is not a literal");
  return Clause{Literal(code)};
}

void write_measures(std::ostream& out, const MeasureReport& m) {
  out << "measures n=" << m.n << " c=" << m.c << " u=" << m.u << " l=" << m.l << " n2=" << m.n_k(2)
      << " n3=" << m.n_k(3) << " n4=" << m.n_k(4) << " lits1=" << m.lits_of_degree_1
      << " lits2=" << m.lits_of_degree_2 << '\n';
}

std::optional<Family> family_if_any(const ClauseSet& f, bool mu, std::int64_t deficiency) {
  if (!mu || deficiency != 1 || f.has_empty_clause()) return std::nullopt;
  return classify_family(f);
}

void emit(std::ostream& out, const ClauseSet& f, const MusRecord& rec, bool as_json) {
  if (as_json)
    out << mus_to_json(f, rec) << '\n';
  else
    print_mus(out, f, rec);
  out.flush();
}

std::set<std::vector<std::size_t>> oracle_unit_muses(const ClauseSet& f, std::optional<Literal> unit,
                                                     std::size_t bound) {
  std::set<std::vector<std::size_t>> out;
  for (const MusRecord& r : brute_mus_enum(f, bound == 0 ? kDefaultMusBound : bound)) {
    const bool hit = std::any_of(r.clauses.begin(), r.clauses.end(), [&](std::size_t i) {
      return f[i].is_unit() && (!unit || f[i][0] == *unit);
    });
    if (hit) out.insert(r.clauses);
  }
  return out;
}

}  // namespace

std::vector<int> parse_literal_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad literal '" + tok + "'");
    }
    if (used != tok.size() || v == 0) throw InputError("bad literal '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string mus_to_json(const ClauseSet& f, const MusRecord& record) {
  json j;
  j["clauses"] = json::array();
  for (std::size_t i : record.clauses) {
    json c = json::array();
    for (Literal x : f[i].literals()) c.push_back(x.code());
    j["clauses"].push_back(c);
  }
  j["family"] = record.family ? json(std::string(to_string(*record.family))) : json(nullptr);
  if (record.witness) {
    json w = json::array();
    for (Literal x : record.witness->vertices()) w.push_back(x.code());
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

ParsedMus mus_from_json(const std::string& line) {
  ParsedMus out;
  try {
    const json j = json::parse(line);
    for (const json& c : j.at("clauses")) {
      std::vector<Literal> lits;
      for (const json& x : c) lits.emplace_back(x.get<int>());
      out.clauses.add(Clause::from_literals(lits));
    }
    if (j.contains("family") && !j["family"].is_null()) {
      out.family = family_from_string(j["family"].get<std::string>());
      if (!out.family) throw InputError("unknown family tag");
    }
    if (j.contains("witness") && !j["witness"].is_null()) {
      std::vector<Literal> w;
      for (const json& x : j["witness"]) w.emplace_back(x.get<int>());
      out.witness = Path(std::move(w));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed MUS record: ") + e.what());
  }
  return out;
}

int cmd_check(std::istream& in, std::ostream& out, std::ostream& err, const CheckOptions& opt) {
  return guarded(err, [&] {
    ClauseSet f;
    try {
      f = parse_dimacs(in);
    } catch (const WidthError&) {
      if (!opt.json) out << "2cnf no\n";
      throw;
    }
    const TwoSatResult sat = solve_2sat(f);
    const bool mu = is_2mu(f);
    const MeasureReport m = measures(f);
    const auto family = family_if_any(f, mu, m.deficiency);
    std::optional<bool> oracle;
    if (opt.oracle) {
      if (f.size() > (opt.oracle_bound == 0 ? kDefaultMusBound : opt.oracle_bound))
        throw BoundExceeded("oracle: clause count exceeds bound");
      oracle = brute_is_mu(f);
    }
    if (opt.json) {
      json j{{"is_2cnf", true},
             {"sat", sat.satisfiable},
             {"is_mu", mu},
             {"deficiency", m.deficiency},
             {"family", family ? json(std::string(to_string(*family))) : json(nullptr)},
             {"measures", {{"n", m.n}, {"c", m.c}, {"u", m.u}, {"l", m.l}, {"n2", m.n_k(2)}, {"n3", m.n_k(3)},
                           {"n4", m.n_k(4)}, {"lits1", m.lits_of_degree_1}, {"lits2", m.lits_of_degree_2}}}};
      if (oracle) j["oracle_is_mu"] = *oracle;
      out << j.dump() << '\n';
    } else {
      if (mu) {
        out << "MU yes, δ=" << m.deficiency;
        if (family) out << ", family=" << to_string(*family);
        out << '\n';
      } else {
        out << "MU no, " << (sat.satisfiable ? "SAT" : "UNSAT") << '\n';
      }
      out << "2cnf yes\n";
      out << "status " << (sat.satisfiable ? "SAT" : "UNSAT") << '\n';
      out << "mu " << (mu ? "yes" : "no") << '\n';
      out << "deficiency " << m.deficiency << '\n';
      if (family) out << "family " << to_string(*family) << '\n';
      write_measures(out, m);
      if (oracle) out << "oracle " << (*oracle == mu ? "agrees" : "DISAGREES") << '\n';
    }
    if (opt.trace) {
      const CsdpOutcome r = csdp_full(f);
      for (const CsdpStep& s : r.trace) {
        err << "c csdp ";
        write_trace_line(err, s);
      }
      if (r.failure) {
        err << "c csdp ";
        write_failure(err, *r.failure);
      }
    }
    return kFound;
  });
}

int cmd_find(std::istream& in, std::ostream& out, std::ostream& err, const FindOptions& opt) {
  return guarded(err, [&] {
    const ClauseSet f = parse_dimacs(in);
    const int modes = (opt.unit ? 1 : 0) + (opt.units.empty() ? 0 : 1) + opt.any_unit + opt.exactly_one +
                      opt.exactly_two + opt.deletion;
    if (modes > 1) throw InputError("choose one of --unit, --units, --any-unit, --exactly-one, --exactly-two, --deletion");
    if (!opt.units.empty() && opt.units.size() != 2) throw InputError("--units takes two literals");
    if (opt.family_iia && !opt.unit) throw InputError("--iia requires --unit");

    std::optional<MusRecord> rec;
    if (opt.unit && opt.family_iia) {
      rec = mus_family_iia(f, unit_clause(*opt.unit));
    } else if (opt.unit) {
      rec = mus_one_unit(f, unit_clause(*opt.unit));
    } else if (!opt.units.empty()) {
      rec = mus_two_units(f, unit_clause(opt.units[0]), unit_clause(opt.units[1]), opt.shortest);
    } else if (opt.any_unit) {
      rec = mus_unit_sweep(f, UnitSweep::AtLeastOne);
    } else if (opt.exactly_one) {
      rec = mus_unit_sweep(f, UnitSweep::ExactlyOne);
    } else if (opt.exactly_two || opt.shortest) {
      rec = mus_unit_sweep(f, UnitSweep::ExactlyTwo, opt.shortest);
    } else if (!is_satisfiable(f)) {
      rec = find_mus_deletion(f);
    }
    if (!rec) {
      out << "none\n";
      return kNotFound;
    }
    emit(out, f, *rec, opt.json);
    if (opt.oracle) {
      const bool ok = brute_is_mu(materialize(f, *rec));
      out << "c oracle " << (ok ? "verified" : "REJECTED") << '\n';
      if (!ok) return kNotFound;
    }
    return kFound;
  });
}

int cmd_enum(std::istream& in, std::ostream& out, std::ostream& err, const EnumOptions& opt) {
  return guarded(err, [&] {
    const ClauseSet f = parse_dimacs(in);
    if (opt.unit && opt.all_units) throw InputError("--unit and --all-units are exclusive");
    if (opt.trace && !opt.unit) throw InputError("--trace requires --unit");
    LitOrder order;
    if (!opt.order.empty()) {
      std::vector<Literal> seq;
      for (int c : opt.order) seq.emplace_back(c);
      order = LitOrder::from_sequence(seq);
    }

    std::vector<TraceRow> rows;
    std::optional<UnitEnumerator> one;
    std::optional<AllUnitsEnumerator> all;
    if (opt.unit) {
      one.emplace(f, unit_clause(*opt.unit), twomus::EnumOptions{order, {}, false});
      if (opt.trace) one->set_trace(&rows);
    } else {
      all.emplace(f, order);
    }
    auto next_path = [&] { return one ? one->next_path() : all->next_path(); };

    std::size_t emitted = 0;
    std::set<std::vector<std::size_t>> seen;
    bool first = true;
    while (!opt.limit || emitted < *opt.limit) {
      auto ev = next_path();
      if (!ev) break;
      if (opt.paths && !opt.trace) {
        out << "path";
        for (Literal x : ev->path.vertices()) out << ' ' << x;
        out << ' ' << (ev->printed ? "printed" : "silent") << ' ' << to_string(ev->family) << '\n';
      }
      if (!ev->printed) continue;
      ++emitted;
      seen.insert(ev->record.clauses);
      if (opt.trace || opt.paths) continue;
      if (!opt.json && !first) out << '\n';
      first = false;
      emit(out, f, ev->record, opt.json);
    }
    if (opt.trace) write_trace(out, rows);
    if (opt.stats) {
      const EnumStats& s = one ? one->stats() : all->stats();
      err << "c stats dfs_calls=" << s.dfs_calls << " paths=" << s.paths << " printed=" << s.printed
          << " silent=" << s.silent << " steps=" << s.steps << " max_delay=" << s.max_delay << '\n';
    }
    if (opt.oracle && !opt.limit) {
      const std::optional<Literal> unit = opt.unit ? std::optional<Literal>(Literal(*opt.unit)) : std::nullopt;
      const bool ok = oracle_unit_muses(f, unit, opt.oracle_bound) == seen;
      err << "c oracle " << (ok ? "agrees" : "DISAGREES") << " (" << seen.size() << " MUSs)\n";
      if (!ok) return kNotFound;
    }
    return emitted > 0 ? kFound : kNotFound;
  });
}

int cmd_cdpp(std::istream& in, std::ostream& out, std::ostream& err, const CdppOptions& opt) {
  return guarded(err, [&] {
    const StDigraph g = parse_st_digraph(in);
    if (opt.check_walk || opt.check_cycle) {
      const bool both = opt.check_walk && opt.check_cycle;
      bool all = true;
      if (opt.check_walk) {
        const bool w = has_special_closed_walk(g);
        out << (both ? "walk " : "") << (w ? "yes" : "no") << '\n';
        all = all && w;
      }
      if (opt.check_cycle) {
        const bool c = has_special_cycle(g, opt.bound == 0 ? kDefaultCycleBound : opt.bound);
        out << (both ? "cycle " : "") << (c ? "yes" : "no") << '\n';
        all = all && c;
      }
      return all ? kFound : kNotFound;
    }
    out << "c x0=" << g.x0();
    if (opt.prime) out << " y0=" << g.y0();
    out << '\n';
    write_dimacs(out, opt.prime ? translate_cdpp_prime(g) : translate_cdpp(g));
    return kFound;
  });
}

int cmd_gen(std::ostream& out, std::ostream& err, const GenOptions& opt) {
  return guarded(err, [&] {
    const auto tag = family_from_string(opt.family);
    if (!tag) throw InputError("unknown family '" + opt.family + "'");
    const ClauseSet f = gen_family(*tag, opt.lengths, opt.seed);
    out << "c family=" << opt.family << " seed=" << opt.seed << '\n';
    write_dimacs(out, f);
    return kFound;
  });
}

}  // namespace twomus::cli
