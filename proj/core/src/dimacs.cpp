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

#include "twomus/dimacs.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "twomus/errors.hpp"

namespace twomus {
namespace {

bool parse_int(std::string_view token, long long& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

ClauseSet parse_dimacs(std::istream& in) {
  ClauseSet f;
  bool header_seen = false;
  std::vector<Literal> pending;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok == "c" || tok.front() == 'c') continue;
    if (tok == "%") break;  // SATLIB end marker
    if (tok == "p") {
      if (header_seen) throw ParseError(where(lineno) + "duplicate header");
      std::string format, nstr, cstr, extra;
      long long n = 0, c = 0;
      if (!(tokens >> format >> nstr >> cstr) || format != "cnf" || !parse_int(nstr, n) ||
          !parse_int(cstr, c) || n < 0 || c < 0 || (tokens >> extra))
        throw ParseError(where(lineno) + "malformed header, expected \"p cnf <n> <c>\"");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError(where(lineno) + "clause data before \"p cnf\" header");
    do {
      long long value = 0;
      if (!parse_int(tok, value) || value > INT32_MAX || value < -INT32_MAX)
        throw ParseError(where(lineno) + "bad literal token '" + tok + "'");
      if (value == 0) {
        try {
          f.add(Clause::from_literals(pending));
        } catch (const WidthError& e) {
          throw WidthError(where(lineno) + e.what());
        } catch (const TautologyError& e) {
          throw TautologyError(where(lineno) + e.what());
        }
        pending.clear();
      } else {
        pending.emplace_back(static_cast<int>(value));
      }
    } while (tokens >> tok);
  }
  if (!header_seen) throw ParseError("missing \"p cnf\" header");
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0");
  return f;
}

ClauseSet parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const ClauseSet& f) {
  out << "p cnf " << f.max_var() << ' ' << f.size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Literal x : c.literals()) out << x.code() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const ClauseSet& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace twomus
