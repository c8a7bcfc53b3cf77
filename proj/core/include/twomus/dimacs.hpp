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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "twomus/cnf.hpp"

namespace twomus {

/// Reads a DIMACS CNF ("p cnf <n> <c>", 0-terminated clauses, "c" comment
/// lines). Duplicate literals inside a clause are collapsed and duplicate
/// clauses are merged, keeping first-appearance order.
///
/// Throws ParseError on a malformed header or token, WidthError on a clause
/// with more than two distinct literals and TautologyError on a clause
/// containing x and -x. The header counts are informational only.
ClauseSet parse_dimacs(std::istream& in);
ClauseSet parse_dimacs(std::string_view text);

/// Writes "p cnf <max var> <clauses>" followed by the clauses in stored order.
void write_dimacs(std::ostream& out, const ClauseSet& f);
std::string to_dimacs(const ClauseSet& f);

}  // namespace twomus
