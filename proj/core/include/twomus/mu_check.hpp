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

// Checked singular DP-reduction and the 2-MU decision built on it.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "twomus/cnf.hpp"
#include "twomus/mus_record.hpp"

namespace twomus {

enum class CsdpFailure {
  NoSideClauses,      // (i)   m = 0
  Clash,              // (ii)  main and a side clause clash outside v
  EqualRemainders,    // (iii) two side clauses leave the same resolvent
  ExistingResolvent,  // (iv)  a resolvent is already a clause of F
  DegreeBound,        // a literal degree exceeded CsdpOptions::degree_bound
};

std::string_view to_string(CsdpFailure reason);

struct CsdpStep {
  Var variable = 0;
  Literal literal;  // the once-occurring literal, which sits in `main`
  Clause main;
  std::vector<Clause> sides;
  std::vector<Clause> resolvents;  // resolvents[i] comes from sides[i]
};

struct CsdpFail {
  CsdpFailure reason = CsdpFailure::NoSideClauses;
  Var variable = 0;
  /// Clauses witnessing the failure (main first, then the offending ones).
  std::vector<Clause> clauses;
};

struct CsdpOutcome {
  std::optional<CsdpFail> failure;
  /// Valid when !failed(); for csdp_full it has no singular variable.
  ClauseSet result;
  std::vector<CsdpStep> trace;

  bool failed() const { return failure.has_value(); }
};

struct CsdpOptions {
  /// Abort with DegreeBound as soon as some literal degree exceeds this.
  /// 0 disables the check.
  std::size_t degree_bound = 0;
  bool record_trace = true;
};

/// One checked sDP step on variable v. Throws PreconditionError unless v is
/// singular in f. When both literals of v occur once the positive one is
/// taken as main literal.
CsdpOutcome csdp_step(const ClauseSet& f, Var v);

/// Full checked sDP-reduction. Singular variables are taken from a stack
/// seeded in ascending id order; variables that become singular are pushed.
CsdpOutcome csdp_full(const ClauseSet& f, const CsdpOptions& options = {});

/// k if f is isomorphic to B_k (k >= 2), else nullopt.
std::optional<std::size_t> is_bk(const ClauseSet& f);

/// Linear-time minimal unsatisfiability test for 2-CNF.
bool is_2mu(const ClauseSet& f);

/// Family of a deficiency-1 2-MU. Throws PreconditionError if f is not MU,
/// has deficiency other than 1, or is {bottom}.
Family classify_family(const ClauseSet& f);

/// "v=<var> main=<clause> sides=<clauses> resolvents=<clauses>"
void write_trace_line(std::ostream& os, const CsdpStep& step);
void write_failure(std::ostream& os, const CsdpFail& fail);

}  // namespace twomus
