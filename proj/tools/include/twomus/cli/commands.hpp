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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twomus/cnf.hpp"
#include "twomus/impl_graph.hpp"
#include "twomus/mus_record.hpp"

namespace twomus::cli {

enum ExitCode : int { kFound = 0, kNotFound = 1, kInputError = 2, kBoundExceeded = 3 };

struct CheckOptions {
  bool trace = false;
  bool json = false;
  bool oracle = false;
  std::size_t oracle_bound = 0;  // 0: library default
};

struct FindOptions {
  std::optional<int> unit;
  std::vector<int> units;  // exactly two when set
  bool any_unit = false;
  bool exactly_one = false;
  bool exactly_two = false;
  bool family_iia = false;
  bool shortest = false;
  bool deletion = false;
  bool json = false;
  bool oracle = false;
};

struct EnumOptions {
  std::optional<int> unit;
  bool all_units = false;
  std::optional<std::size_t> limit;
  bool trace = false;
  bool json = false;
  bool paths = false;
  bool stats = false;
  bool oracle = false;
  std::size_t oracle_bound = 0;
  std::vector<int> order;
};

struct CdppOptions {
  bool prime = false;
  bool check_walk = false;
  bool check_cycle = false;
  std::size_t bound = 0;  // 0: library default
};

struct GenOptions {
  std::string family;
  std::vector<std::size_t> lengths;
  std::uint64_t seed = 0;
};

/// Each command reads its input from `in`, writes results to `out` and
/// diagnostics to `err`, and returns an ExitCode.
int cmd_check(std::istream& in, std::ostream& out, std::ostream& err, const CheckOptions& opt);
int cmd_find(std::istream& in, std::ostream& out, std::ostream& err, const FindOptions& opt);
int cmd_enum(std::istream& in, std::ostream& out, std::ostream& err, const EnumOptions& opt);
int cmd_cdpp(std::istream& in, std::ostream& out, std::ostream& err, const CdppOptions& opt);
int cmd_gen(std::ostream& out, std::ostream& err, const GenOptions& opt);

/// One JSON line for an MUS: {"clauses":[[..],..],"family":"..","witness":[..]}.
std::string mus_to_json(const ClauseSet& f, const MusRecord& record);

struct ParsedMus {
  ClauseSet clauses;
  std::optional<Family> family;
  std::optional<Path> witness;
};

/// Inverse of mus_to_json. Throws InputError on malformed input.
ParsedMus mus_from_json(const std::string& line);

/// "1,-1,2" or "1 -1 2" into literal codes. Throws InputError.
std::vector<int> parse_literal_list(const std::string& text);

}  // namespace twomus::cli
