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

// Literals, clauses and clause-sets of width at most two, together with
// the counting measures used throughout the library.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace twomus {

using Var = std::int32_t;

/// A literal in DIMACS convention: a nonzero signed variable id.
///
/// Literals also have a dense index, 2 * (var - 1) + (negative ? 1 : 0),
/// so that complementation is `index ^ 1` and per-literal tables are plain
/// vectors.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr explicit Literal(int code) : code_(code) {}

  static constexpr Literal from_index(std::size_t index) {
    const int v = static_cast<int>(index >> 1) + 1;
    return Literal((index & 1U) != 0 ? -v : v);
  }

  constexpr int code() const { return code_; }
  constexpr Var var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool negative() const { return code_ < 0; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr bool valid() const { return code_ != 0; }
  constexpr std::size_t index() const {
    return 2 * static_cast<std::size_t>(var() - 1) + (negative() ? 1 : 0);
  }

  constexpr Literal operator~() const { return Literal(-code_); }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  int code_ = 0;
};

constexpr Literal complement(Literal x) { return ~x; }

std::ostream& operator<<(std::ostream& os, Literal x);

/// A clash-free clause with at most two literals; the default value is the
/// empty clause. Literals are kept sorted by index, so equality is set
/// equality.
class Clause {
 public:
  Clause() = default;
  explicit Clause(Literal a);
  Clause(Literal a, Literal b);

  /// Collapses duplicate literals; throws TautologyError on a clash and
  /// WidthError on more than two distinct literals.
  static Clause from_literals(std::span<const Literal> lits);
  static Clause from_codes(std::initializer_list<int> codes);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_unit() const { return size_ == 1; }
  std::span<const Literal> literals() const { return {lits_.data(), size_}; }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal x) const;
  bool contains_var(Var v) const;

  /// Injective 64-bit key, used for hashing and ordering.
  std::uint64_t key() const;

  bool operator==(const Clause& o) const {
    return size_ == o.size_ && lits_[0] == o.lits_[0] && lits_[1] == o.lits_[1];
  }
  std::strong_ordering operator<=>(const Clause& o) const;

 private:
  std::array<Literal, 2> lits_{};
  std::size_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Clause& c);

struct ClauseHash {
  std::size_t operator()(const Clause& c) const { return std::hash<std::uint64_t>{}(c.key()); }
};

/// A set of clauses that remembers first-appearance order.
///
/// Clause identity is by literal set; `index_of` and the positional
/// accessors refer to the order in which distinct clauses were first added.
/// `input_index(i)` is the ordinal of that first occurrence in the raw input
/// (duplicates included), which equals `i` unless the input had duplicates.
class ClauseSet {
 public:
  ClauseSet() = default;
  explicit ClauseSet(std::vector<Clause> clauses);

  /// Test/CLI convenience: `{{1}, {-1, 2}, {-2}}`.
  static ClauseSet from_codes(std::initializer_list<std::initializer_list<int>> clauses);

  /// Appends a clause unless an equal one is present; returns its index.
  std::size_t add(const Clause& c);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  std::size_t input_index(std::size_t i) const { return input_index_[i]; }
  std::size_t raw_count() const { return raw_count_; }

  std::optional<std::size_t> index_of(const Clause& c) const;
  bool contains(const Clause& c) const { return index_of(c).has_value(); }
  bool has_empty_clause() const { return contains(Clause{}); }

  /// Largest variable id occurring, 0 if none.
  Var max_var() const { return max_var_; }
  /// Number of literal slots (2 * max_var) for per-literal tables.
  std::size_t literal_slots() const { return 2 * static_cast<std::size_t>(max_var_); }

  std::size_t literal_degree(Literal x) const;
  std::size_t variable_degree(Var v) const;
  bool has_variable(Var v) const { return variable_degree(v) > 0; }
  /// var(F), ascending.
  std::vector<Var> variables() const;

  /// Clauses at the given indices, in the given order.
  ClauseSet subset(std::span<const std::size_t> indices) const;
  ClauseSet without(std::size_t index) const;

  /// Set equality, ignoring order.
  bool same_clauses(const ClauseSet& other) const;

 private:
  std::vector<Clause> clauses_;
  std::vector<std::size_t> input_index_;
  std::unordered_map<Clause, std::size_t, ClauseHash> lookup_;
  std::vector<std::uint32_t> ldeg_;
  Var max_var_ = 0;
  std::size_t raw_count_ = 0;
};

struct MeasureReport {
  std::size_t n = 0;        // variables
  std::size_t c = 0;        // clauses
  std::size_t u = 0;        // unit-clauses
  std::size_t l = 0;        // sum of clause lengths
  std::int64_t deficiency = 0;
  std::array<std::size_t, 5> vars_of_degree{};  // n_0 .. n_4; degrees above 4 counted in `vars_above_4`
  std::size_t vars_above_4 = 0;
  std::size_t lits_of_degree_1 = 0;  // n'_1
  std::size_t lits_of_degree_2 = 0;  // n'_2
  std::vector<Var> singular;
  std::vector<Var> one_singular;

  std::size_t n_k(int k) const { return vars_of_degree.at(static_cast<std::size_t>(k)); }
};

MeasureReport measures(const ClauseSet& f);

/// A partial assignment over variables; phi(~v) = 1 - phi(v) by construction.
class Assignment {
 public:
  Assignment() = default;

  void set(Var v, bool value);
  void set(Literal x, bool value) { set(x.var(), x.negative() ? !value : value); }
  bool defined(Var v) const;
  std::optional<bool> value(Var v) const;
  std::optional<bool> value(Literal x) const;
  std::vector<Var> domain() const;
  std::size_t size() const;

 private:
  std::vector<std::int8_t> values_;  // -1 undefined
};

/// True iff every clause has a literal mapped to 1. Throws PreconditionError
/// if phi leaves a variable of f undefined.
bool satisfies(const Assignment& phi, const ClauseSet& f);

/// Image of f under a variable renaming and a set of flipped variables.
/// Flips refer to source variables; variables missing from `rename` map to
/// themselves. Throws PreconditionError if the renaming is not injective on
/// var(f).
ClauseSet apply_isomorphism(const ClauseSet& f, const std::unordered_map<Var, Var>& rename,
                            std::span<const Var> flip);

}  // namespace twomus
