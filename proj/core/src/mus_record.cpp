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

#include "twomus/mus_record.hpp"

#include <array>

namespace twomus {

namespace {
constexpr std::array<std::string_view, 6> kTags{"Ia", "Ib", "IIa", "IIb", "III", "IV"};
}

std::string_view to_string(Family f) { return kTags[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_string(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return static_cast<Family>(i);
  return std::nullopt;
}

ClauseSet materialize(const ClauseSet& f, const MusRecord& record) { return f.subset(record.clauses); }

}  // namespace twomus
