// Copyright 2026 The domset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace domset {

/// Which part of the D / B / W partition a vertex sits in. W and B are each
/// split by a degree threshold T:
///   B_low  = dominated, |N(v) ∩ W| <= T
///   W_low  = undominated, |N(v) ∩ (W ∪ B_high)| <= T
enum class Label : std::uint8_t { kWHigh, kWLow, kBHigh, kBLow, kD };

constexpr bool in_w(Label l) { return l == Label::kWHigh || l == Label::kWLow; }
constexpr bool in_w_or_bhigh(Label l) { return in_w(l) || l == Label::kBHigh; }
constexpr bool in_b(Label l) { return l == Label::kBHigh || l == Label::kBLow; }

std::string_view label_name(Label l);
std::optional<Label> label_from_name(std::string_view name);

/// Label changes that can happen to a vertex. D and B_low are absorbing,
/// nothing re-enters W, and a W_low vertex never reaches B_high or W_high.
constexpr bool transition_allowed(Label from, Label to) {
  if (from == to) return true;
  switch (from) {
    case Label::kWHigh:
      return true;  // -> W_low, B_high, B_low, D
    case Label::kWLow:
      return to == Label::kBLow || to == Label::kD;
    case Label::kBHigh:
      return to == Label::kBLow || to == Label::kD;
    case Label::kBLow:
    case Label::kD:
      return false;
  }
  return false;
}

}  // namespace domset
