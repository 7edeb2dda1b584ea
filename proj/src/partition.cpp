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

#include "domset/partition.hpp"

namespace domset {

std::string_view label_name(Label l) {
  switch (l) {
    case Label::kWHigh: return "W_high";
    case Label::kWLow: return "W_low";
    case Label::kBHigh: return "B_high";
    case Label::kBLow: return "B_low";
    case Label::kD: return "D";
  }
  return "?";
}

std::optional<Label> label_from_name(std::string_view name) {
  for (Label l : {Label::kWHigh, Label::kWLow, Label::kBHigh, Label::kBLow, Label::kD}) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

}  // namespace domset
