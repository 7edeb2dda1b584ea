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

#include "domset/sim/runtime.hpp"

namespace domset::sim {

std::string_view kind_name(MessageKind kind) {
  switch (kind) {
    case MessageKind::kIncrementCounter: return "INCREMENT_COUNTER";
    case MessageKind::kMovedWToD: return "MOVED_W_TO_D";
    case MessageKind::kMovedBHighToD: return "MOVED_BHIGH_TO_D";
    case MessageKind::kMovedWToBLow: return "MOVED_W_TO_BLOW";
    case MessageKind::kMovedWToBHigh: return "MOVED_W_TO_BHIGH";
    case MessageKind::kMovedBHighToBLow: return "MOVED_BHIGH_TO_BLOW";
    case MessageKind::kPValue: return "P_VALUE";
    case MessageKind::kMinForward: return "MIN_FORWARD";
    case MessageKind::kAck: return "ACK";
    case MessageKind::kAdded: return "ADDED";
    case MessageKind::kNeighborAdded: return "NEIGHBOR_ADDED";
  }
  return "UNKNOWN";
}

std::string_view mode_name(Mode mode) { return mode == Mode::kLocal ? "LOCAL" : "CONGEST"; }

nlohmann::ordered_json to_json(const SimReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(r.mode);
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["rounds"] = r.rounds;
  j["iterations"] = r.iterations;
  j["messages_total"] = r.messages_total;
  j["messages_per_round"] = r.messages_per_round;
  j["max_message_bits"] = r.max_message_bits;
  j["width_limit"] = r.width_limit;
  j["terminated"] = r.terminated;
  j["budget_exhausted"] = r.budget_exhausted;
  j["aborted"] = r.aborted;
  j["dset_size"] = r.dset.size();
  j["dset"] = r.dset;
  j["violations"] = r.violations;
  j["stats"] = r.stats;
  return j;
}

}  // namespace domset::sim
