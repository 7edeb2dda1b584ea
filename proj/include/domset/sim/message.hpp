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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "domset/graph.hpp"
#include "domset/random.hpp"

namespace domset::sim {

enum class MessageKind : std::uint8_t {
  kIncrementCounter,
  kMovedWToD,
  kMovedBHighToD,
  kMovedWToBLow,
  kMovedWToBHigh,
  kMovedBHighToBLow,
  kPValue,
  kMinForward,
  kAck,
  kAdded,
  kNeighborAdded,
};
inline constexpr std::size_t kNumMessageKinds = 11;
inline constexpr std::size_t kTagBits = 4;

std::string_view kind_name(MessageKind kind);

/// ceil(log2(n)), with ceil_log2(0) = ceil_log2(1) = 0.
constexpr std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

/// A discretised uniform value in [0, 1): a random word of 2*ceil(log2 n)
/// bits, ordered by (word, owner) so two vertices never compare equal.
struct RandKey {
  std::uint64_t word = 0;
  VertexId owner = 0;

  friend constexpr auto operator<=>(const RandKey&, const RandKey&) = default;
};

constexpr std::size_t key_word_bits(std::size_t n) {
  const std::size_t bits = 2 * ceil_log2(n);
  return bits > 64 ? 64 : bits;
}

inline RandKey draw_key(NodeRng& rng, VertexId owner, std::size_t n) {
  const std::size_t bits = key_word_bits(n);
  const std::uint64_t raw = rng.next();
  const std::uint64_t word = bits == 0 ? 0 : (bits == 64 ? raw : raw >> (64 - bits));
  return {word, owner};
}

struct Message {
  MessageKind kind = MessageKind::kAck;
  RandKey key{};  // P_VALUE and MIN_FORWARD only

  friend bool operator==(const Message&, const Message&) = default;
};

constexpr bool carries_key(MessageKind kind) {
  return kind == MessageKind::kPValue || kind == MessageKind::kMinForward;
}

/// Encoded size: a 4-bit tag, plus 2*ceil(log2 n) bits of random word and
/// ceil(log2 n) bits of owner id for keyed messages.
constexpr std::size_t message_bit_width(MessageKind kind, std::size_t n) {
  return kTagBits + (carries_key(kind) ? 3 * ceil_log2(n) : 0);
}
constexpr std::size_t message_bit_width(const Message& msg, std::size_t n) {
  return message_bit_width(msg.kind, n);
}

/// Per-edge, per-round CONGEST budget.
constexpr std::size_t width_limit(std::size_t n) { return 4 * ceil_log2(n) + 8; }

}  // namespace domset::sim
