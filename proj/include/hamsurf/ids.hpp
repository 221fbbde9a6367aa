// Copyright 2026 The hamsurf Authors
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
#include <functional>

namespace hamsurf {

// Opaque cell identifier. Tag keeps vertex, edge and face ids from mixing.
template <typename Tag>
class StrongId {
 public:
  constexpr StrongId() = default;
  constexpr explicit StrongId(int32_t value) : value_(value) {}
  constexpr explicit StrongId(std::size_t value)
      : value_(static_cast<int32_t>(value)) {}

  constexpr int32_t value() const { return value_; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(value_); }
  constexpr bool valid() const { return value_ >= 0; }

  constexpr auto operator<=>(const StrongId&) const = default;

 private:
  int32_t value_ = -1;
};

using VertexId = StrongId<struct VertexTag>;
// Oriented edge. Edges come in pairs 2k / 2k+1, each the reverse of the other.
using EdgeId = StrongId<struct EdgeTag>;
using FaceId = StrongId<struct FaceTag>;

}  // namespace hamsurf

template <typename Tag>
struct std::hash<hamsurf::StrongId<Tag>> {
  std::size_t operator()(const hamsurf::StrongId<Tag>& id) const noexcept {
    return std::hash<int32_t>{}(id.value());
  }
};
