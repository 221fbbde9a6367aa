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

#include <cstdint>
#include <optional>
#include <string_view>

namespace hamsurf {

// Corner angle kinds, measured in units of pi/3.
enum class AngleLabel : uint8_t {
  kTriangle,  // t, pi/3
  kSmall,     // l, small lozenge corner, pi/3
  kLarge,     // L, large lozenge corner, 2pi/3
};

constexpr int weight(AngleLabel label) {
  return label == AngleLabel::kLarge ? 2 : 1;
}

constexpr std::string_view symbol(AngleLabel label) {
  switch (label) {
    case AngleLabel::kTriangle:
      return "t";
    case AngleLabel::kSmall:
      return "l";
    case AngleLabel::kLarge:
      return "L";
  }
  return "?";
}

// Inverse of symbol(); also accepts the spelled-out forms.
std::optional<AngleLabel> parse_angle_label(std::string_view text);

}  // namespace hamsurf
