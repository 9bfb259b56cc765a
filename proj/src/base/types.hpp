// Copyright 2026 The tickbench Authors
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

#ifndef TICKBENCH_BASE_TYPES_HPP_
#define TICKBENCH_BASE_TYPES_HPP_

#include <cstdint>
#include <string>

namespace tbench {

// One simulation tick is 1 us. Ticks are non-negative and monotone in a run.
using Tick = long;

// Binary logic level. The test language literals map OK -> HIGH, NOK -> LOW.
enum class Level : std::uint8_t { kLow = 0, kHigh = 1 };

inline Level level_not(Level v) {
  return v == Level::kHigh ? Level::kLow : Level::kHigh;
}

enum class EdgeKind : std::uint8_t { kRising, kFalling };

enum class Severity : std::uint8_t { kNote, kWarning, kError, kFailure };

enum class Verdict : std::uint8_t { kPassed, kFailed, kAborted };

std::string to_string(Level v);
std::string level_literal(Level v);  // "OK" / "NOK"
std::string to_string(EdgeKind e);   // "rise" / "fall"
std::string edge_function(EdgeKind e);  // "rising_edge" / "falling_edge"
std::string to_string(Severity s);
std::string to_string(Verdict v);

}  // namespace tbench

#endif  // TICKBENCH_BASE_TYPES_HPP_
