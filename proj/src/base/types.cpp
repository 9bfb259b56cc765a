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

#include "base/types.hpp"

namespace tbench {

std::string to_string(Level v) { return v == Level::kHigh ? "HIGH" : "LOW"; }

std::string level_literal(Level v) { return v == Level::kHigh ? "OK" : "NOK"; }

std::string to_string(EdgeKind e) {
  return e == EdgeKind::kRising ? "rise" : "fall";
}

std::string edge_function(EdgeKind e) {
  return e == EdgeKind::kRising ? "rising_edge" : "falling_edge";
}

std::string to_string(Severity s) {
  switch (s) {
    case Severity::kNote: return "NOTE";
    case Severity::kWarning: return "WARNING";
    case Severity::kError: return "ERROR";
    case Severity::kFailure: return "FAILURE";
  }
  return "ERROR";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPassed: return "passed";
    case Verdict::kFailed: return "failed";
    case Verdict::kAborted: return "aborted";
  }
  return "failed";
}

}  // namespace tbench
