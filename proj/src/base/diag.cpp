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

#include "base/diag.hpp"

namespace tbench {
namespace {

std::string format_what(const std::string& message, const SourceLoc& loc) {
  if (!loc.valid()) return message;
  return loc.str() + ": " + message;
}

}  // namespace

std::string SourceLoc::str() const {
  std::string out = file.empty() ? std::string("<input>") : file;
  out += ":" + std::to_string(line) + ":" + std::to_string(column);
  return out;
}

Error::Error(std::string message, SourceLoc loc)
    : std::runtime_error(format_what(message, loc)),
      message_(std::move(message)),
      loc_(std::move(loc)) {}

}  // namespace tbench
