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

#ifndef TICKBENCH_BASE_DIAG_HPP_
#define TICKBENCH_BASE_DIAG_HPP_

#include <stdexcept>
#include <string>

namespace tbench {

struct SourceLoc {
  std::string file;
  int line = 0;    // 1-based; 0 means "no position"
  int column = 0;  // 1-based byte column

  bool valid() const { return line > 0; }
  std::string str() const;
};

// Base for all located errors. what() carries "file:line:col: message" when a
// position is known, plain message otherwise.
class Error : public std::runtime_error {
 public:
  Error(std::string message, SourceLoc loc = {});

  const std::string& message() const { return message_; }
  const SourceLoc& where() const { return loc_; }

 private:
  std::string message_;
  SourceLoc loc_;
};

// Syntax errors in the test language or in a structured text document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Semantic errors in the signal map, DUT model or mutation set.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A test instance that cannot be executed against the given map/DUT.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Engine guard tripped while executing (e.g. max tick budget exceeded).
class RunError : public Error {
 public:
  using Error::Error;
};

}  // namespace tbench

#endif  // TICKBENCH_BASE_DIAG_HPP_
