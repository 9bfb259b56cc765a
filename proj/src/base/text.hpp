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

#ifndef TICKBENCH_BASE_TEXT_HPP_
#define TICKBENCH_BASE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace tbench {

// Identifiers in the language and in configuration files match
// case-insensitively (ASCII) while the declared spelling is preserved.
std::string ascii_fold(std::string_view s);
bool ident_eq(std::string_view a, std::string_view b);

std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split_char(std::string_view s, char sep);

std::string read_file(const std::string& path);       // throws Error on I/O failure
void write_file(const std::string& path, std::string_view data);

}  // namespace tbench

#endif  // TICKBENCH_BASE_TEXT_HPP_
