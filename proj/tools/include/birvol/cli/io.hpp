// Copyright 2026 The birvol Authors
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

#ifndef BIRVOL_CLI_IO_HPP_
#define BIRVOL_CLI_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace birvol::cli {

// Fixed 17-significant-digit rendering used by every emitted double.
std::string format_double(double x);

// Pretty JSON with sorted keys and format_double for floating values.
std::string dump_json(const nlohmann::json& doc);

std::string csv_line(const std::vector<std::string>& fields);

// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& bytes);

std::string read_file(const std::filesystem::path& path);

}  // namespace birvol::cli

#endif  // BIRVOL_CLI_IO_HPP_
