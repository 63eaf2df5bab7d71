// Copyright 2026 The qsd developers
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

#include <filesystem>
#include <string>
#include <string_view>

namespace qsd {

/// Writes content to target via a sibling temp file and an atomic rename, so
/// an interrupted write never leaves a partial file at the target path.
void write_file_atomic(const std::filesystem::path& target,
                       std::string_view content);

/// Reads a whole file; throws DataError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace qsd
