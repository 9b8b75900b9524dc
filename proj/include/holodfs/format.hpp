// Copyright 2026 The holodfs Authors
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

#ifndef HOLODFS_FORMAT_HPP_
#define HOLODFS_FORMAT_HPP_

#include <filesystem>
#include <string>

namespace holodfs {

/// Real number with 12 significant digits, the precision of every report.
std::string format_real(double value);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace holodfs

#endif  // HOLODFS_FORMAT_HPP_
