// Copyright 2026 The surfdec Authors
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

#ifndef SURFDEC_FILE_IO_H
#define SURFDEC_FILE_IO_H

#include <string>
#include <string_view>

namespace surfdec {

/// Whole-file helpers. Both throw FileError(Io) on failure.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

/// Lowercase hex SHA-256 of a byte string or of a file's contents.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::string &path);

}  // namespace surfdec

#endif
