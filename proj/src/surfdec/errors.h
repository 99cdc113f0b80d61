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

#ifndef SURFDEC_ERRORS_H
#define SURFDEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace surfdec {

enum class FileErrorKind { Io, Format, Truncated, Version };

/// Failure reading or writing one of the on-disk formats.
class FileError : public std::runtime_error {
   public:
    FileError(FileErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    FileErrorKind kind() const {
        return kind_;
    }

   private:
    FileErrorKind kind_;
};

/// An operation that is well-formed but not defined for its input, such as
/// exact failure ratios on sampled statistics.
class UnsupportedError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace surfdec

#endif
