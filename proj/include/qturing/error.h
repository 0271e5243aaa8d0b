// Copyright 2026 The qturing Authors
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

#ifndef QTURING_ERROR_H
#define QTURING_ERROR_H

#include <stdexcept>
#include <string>

namespace qturing {

enum class ErrorKind {
    InvalidDimension,
    InvalidBit,
    DimensionMismatch,
    OutOfRange,
    ImpossibleOutcome,
    NotUnitary,
    Unsupported,
    SizeCap,
    MissingRecord,
    Parse,
};

const char *error_kind_name(ErrorKind kind);

/// Every precondition failure in the library is reported as an Error carrying a kind,
/// so callers (and tests) can distinguish e.g. an impossible measurement branch from a
/// malformed index without parsing the message.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace qturing

#endif
