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

#include "qturing/error.h"

namespace qturing {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension:
            return "invalid-dimension";
        case ErrorKind::InvalidBit:
            return "invalid-bit";
        case ErrorKind::DimensionMismatch:
            return "dimension-mismatch";
        case ErrorKind::OutOfRange:
            return "out-of-range";
        case ErrorKind::ImpossibleOutcome:
            return "impossible-outcome";
        case ErrorKind::NotUnitary:
            return "not-unitary";
        case ErrorKind::Unsupported:
            return "unsupported";
        case ErrorKind::SizeCap:
            return "size-cap";
        case ErrorKind::MissingRecord:
            return "missing-record";
        case ErrorKind::Parse:
            return "parse";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qturing
