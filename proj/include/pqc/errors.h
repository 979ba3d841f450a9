// Copyright 2026 The PQC Toolkit Authors
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

#ifndef PQC_ERRORS_H
#define PQC_ERRORS_H

#include <stdexcept>
#include <string>

namespace pqc {

/// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// Requested problem size exceeds what a dense routine supports.
struct SizeError : Error {
    using Error::Error;
};

struct NormalizationError : Error {
    using Error::Error;
};

/// A matrix carries Pauli weight outside the {I,X} sector it should live in.
struct EncodingError : Error {
    using Error::Error;
};

/// Kraus pairs violate completeness, or a channel is otherwise malformed.
struct ChannelError : Error {
    using Error::Error;
};

struct UnsupportedPhaseError : Error {
    using Error::Error;
};

struct StateError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct ConsistencyError : Error {
    using Error::Error;
};

struct IntegratorError : Error {
    using Error::Error;
};

/// Text-format error carrying the 1-based line it was raised on.
struct ParseError : Error {
    ParseError(int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

}  // namespace pqc

#endif
