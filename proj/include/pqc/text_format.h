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

#ifndef PQC_TEXT_FORMAT_H
#define PQC_TEXT_FORMAT_H

#include <string>
#include <string_view>
#include <vector>

namespace pqc {

/// A non-blank, comment-stripped input line split on whitespace.
struct TextLine {
    int number = 0;  // 1-based
    std::vector<std::string> tokens;
};

/// Splits text into lines, dropping everything after '#' and blank lines.
std::vector<TextLine> meaningful_lines(std::string_view text);

/// Reads the leading "qubits n" line and checks 1 <= n <= max_qubits.
int parse_qubits_header(const std::vector<TextLine> &lines, int max_qubits);

int parse_int_token(const std::string &token, int line);
double parse_double_token(const std::string &token, int line);

}  // namespace pqc

#endif
