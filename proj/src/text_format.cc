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

#include "pqc/text_format.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "pqc/errors.h"

namespace pqc {

std::vector<TextLine> meaningful_lines(std::string_view text) {
    std::vector<TextLine> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream in{std::string(line)};
        TextLine parsed{number, {}};
        for (std::string tok; in >> tok;) {
            parsed.tokens.push_back(tok);
        }
        if (!parsed.tokens.empty()) {
            out.push_back(std::move(parsed));
        }
        start = end + 1;
    }
    return out;
}

int parse_qubits_header(const std::vector<TextLine> &lines, int max_qubits) {
    if (lines.empty()) {
        throw ParseError(1, "missing 'qubits n' header");
    }
    const TextLine &head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "qubits") {
        throw ParseError(head.number, "expected 'qubits n'");
    }
    const int n = parse_int_token(head.tokens[1], head.number);
    if (n < 1 || n > max_qubits) {
        throw ParseError(head.number, "qubit count must be in 1.." + std::to_string(max_qubits));
    }
    return n;
}

int parse_int_token(const std::string &token, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
    return value;
}

double parse_double_token(const std::string &token, int line) {
    double value = 0.0;
    const char *begin = token.data();
    if (!token.empty() && token.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(line, "expected a number, got '" + token + "'");
    }
    return value;
}

}  // namespace pqc
