// Copyright 2026 The SOME Decoder Authors
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

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "some/ohq.hpp"

namespace some {

namespace {

std::string rational_from_halves(int64_t halves) {
    if (halves % 2 == 0) return std::to_string(halves / 2) + "/1";
    return std::to_string(halves) + "/2";
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && s[k] == ' ') ++k;
        const size_t start = k;
        while (k < s.size() && s[k] != ' ') ++k;
        if (k > start) out.push_back(s.substr(start, k - start));
    }
    return out;
}

template <typename T>
T parse_int(std::string_view tok, size_t line, const char* what) {
    T value{};
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) fail(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace

std::string export_qubo(const QuboInstance& q) {
    std::string out;
    out += "q ohq " + std::to_string(q.num_syndromes()) + " " + std::to_string(q.num_variables()) + " " +
           std::to_string(q.penalty()) + "\n";
    for (int v = 0; v < q.num_variables(); ++v) {
        const auto& var = q.variables()[v];
        out += "v " + std::to_string(v) + " " + std::to_string(var.i) + " " + std::to_string(var.j) + "\n";
    }
    for (const auto& t : q.terms()) {
        out += "c " + std::to_string(t.a) + " " + std::to_string(t.b) + " " + rational_from_halves(t.halves) + "\n";
    }
    return out;
}

QuboInstance parse_qubo(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        if (!lines.back().empty() && lines.back().back() == '\r') fail(lines.size(), "CR line endings are not accepted");
        start = nl + 1;
    }
    if (lines.empty()) fail(1, "missing header");

    const auto header = split_ws(lines[0]);
    if (header.size() != 5 || header[0] != "q" || header[1] != "ohq") {
        fail(1, "expected 'q ohq <n_syndromes> <n_variables> <penalty>'");
    }
    const int n = parse_int<int>(header[2], 1, "syndrome count");
    const int m = parse_int<int>(header[3], 1, "variable count");
    const auto penalty = parse_int<int64_t>(header[4], 1, "penalty");
    if (n < 0 || m < 0) fail(1, "counts must be nonnegative");

    std::vector<QuboVariable> vars;
    std::vector<QuboTerm> terms;
    for (size_t k = 1; k < lines.size(); ++k) {
        const size_t line = k + 1;
        const auto tok = split_ws(lines[k]);
        if (tok.empty()) fail(line, "empty line");
        if (tok[0] == "v") {
            if (!terms.empty()) fail(line, "variable lines must precede coefficient lines");
            if (tok.size() != 4) fail(line, "expected 'v <var_idx> <i> <j>'");
            const int idx = parse_int<int>(tok[1], line, "variable index");
            if (idx != static_cast<int>(vars.size())) fail(line, "variable indices must be consecutive from 0");
            const int i = parse_int<int>(tok[2], line, "row");
            const int j = parse_int<int>(tok[3], line, "column");
            if (i < 0 || i > j || j >= n) fail(line, "variable coordinates must satisfy 0 <= i <= j < n");
            vars.push_back({i, j});
        } else if (tok[0] == "c") {
            if (tok.size() != 4) fail(line, "expected 'c <var_a> <var_b> <num>/<den>'");
            const int a = parse_int<int>(tok[1], line, "variable index");
            const int b = parse_int<int>(tok[2], line, "variable index");
            if (a < 0 || a > b || b >= m) fail(line, "coefficient must reference variables 0 <= a <= b < m");
            const auto slash = tok[3].find('/');
            if (slash == std::string_view::npos) fail(line, "coefficient must be written as <num>/<den>");
            const auto num = parse_int<int64_t>(tok[3].substr(0, slash), line, "numerator");
            const auto den = parse_int<int64_t>(tok[3].substr(slash + 1), line, "denominator");
            if (den <= 0) fail(line, "denominator must be positive");
            if (std::gcd(num, den) != 1) fail(line, "coefficient is not in lowest terms");
            if (den != 1 && den != 2) fail(line, "only half-integer coefficients are supported");
            if (!terms.empty() && std::pair(terms.back().a, terms.back().b) >= std::pair(a, b)) {
                fail(line, "coefficient lines must be sorted by (var_a, var_b) without duplicates");
            }
            terms.push_back({a, b, den == 1 ? 2 * num : num});
        } else {
            fail(line, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (static_cast<int>(vars.size()) != m) {
        fail(lines.size(), "header declares " + std::to_string(m) + " variables, found " + std::to_string(vars.size()));
    }
    return QuboInstance(n, penalty, std::move(vars), std::move(terms));
}

}  // namespace some
