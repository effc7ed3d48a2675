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

#include "some/syndrome_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace some {

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
        const size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
        if (k > start) out.push_back(s.substr(start, k - start));
    }
    return out;
}

int to_int(std::string_view tok, size_t line) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

const char* kind_name(QubitKind k) {
    switch (k) {
        case QubitKind::top_stub:
            return "top_stub";
        case QubitKind::bottom_stub:
            return "bottom_stub";
        case QubitKind::vertical:
            return "vertical";
        case QubitKind::horizontal:
            return "horizontal";
    }
    return "unknown";
}

}  // namespace

SyndromeFile parse_syndrome_file(std::string_view text) {
    SyndromeFile file;
    bool have_header = false;
    std::set<std::pair<int, int>> seen;
    size_t line = 0;
    size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        const auto raw = text.substr(start, nl - start);
        start = nl + 1;
        ++line;
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == '#') continue;
        if (!have_header) {
            if (tok[0] != "d" || tok.size() != 2) fail(line, "expected 'd <distance>' header");
            file.distance = to_int(tok[1], line);
            if (file.distance < 3 || file.distance % 2 == 0 || file.distance > Lattice::kMaxDistance) {
                fail(line, "distance must be an odd integer in [3, " + std::to_string(Lattice::kMaxDistance) + "]");
            }
            have_header = true;
            continue;
        }
        if (tok[0] != "s" || tok.size() != 3) fail(line, "expected 's <ancilla_row> <ancilla_col>'");
        const int row = to_int(tok[1], line);
        const int col = to_int(tok[2], line);
        if (row < 0 || row > file.distance || col < 0 || col >= file.distance) {
            fail(line, "ancilla (" + std::to_string(row) + ", " + std::to_string(col) + ") outside the " +
                           std::to_string(file.distance + 1) + "x" + std::to_string(file.distance) + " grid");
        }
        if (!seen.insert({row, col}).second) {
            fail(line, "ancilla (" + std::to_string(row) + ", " + std::to_string(col) + ") listed twice");
        }
        file.flipped.push_back({row, col});
    }
    if (!have_header) fail(line, "missing 'd <distance>' header");
    return file;
}

SyndromeSet to_syndrome_set(const Lattice& lat, const SyndromeFile& file) {
    std::vector<AncillaIndex> ids;
    ids.reserve(file.flipped.size());
    for (const auto& c : file.flipped) ids.push_back(lat.ancilla(c));
    std::sort(ids.begin(), ids.end());
    return make_syndrome_set(lat, std::move(ids));
}

DecodeReport decode_report(const Lattice& lat, const SyndromeSet& s, DecoderKind decoder, uint64_t seed,
                           const TrialOptions& options) {
    const RngSeed rng_seed{seed, 0};
    const auto wm = build_weight_matrix(lat, s);
    const auto outcome = decode_with(wm, decoder, options, rng_seed);
    TrialRng paths(rng_seed, RngPurpose::correction_paths);
    const auto correction = matching_correction(lat, wm, outcome.vector, paths);

    nlohmann::json j;
    j["d"] = lat.distance();
    j["decoder"] = std::string(to_string(decoder));
    j["seed"] = seed;
    auto& syn = j["syndromes"] = nlohmann::json::array();
    for (auto a : s.flipped) {
        const auto c = lat.coord(a);
        syn.push_back({{"index", a}, {"row", c.row}, {"col", c.col}});
    }
    j["matching"] = outcome.vector;
    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (int i = 0; i < static_cast<int>(outcome.vector.size()); ++i) {
        const int k = outcome.vector[i];
        if (k < i) continue;
        const auto cost = wm.pair_cost(i, k);
        nlohmann::json entry = {{"a", i}, {"b", k}, {"boundary", i == k}};
        if (cost.is_finite()) {
            entry["cost"] = cost.value();
        } else {
            entry["cost"] = nullptr;
        }
        pairs.push_back(std::move(entry));
    }
    j["energy"] = outcome.energy.value();
    j["feasible"] = outcome.feasible;
    j["seeds_tried"] = outcome.seeds_tried;
    j["n_vars_some"] = wm.size();
    j["n_vars_ohq"] = ohq_variable_count(wm);
    auto& corr = j["corrections"] = nlohmann::json::array();
    for (auto q : correction.set_bits()) {
        const auto p = lat.placement(q);
        corr.push_back({{"qubit", q}, {"kind", kind_name(p.kind)}, {"row", p.row}, {"col", p.col}});
    }
    j["correction_matches_syndrome"] = extract_syndrome(lat, correction) == s;
    return {s, outcome, correction, j.dump(2) + "\n"};
}

}  // namespace some
