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

#include "some/correct.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace some {

namespace {

void walk_row(const Lattice& lat, Correction& c, int row, int from_col, int to_col) {
    for (int j = std::min(from_col, to_col); j < std::max(from_col, to_col); ++j) c.flip(lat.horizontal(row, j));
}

void walk_col(const Lattice& lat, Correction& c, int col, int from_row, int to_row) {
    for (int i = std::min(from_row, to_row); i < std::max(from_row, to_row); ++i) c.flip(lat.vertical(i, col));
}

DecodeOutcome identity_outcome(const WeightMatrix& wm) {
    DecodeOutcome out;
    out.vector.resize(static_cast<size_t>(wm.size()));
    for (int i = 0; i < wm.size(); ++i) out.vector[i] = i;
    out.energy = outcome_energy(wm, out.vector);
    out.feasible = false;
    return out;
}

}  // namespace

std::string_view to_string(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::some:
            return "some";
        case DecoderKind::anneal:
            return "anneal";
        case DecoderKind::exact:
            return "exact";
    }
    return "unknown";
}

DecoderKind parse_decoder_kind(std::string_view name) {
    if (name == "some") return DecoderKind::some;
    if (name == "anneal") return DecoderKind::anneal;
    if (name == "exact") return DecoderKind::exact;
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "' (expected some, anneal or exact)");
}

Correction path_correction(const Lattice& lat, AncillaIndex a, AncillaIndex b, TrialRng& rng) {
    if (!lat.chain_weight(a, b).has_value()) {
        throw std::invalid_argument("no chain connects ancillas " + std::to_string(a) + " and " + std::to_string(b));
    }
    Correction c(static_cast<size_t>(lat.num_data_qubits()));
    const auto pa = lat.coord(a);
    const int d = lat.distance();
    if (a == b) {
        const int up = pa.row;
        const int down = d - pa.row;
        const bool go_up = up != down ? up < down : rng.coin();
        if (go_up) {
            walk_col(lat, c, pa.col, 1, pa.row);
            c.flip(lat.top_stub(pa.col));
        } else {
            walk_col(lat, c, pa.col, pa.row, d - 1);
            c.flip(lat.bottom_stub(pa.col));
        }
        return c;
    }
    const auto pb = lat.coord(b);
    const bool horizontal_first = (pa.row != pb.row && pa.col != pb.col) ? rng.coin() : true;
    if (horizontal_first) {
        walk_row(lat, c, pa.row, pa.col, pb.col);
        walk_col(lat, c, pb.col, pa.row, pb.row);
    } else {
        walk_col(lat, c, pa.col, pa.row, pb.row);
        walk_row(lat, c, pb.row, pa.col, pb.col);
    }
    return c;
}

Correction path_correction(const Lattice& lat, AncillaIndex a, AncillaIndex b, RngSeed seed) {
    TrialRng rng(seed, RngPurpose::correction_paths);
    return path_correction(lat, a, b, rng);
}

Correction matching_correction(const Lattice& lat, const WeightMatrix& wm, const PermutationVector& v,
                               TrialRng& rng) {
    const auto& ids = wm.syndrome_ids();
    if (ids.size() != v.size()) throw std::invalid_argument("matching size does not match the weight matrix");
    Correction total(static_cast<size_t>(lat.num_data_qubits()));
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i] < i || wm.at(i, v[i]).is_excluded()) continue;
        total ^= path_correction(lat, ids[i], ids[v[i]], rng);
    }
    return total;
}

DecodeOutcome decode_with(const WeightMatrix& wm, DecoderKind kind, const TrialOptions& options, RngSeed seed) {
    switch (kind) {
        case DecoderKind::some:
            return decode(wm, options.some);
        case DecoderKind::exact: {
            if (wm.size() > kMaxInvolutionSize) return identity_outcome(wm);
            auto r = solve_involutions(wm);
            return {std::move(r.vector), r.energy, 0, r.feasible};
        }
        case DecoderKind::anneal: {
            const auto q = build_qubo(wm, wm.code_distance());
            auto schedule = options.anneal;
            schedule.seed = seed;
            const auto solved = solve_anneal(q, schedule);
            auto v = assignment_to_matching(q, solved.assignment);
            if (!v) return identity_outcome(wm);
            DecodeOutcome out;
            out.vector = std::move(*v);
            out.energy = outcome_energy(wm, out.vector);
            out.feasible = is_feasible_matching(wm, out.vector);
            return out;
        }
    }
    throw std::invalid_argument("unknown decoder kind");
}

TrialResult run_trial_on(const Lattice& lat, const ErrorPattern& errors, DecoderKind decoder, RngSeed seed,
                         const TrialOptions& options) {
    TrialResult r;
    const auto syndrome = extract_syndrome(lat, errors);

    const auto start = std::chrono::steady_clock::now();
    const auto wm = build_weight_matrix(lat, syndrome);
    const auto outcome = decode_with(wm, decoder, options, seed);
    const auto stop = std::chrono::steady_clock::now();
    r.decode_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();

    r.n_flipped = static_cast<int>(syndrome.size());
    r.n_vars_some = r.n_flipped;
    r.n_vars_ohq = ohq_variable_count(wm);
    r.energy = outcome.energy;
    r.is_involution = is_involution(outcome.vector);
    r.infeasible = !outcome.feasible;

    TrialRng paths(seed, RngPurpose::correction_paths);
    auto residual = errors;
    residual ^= matching_correction(lat, wm, outcome.vector, paths);
    r.residual_clean = extract_syndrome(lat, residual).empty();
    if (r.residual_clean) r.logical_failure = logical_cut_parity(lat, residual);
    r.success = !r.logical_failure && !r.infeasible && r.residual_clean;
    return r;
}

TrialResult run_trial(const Lattice& lat, double p, DecoderKind decoder, RngSeed seed, const TrialOptions& options) {
    return run_trial_on(lat, sample_errors(lat, p, seed), decoder, seed, options);
}

}  // namespace some
