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


#include "some/some.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "some/harness.hpp"
#include "some/syndrome_io.hpp"

struct some_lattice {
    some::Lattice lattice;
};

struct some_decode_result {
    some::DecodeReport report;
};

namespace {

thread_local std::string g_last_error;

some_status set_error(some_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Maps the exception in flight to a status code. `parsing` marks calls whose
// invalid_argument comes from reading text.
some_status translate(bool parsing = false) {
    try {
        throw;
    } catch (const std::bad_alloc& e) {
        return set_error(SOME_ERR_LIMIT, "out of memory");
    } catch (const std::length_error& e) {
        return set_error(SOME_ERR_LIMIT, e.what());
    } catch (const std::out_of_range& e) {
        return set_error(SOME_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(parsing ? SOME_ERR_PARSE : SOME_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(SOME_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(SOME_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

some::DecoderKind to_kind(some_decoder_kind k) {
    switch (k) {
        case SOME_DECODER_SOME:
            return some::DecoderKind::some;
        case SOME_DECODER_ANNEAL:
            return some::DecoderKind::anneal;
        case SOME_DECODER_EXACT:
            return some::DecoderKind::exact;
    }
    throw std::invalid_argument("unknown decoder kind " + std::to_string(static_cast<int>(k)));
}

#define SOME_REQUIRE(cond, msg) \
    if (!(cond)) return set_error(SOME_ERR_INVALID_ARGUMENT, msg)

some::ExperimentConfig to_config(const some_experiment_config& c) {
    if (c.distances == nullptr || c.rates == nullptr) throw std::invalid_argument("distances and rates are required");
    some::ExperimentConfig config;
    config.distances = some::parse_distance_list(c.distances);
    config.rates = some::parse_rate_spec(c.rates);
    config.trials = c.trials;
    config.decoder = to_kind(c.decoder);
    config.seed = c.seed;
    config.threads = c.threads;
    config.skip_trivial = c.skip_trivial != 0;
    config.timing = c.timing != 0;
    config.warmup = c.warmup;
    config.validate();
    return config;
}

some::SyndromeSet parse_syndrome_text(const char* text, std::unique_ptr<some::Lattice>& lat) {
    const auto file = some::parse_syndrome_file(text);
    lat = std::make_unique<some::Lattice>(file.distance);
    return some::to_syndrome_set(*lat, file);
}

}  // namespace

extern "C" {

const char* some_version(void) { return "0.1.0"; }

const char* some_status_string(some_status status) {
    switch (status) {
        case SOME_OK:
            return "ok";
        case SOME_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case SOME_ERR_OUT_OF_RANGE:
            return "out of range";
        case SOME_ERR_PARSE:
            return "parse error";
        case SOME_ERR_IO:
            return "i/o error";
        case SOME_ERR_LIMIT:
            return "limit exceeded";
        case SOME_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* some_last_error(void) { return g_last_error.c_str(); }

void some_string_free(char* s) { std::free(s); }

some_status some_parse_decoder_kind(const char* name, some_decoder_kind* out) {
    SOME_REQUIRE(name != nullptr && out != nullptr, "null argument");
    try {
        switch (some::parse_decoder_kind(name)) {
            case some::DecoderKind::some:
                *out = SOME_DECODER_SOME;
                break;
            case some::DecoderKind::anneal:
                *out = SOME_DECODER_ANNEAL;
                break;
            case some::DecoderKind::exact:
                *out = SOME_DECODER_EXACT;
                break;
        }
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_lattice_create(int distance, int allow_even, some_lattice** out) {
    SOME_REQUIRE(out != nullptr, "null output handle");
    *out = nullptr;
    try {
        *out = new some_lattice{some::Lattice(distance, some::LatticeOptions{allow_even != 0})};
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

void some_lattice_destroy(some_lattice* lattice) { delete lattice; }

int some_lattice_distance(const some_lattice* lattice) { return lattice ? lattice->lattice.distance() : 0; }

int some_lattice_num_data_qubits(const some_lattice* lattice) {
    return lattice ? lattice->lattice.num_data_qubits() : 0;
}

int some_lattice_num_syndromes(const some_lattice* lattice) { return lattice ? lattice->lattice.num_syndromes() : 0; }

int some_lattice_num_active_syndromes(const some_lattice* lattice) {
    return lattice ? lattice->lattice.num_active_syndromes() : 0;
}

some_status some_lattice_ancilla_index(const some_lattice* lattice, int row, int col, int* out_index) {
    SOME_REQUIRE(lattice != nullptr && out_index != nullptr, "null argument");
    try {
        *out_index = lattice->lattice.ancilla({row, col});
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_lattice_chain_weight(const some_lattice* lattice, int a, int b, int* out_errors) {
    SOME_REQUIRE(lattice != nullptr && out_errors != nullptr, "null argument");
    try {
        const auto& lat = lattice->lattice;
        lat.coord(a);
        lat.coord(b);
        *out_errors = lat.chain_weight(a, b).value_or(-1);
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_decode(const some_lattice* lattice, const int* ancillas, size_t count, some_decoder_kind decoder,
                        uint64_t seed, some_decode_result** out) {
    SOME_REQUIRE(lattice != nullptr && out != nullptr, "null argument");
    SOME_REQUIRE(ancillas != nullptr || count == 0, "null ancilla array");
    *out = nullptr;
    try {
        std::vector<some::AncillaIndex> ids(ancillas, ancillas + count);
        std::sort(ids.begin(), ids.end());
        const auto s = some::make_syndrome_set(lattice->lattice, std::move(ids));
        *out = new some_decode_result{some::decode_report(lattice->lattice, s, to_kind(decoder), seed)};
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

void some_decode_result_destroy(some_decode_result* result) { delete result; }

size_t some_decode_result_size(const some_decode_result* result) {
    return result ? result->report.outcome.vector.size() : 0;
}

some_status some_decode_result_matching(const some_decode_result* result, int* out, size_t capacity) {
    SOME_REQUIRE(result != nullptr && out != nullptr, "null argument");
    const auto& v = result->report.outcome.vector;
    if (capacity < v.size()) return set_error(SOME_ERR_OUT_OF_RANGE, "matching buffer too small");
    std::copy(v.begin(), v.end(), out);
    return SOME_OK;
}

double some_decode_result_energy(const some_decode_result* result) {
    return result ? result->report.outcome.energy.value() : 0.0;
}

int some_decode_result_feasible(const some_decode_result* result) {
    return result && result->report.outcome.feasible ? 1 : 0;
}

some_status some_decode_result_correction(const some_decode_result* result, int* out, size_t capacity,
                                          size_t* out_count) {
    SOME_REQUIRE(result != nullptr && out_count != nullptr, "null argument");
    try {
        const auto bits = result->report.correction.set_bits();
        *out_count = bits.size();
        if (out == nullptr) return SOME_OK;
        if (capacity < bits.size()) return set_error(SOME_ERR_OUT_OF_RANGE, "correction buffer too small");
        std::copy(bits.begin(), bits.end(), out);
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_decode_result_json(const some_decode_result* result, char** out_json) {
    SOME_REQUIRE(result != nullptr && out_json != nullptr, "null argument");
    try {
        *out_json = dup_string(result->report.json);
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_decode_syndrome_text(const char* text, some_decoder_kind decoder, uint64_t seed, char** out_json) {
    SOME_REQUIRE(text != nullptr && out_json != nullptr, "null argument");
    *out_json = nullptr;
    std::unique_ptr<some::Lattice> lat;
    some::SyndromeSet s;
    try {
        s = parse_syndrome_text(text, lat);
    } catch (...) {
        return translate(true);
    }
    try {
        *out_json = dup_string(some::decode_report(*lat, s, to_kind(decoder), seed).json);
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_export_qubo_from_syndrome_text(const char* text, char** out_qubo) {
    SOME_REQUIRE(text != nullptr && out_qubo != nullptr, "null argument");
    *out_qubo = nullptr;
    std::unique_ptr<some::Lattice> lat;
    some::SyndromeSet s;
    try {
        s = parse_syndrome_text(text, lat);
    } catch (...) {
        return translate(true);
    }
    try {
        const auto wm = some::build_weight_matrix(*lat, s);
        *out_qubo = dup_string(some::export_qubo(some::build_qubo(wm, lat->distance())));
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_export_qubo_sampled(int distance, double p, uint64_t seed, uint64_t trial, char** out_qubo) {
    SOME_REQUIRE(out_qubo != nullptr, "null argument");
    *out_qubo = nullptr;
    try {
        const some::Lattice lat(distance);
        const some::RngSeed rng{some::cell_seed(seed, distance), trial};
        const auto s = some::extract_syndrome(lat, some::sample_errors(lat, p, rng));
        const auto wm = some::build_weight_matrix(lat, s);
        *out_qubo = dup_string(some::export_qubo(some::build_qubo(wm, distance)));
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_qubo_energy(const char* qubo_text, const uint8_t* assignment, size_t count, double* out_energy) {
    SOME_REQUIRE(qubo_text != nullptr && out_energy != nullptr, "null argument");
    SOME_REQUIRE(assignment != nullptr || count == 0, "null assignment");
    some::QuboInstance q;
    try {
        q = some::parse_qubo(qubo_text);
    } catch (...) {
        return translate(true);
    }
    try {
        *out_energy = q.energy(std::span<const uint8_t>(assignment, count)).value();
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

void some_experiment_config_init(some_experiment_config* config) {
    if (config == nullptr) return;
    config->distances = nullptr;
    config->rates = nullptr;
    config->trials = 10000;
    config->decoder = SOME_DECODER_SOME;
    config->seed = 0;
    config->threads = 1;
    config->skip_trivial = 0;
    config->timing = 0;
    config->warmup = 100;
}

some_status some_run_sweep(const some_experiment_config* config, char** out_csv) {
    SOME_REQUIRE(config != nullptr && out_csv != nullptr, "null argument");
    *out_csv = nullptr;
    try {
        *out_csv = dup_string(some::sweep_csv(some::run_sweep(to_config(*config))));
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_run_vars(const some_experiment_config* config, char** out_csv) {
    SOME_REQUIRE(config != nullptr && out_csv != nullptr, "null argument");
    *out_csv = nullptr;
    try {
        *out_csv = dup_string(some::vars_csv(some::run_vars(to_config(*config))));
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_run_bench(const some_experiment_config* config, char** out_csv) {
    SOME_REQUIRE(config != nullptr && out_csv != nullptr, "null argument");
    *out_csv = nullptr;
    try {
        *out_csv = dup_string(some::sweep_csv(some::run_bench(to_config(*config))));
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

some_status some_run_oracle_check(const some_experiment_config* config, char** out_report, int* out_passed) {
    SOME_REQUIRE(config != nullptr && out_report != nullptr && out_passed != nullptr, "null argument");
    *out_report = nullptr;
    try {
        const auto report = some::run_oracle_check(to_config(*config));
        *out_report = dup_string(report.text);
        *out_passed = report.passed ? 1 : 0;
        return SOME_OK;
    } catch (...) {
        return translate();
    }
}

}  // extern "C"
