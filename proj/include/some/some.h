/*
 * Copyright 2026 The SOME Decoder Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the SOME decoder library.
 *
 * Every fallible call returns a some_status. On failure a description is
 * available from some_last_error() on the calling thread until the next
 * failing call on that thread. Strings returned through char** are owned by
 * the caller and released with some_string_free().
 */

#ifndef SOME_SOME_H
#define SOME_SOME_H

#include <stddef.h>
#include <stdint.h>

#if defined(SOME_BUILDING_LIBRARY)
#define SOME_API __attribute__((visibility("default")))
#else
#define SOME_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum some_status {
    SOME_OK = 0,
    SOME_ERR_INVALID_ARGUMENT = 1,
    SOME_ERR_OUT_OF_RANGE = 2,
    SOME_ERR_PARSE = 3,
    SOME_ERR_IO = 4,
    SOME_ERR_LIMIT = 5,
    SOME_ERR_INTERNAL = 6
} some_status;

typedef enum some_decoder_kind {
    SOME_DECODER_SOME = 0,
    SOME_DECODER_ANNEAL = 1,
    SOME_DECODER_EXACT = 2
} some_decoder_kind;

typedef struct some_lattice some_lattice;
typedef struct some_decode_result some_decode_result;

SOME_API const char* some_version(void);
SOME_API const char* some_status_string(some_status status);
SOME_API const char* some_last_error(void);
SOME_API void some_string_free(char* s);

/* Parses "some", "anneal" or "exact". */
SOME_API some_status some_parse_decoder_kind(const char* name, some_decoder_kind* out);

/* ---- lattice ---- */

/* Odd distance in [3, 255]; allow_even != 0 also admits even distances. */
SOME_API some_status some_lattice_create(int distance, int allow_even, some_lattice** out);
SOME_API void some_lattice_destroy(some_lattice* lattice);

SOME_API int some_lattice_distance(const some_lattice* lattice);
SOME_API int some_lattice_num_data_qubits(const some_lattice* lattice);
/* d(d+1) */
SOME_API int some_lattice_num_syndromes(const some_lattice* lattice);
/* d(d-1) */
SOME_API int some_lattice_num_active_syndromes(const some_lattice* lattice);

SOME_API some_status some_lattice_ancilla_index(const some_lattice* lattice, int row, int col, int* out_index);

/* Number of errors in the shortest chain joining ancillas a and b (a == b
 * means the nearest boundary). Writes -1 when no chain exists. */
SOME_API some_status some_lattice_chain_weight(const some_lattice* lattice, int a, int b, int* out_errors);

/* ---- single-instance decoding ---- */

/* Decodes the flipped ancilla indices (any order, no repeats). The seed
 * drives the annealer and the correction-path coin. */
SOME_API some_status some_decode(const some_lattice* lattice, const int* ancillas, size_t count,
                                 some_decoder_kind decoder, uint64_t seed, some_decode_result** out);
SOME_API void some_decode_result_destroy(some_decode_result* result);

/* Number of flipped syndromes n. */
SOME_API size_t some_decode_result_size(const some_decode_result* result);
/* Copies the permutation vector (n entries) into out. */
SOME_API some_status some_decode_result_matching(const some_decode_result* result, int* out, size_t capacity);
SOME_API double some_decode_result_energy(const some_decode_result* result);
SOME_API int some_decode_result_feasible(const some_decode_result* result);
/* Sorted data-qubit indices of the correction. Call with out == NULL to
 * query the count. */
SOME_API some_status some_decode_result_correction(const some_decode_result* result, int* out, size_t capacity,
                                                   size_t* out_count);
SOME_API some_status some_decode_result_json(const some_decode_result* result, char** out_json);

/* Parses a syndrome file ("d <distance>" then "s <row> <col>" lines) and
 * decodes it, returning the JSON report. */
SOME_API some_status some_decode_syndrome_text(const char* text, some_decoder_kind decoder, uint64_t seed,
                                               char** out_json);

/* ---- QUBO export ---- */

SOME_API some_status some_export_qubo_from_syndrome_text(const char* text, char** out_qubo);
/* Samples trial `trial` of the (distance, p, seed) cell used by sweep. */
SOME_API some_status some_export_qubo_sampled(int distance, double p, uint64_t seed, uint64_t trial,
                                              char** out_qubo);
/* Energy of a 0/1 assignment of length count against QUBO text. */
SOME_API some_status some_qubo_energy(const char* qubo_text, const uint8_t* assignment, size_t count,
                                      double* out_energy);

/* ---- experiments ---- */

typedef struct some_experiment_config {
    const char* distances; /* "5,9,13" */
    const char* rates;     /* "0.01,0.02" or "start:end:step" */
    uint64_t trials;
    some_decoder_kind decoder;
    uint64_t seed;
    unsigned threads;
    int skip_trivial;
    int timing;
    int warmup;
} some_experiment_config;

SOME_API void some_experiment_config_init(some_experiment_config* config);

SOME_API some_status some_run_sweep(const some_experiment_config* config, char** out_csv);
SOME_API some_status some_run_vars(const some_experiment_config* config, char** out_csv);
SOME_API some_status some_run_bench(const some_experiment_config* config, char** out_csv);
/* out_passed receives 1 when every cross-check held. */
SOME_API some_status some_run_oracle_check(const some_experiment_config* config, char** out_report,
                                           int* out_passed);

#ifdef __cplusplus
}
#endif

#endif /* SOME_SOME_H */
