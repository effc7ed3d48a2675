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


// Command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "some/some.h"

namespace {

struct CommonArgs {
    std::string distances = "5,9,13";
    std::string rates = "0.01";
    uint64_t trials = 10000;
    std::string decoder = "some";
    uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
    bool skip_trivial = false;
    bool timing = false;
    int warmup = 100;
};

struct Failure {
    int code;
    std::string message;
};

void check(some_status status, const char* what) {
    if (status != SOME_OK) {
        throw Failure{status == SOME_ERR_PARSE ? 3 : 2,
                      std::string(what) + ": " + some_status_string(status) + ": " + some_last_error()};
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{4, "cannot open '" + path + "' for reading"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{4, "cannot open '" + path + "' for writing"};
    out << text;
    if (!out.flush()) throw Failure{4, "failed writing '" + path + "'"};
}

// Owns a string returned by the library.
struct LibString {
    char* s = nullptr;
    ~LibString() { some_string_free(s); }
};

some_decoder_kind decoder_kind(const std::string& name) {
    some_decoder_kind kind;
    check(some_parse_decoder_kind(name.c_str(), &kind), "--decoder");
    return kind;
}

some_experiment_config make_config(const CommonArgs& a) {
    some_experiment_config c;
    some_experiment_config_init(&c);
    c.distances = a.distances.c_str();
    c.rates = a.rates.c_str();
    c.trials = a.trials;
    c.decoder = decoder_kind(a.decoder);
    c.seed = a.seed;
    c.threads = a.threads;
    c.skip_trivial = a.skip_trivial ? 1 : 0;
    c.timing = a.timing ? 1 : 0;
    c.warmup = a.warmup;
    return c;
}

void add_grid(CLI::App* app, CommonArgs& a) {
    app->add_option("--d", a.distances, "Comma-separated code distances")->capture_default_str();
    app->add_option("--p", a.rates, "Error rates: comma list or start:end:step")->capture_default_str();
    app->add_option("--trials", a.trials, "Trials per (d, p) cell")->capture_default_str();
    app->add_option("--seed", a.seed, "Master seed")->capture_default_str();
    app->add_option("--out", a.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SOME decoder for the planar surface code"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(some_version()));

    CommonArgs args;
    std::string input;
    int sample_d = 0;
    double sample_p = -1;
    uint64_t sample_trial = 0;

    auto* sweep = app.add_subcommand("sweep", "Logical error rate over a (d, p) grid");
    add_grid(sweep, args);
    sweep->add_option("--decoder", args.decoder, "some, anneal or exact")->capture_default_str();
    sweep->add_option("--threads", args.threads, "Worker threads")->capture_default_str();
    sweep->add_flag("--skip-trivial", args.skip_trivial, "Accepted for symmetry with bench; no effect");
    sweep->add_flag("--timing", args.timing, "Fill the decode-time columns");

    auto* vars = app.add_subcommand("vars", "Mean flipped syndromes and variable counts");
    add_grid(vars, args);
    vars->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Single-threaded decode latency");
    add_grid(bench, args);
    bench->add_option("--decoder", args.decoder, "some, anneal or exact")->capture_default_str();
    bench->add_option("--warmup", args.warmup, "Untimed decodes before measuring")->capture_default_str();
    bench->add_flag("--skip-trivial", args.skip_trivial, "Only time instances with at least one flipped syndrome");

    auto* decode = app.add_subcommand("decode", "Decode one syndrome file and print a JSON report");
    decode->add_option("--in,input", input, "Syndrome file (default stdin)");
    decode->add_option("--decoder", args.decoder, "some, anneal or exact")->capture_default_str();
    decode->add_option("--seed", args.seed, "Seed for the annealer and path choice")->capture_default_str();
    decode->add_option("--out", args.out, "Output file (default stdout)");

    auto* export_qubo = app.add_subcommand("export-qubo", "Write the one-hot QUBO of one instance");
    export_qubo->add_option("--in,input", input, "Syndrome file");
    export_qubo->add_option("--d", sample_d, "Distance of a sampled instance");
    export_qubo->add_option("--p", sample_p, "Error rate of a sampled instance");
    export_qubo->add_option("--seed", args.seed, "Master seed of a sampled instance")->capture_default_str();
    export_qubo->add_option("--trial", sample_trial, "Trial index of a sampled instance")->capture_default_str();
    export_qubo->add_option("--out", args.out, "Output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle-check", "Cross-check decoders against exhaustive search");
    add_grid(oracle, args);
    oracle->add_option("--threads", args.threads, "Worker threads")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        LibString text;
        if (sweep->parsed()) {
            const auto c = make_config(args);
            check(some_run_sweep(&c, &text.s), "sweep");
        } else if (vars->parsed()) {
            const auto c = make_config(args);
            check(some_run_vars(&c, &text.s), "vars");
        } else if (bench->parsed()) {
            args.threads = 1;
            const auto c = make_config(args);
            check(some_run_bench(&c, &text.s), "bench");
        } else if (decode->parsed()) {
            const auto kind = decoder_kind(args.decoder);
            const auto body = read_input(input);
            check(some_decode_syndrome_text(body.c_str(), kind, args.seed, &text.s), "decode");
        } else if (export_qubo->parsed()) {
            if (!input.empty()) {
                if (sample_d != 0 || sample_p >= 0) throw Failure{1, "export-qubo: use either --in or --d/--p"};
                const auto body = read_input(input);
                check(some_export_qubo_from_syndrome_text(body.c_str(), &text.s), "export-qubo");
            } else {
                if (sample_d == 0 || sample_p < 0) throw Failure{1, "export-qubo: need --in, or both --d and --p"};
                check(some_export_qubo_sampled(sample_d, sample_p, args.seed, sample_trial, &text.s), "export-qubo");
            }
        } else if (oracle->parsed()) {
            const auto c = make_config(args);
            int passed = 0;
            check(some_run_oracle_check(&c, &text.s, &passed), "oracle-check");
            write_output(args.out, text.s);
            return passed ? 0 : 5;
        }
        write_output(args.out, text.s);
    } catch (const Failure& f) {
        std::cerr << "some: " << f.message << "\n";
        return f.code;
    }
    return 0;
}
