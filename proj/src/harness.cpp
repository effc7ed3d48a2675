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

#include "some/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace some {

namespace {

std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        const auto k = s.find(sep, start);
        out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (k == std::string_view::npos) break;
        start = k + 1;
    }
    return out;
}

double to_double(std::string_view tok) {
    // from_chars for double is not available on every toolchain we target.
    const std::string s(tok);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid number '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("invalid number '" + s + "'");
    return v;
}

int64_t percentile(std::vector<int64_t> sorted, double q) {
    if (sorted.empty()) return 0;
    std::sort(sorted.begin(), sorted.end());
    auto rank = static_cast<size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    rank = std::clamp<size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

SweepRow reduce_trials(int d, double p, const std::vector<TrialResult>& results, bool timing) {
    SweepRow row;
    row.d = d;
    row.p = p;
    row.trials = results.size();
    double flipped = 0;
    double ohq = 0;
    double nanos = 0;
    std::vector<int64_t> times;
    times.reserve(results.size());
    for (const auto& r : results) {
        row.logical_failures += r.success ? 0 : 1;
        row.infeasible += r.infeasible ? 1 : 0;
        row.unclean_residuals += r.residual_clean ? 0 : 1;
        row.non_involutions += r.is_involution ? 0 : 1;
        flipped += r.n_flipped;
        ohq += r.n_vars_ohq;
        nanos += static_cast<double>(r.decode_nanos);
        times.push_back(r.decode_nanos);
    }
    if (row.trials > 0) {
        const auto n = static_cast<double>(row.trials);
        row.logical_error_rate = static_cast<double>(row.logical_failures) / n;
        row.mean_flipped = flipped / n;
        row.mean_vars_some = flipped / n;
        row.mean_vars_ohq = ohq / n;
        if (timing) {
            row.mean_decode_nanos = nanos / n;
            row.p50_decode_nanos = percentile(times, 0.50);
            row.p99_decode_nanos = percentile(std::move(times), 0.99);
        }
    }
    return row;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (distances.empty()) throw std::invalid_argument("at least one code distance is required");
    if (rates.empty()) throw std::invalid_argument("at least one error rate is required");
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (threads == 0) throw std::invalid_argument("threads must be at least 1");
    if (warmup < 0) throw std::invalid_argument("warmup must be nonnegative");
    for (double p : rates) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error rate " + format_g6(p) + " outside [0, 1]");
    }
    options.anneal.validate();
}

std::vector<double> parse_rate_spec(std::string_view spec) {
    if (spec.empty()) throw std::invalid_argument("empty error-rate specification");
    std::vector<double> rates;
    if (spec.find(':') != std::string_view::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) throw std::invalid_argument("rate range must be start:end:step");
        const double start = to_double(parts[0]);
        const double end = to_double(parts[1]);
        const double step = to_double(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("rate step must be positive");
        if (end < start) throw std::invalid_argument("rate range end precedes start");
        const auto count = static_cast<long>(std::floor((end - start) / step + 1e-9)) + 1;
        for (long k = 0; k < count; ++k) {
            // Round away accumulated binary noise (0.07 rather than 0.07000000000000001).
            rates.push_back(std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12);
        }
    } else {
        for (auto tok : split(spec, ',')) rates.push_back(to_double(tok));
    }
    for (double p : rates) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error rate " + format_g6(p) + " outside [0, 1]");
    }
    return rates;
}

std::vector<int> parse_distance_list(std::string_view spec) {
    if (spec.empty()) throw std::invalid_argument("empty distance list");
    std::vector<int> out;
    for (auto tok : split(spec, ',')) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("invalid distance '" + std::string(tok) + "'");
        }
        out.push_back(v);
    }
    return out;
}

uint64_t cell_seed(uint64_t master, int d) {
    return master ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(d));
}

void parallel_for(uint64_t count, unsigned threads, const std::function<void(uint64_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(std::max(threads, 1u), std::max<uint64_t>(count, 1)));
    if (workers <= 1) {
        for (uint64_t t = 0; t < count; ++t) body(t);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (uint64_t t = next++; t < count; t = next++) body(t);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
    config.validate();
    std::vector<SweepRow> rows;
    for (int d : config.distances) {
        const Lattice lat(d);
        const auto seed = cell_seed(config.seed, d);
        for (double p : config.rates) {
            std::vector<TrialResult> results(config.trials);
            parallel_for(config.trials, config.threads, [&](uint64_t t) {
                results[t] = run_trial(lat, p, config.decoder, {seed, t}, config.options);
            });
            rows.push_back(reduce_trials(d, p, results, config.timing));
        }
    }
    return rows;
}

std::vector<SweepRow> run_bench(const ExperimentConfig& config) {
    config.validate();
    if (config.decoder == DecoderKind::exact) throw std::invalid_argument("bench supports the some and anneal decoders");
    std::vector<SweepRow> rows;
    for (int d : config.distances) {
        const Lattice lat(d);
        const auto seed = cell_seed(config.seed, d);
        const auto warm_seed = cell_seed(~config.seed, d);
        for (double p : config.rates) {
            for (int w = 0; w < config.warmup; ++w) {
                (void)run_trial(lat, p, config.decoder, {warm_seed, static_cast<uint64_t>(w)}, config.options);
            }
            std::vector<TrialResult> results;
            results.reserve(config.trials);
            const uint64_t max_attempts = config.skip_trivial ? config.trials * 1000 : config.trials;
            for (uint64_t t = 0; t < max_attempts && results.size() < config.trials; ++t) {
                if (config.skip_trivial && p == 0.0) break;
                const auto errors = sample_errors(lat, p, {seed, t});
                if (config.skip_trivial && extract_syndrome(lat, errors).empty()) continue;
                results.push_back(run_trial_on(lat, errors, config.decoder, {seed, t}, config.options));
            }
            rows.push_back(reduce_trials(d, p, results, true));
        }
    }
    return rows;
}

std::vector<VarsRow> run_vars(const ExperimentConfig& config) {
    config.validate();
    std::vector<VarsRow> rows;
    for (int d : config.distances) {
        const Lattice lat(d, LatticeOptions{.allow_even = true});
        const auto seed = cell_seed(config.seed, d);
        for (double p : config.rates) {
            std::vector<int> n_some(config.trials);
            std::vector<int> n_ohq(config.trials);
            parallel_for(config.trials, config.threads, [&](uint64_t t) {
                const auto s = extract_syndrome(lat, sample_errors(lat, p, {seed, t}));
                n_some[t] = static_cast<int>(s.size());
                n_ohq[t] = ohq_variable_count(build_weight_matrix(lat, s));
            });
            VarsRow row;
            row.d = d;
            row.p = p;
            row.trials = config.trials;
            double some_total = 0;
            double ohq_total = 0;
            for (uint64_t t = 0; t < config.trials; ++t) {
                some_total += n_some[t];
                ohq_total += n_ohq[t];
            }
            row.mean_flipped = some_total / static_cast<double>(config.trials);
            row.mean_vars_some = row.mean_flipped;
            row.mean_vars_ohq = ohq_total / static_cast<double>(config.trials);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "d,p,trials,logicalFailures,logicalErrorRate,meanFlipped,meanVarsSome,meanVarsOhq,"
        "meanDecodeNanos,p50DecodeNanos,p99DecodeNanos\n";
    for (const auto& r : rows) {
        out += std::to_string(r.d) + "," + format_g6(r.p) + "," + std::to_string(r.trials) + "," +
               std::to_string(r.logical_failures) + "," + format_g6(r.logical_error_rate) + "," +
               format_g6(r.mean_flipped) + "," + format_g6(r.mean_vars_some) + "," + format_g6(r.mean_vars_ohq) +
               "," + format_g6(r.mean_decode_nanos) + "," + std::to_string(r.p50_decode_nanos) + "," +
               std::to_string(r.p99_decode_nanos) + "\n";
    }
    return out;
}

std::string vars_csv(const std::vector<VarsRow>& rows) {
    std::string out = "d,p,trials,meanFlipped,meanVarsSome,meanVarsOhq\n";
    for (const auto& r : rows) {
        out += std::to_string(r.d) + "," + format_g6(r.p) + "," + std::to_string(r.trials) + "," +
               format_g6(r.mean_flipped) + "," + format_g6(r.mean_vars_some) + "," + format_g6(r.mean_vars_ohq) +
               "\n";
    }
    return out;
}

OracleReport run_oracle_check(const ExperimentConfig& config) {
    config.validate();
    OracleReport report;
    for (int d : config.distances) {
        const Lattice lat(d);
        const auto seed = cell_seed(config.seed, d);
        for (double p : config.rates) {
            struct Check {
                bool eligible = false;
                bool some_optimal = false;
                bool some_below = false;
                bool qubo_checked = false;
                bool qubo_agree = false;
                bool qubo_one_hot = false;
                bool anneal_agree = false;
            };
            std::vector<Check> checks(config.trials);
            parallel_for(config.trials, config.threads, [&](uint64_t t) {
                const auto s = extract_syndrome(lat, sample_errors(lat, p, {seed, t}));
                if (static_cast<int>(s.size()) > kOracleMaxSyndromes) return;
                auto& c = checks[t];
                c.eligible = true;
                const auto wm = build_weight_matrix(lat, s);
                const auto oracle = solve_involutions(wm);
                const auto greedy = decode(wm, config.options.some);
                c.some_optimal = greedy.energy == oracle.energy;
                c.some_below = greedy.energy < oracle.energy;
                const auto q = build_qubo(wm, d);
                if (q.num_variables() > kMaxExhaustiveVariables) return;
                c.qubo_checked = true;
                const auto exact = solve_exhaustive(q);
                c.qubo_agree = exact.energy == oracle.energy;
                c.qubo_one_hot = satisfies_one_hot(q, exact.assignment);
                auto schedule = config.options.anneal;
                schedule.seed = {seed, t};
                c.anneal_agree = solve_anneal(q, schedule).energy == exact.energy;
            });

            OracleCell cell;
            cell.d = d;
            cell.p = p;
            cell.instances = config.trials;
            for (const auto& c : checks) {
                if (!c.eligible) continue;
                ++cell.some_checked;
                cell.some_optimal += c.some_optimal;
                cell.some_below_oracle += c.some_below;
                if (!c.qubo_checked) continue;
                ++cell.qubo_checked;
                cell.qubo_agree += c.qubo_agree;
                cell.qubo_one_hot += c.qubo_one_hot;
                cell.anneal_agree += c.anneal_agree;
            }
            const bool ok = cell.some_below_oracle == 0 && cell.qubo_agree == cell.qubo_checked &&
                            cell.qubo_one_hot == cell.qubo_checked;
            report.passed = report.passed && ok;

            const auto rate = [](uint64_t num, uint64_t den) {
                return den == 0 ? std::string("n/a") : format_g6(static_cast<double>(num) / static_cast<double>(den));
            };
            report.text += "d=" + std::to_string(d) + " p=" + format_g6(p) + " instances=" +
                           std::to_string(cell.instances) + " checked=" + std::to_string(cell.some_checked) +
                           " some_optimal_rate=" + rate(cell.some_optimal, cell.some_checked) +
                           " some_below_oracle=" + std::to_string(cell.some_below_oracle) +
                           " qubo_checked=" + std::to_string(cell.qubo_checked) +
                           " exhaustive_vs_involution=" + rate(cell.qubo_agree, cell.qubo_checked) +
                           " exhaustive_one_hot=" + rate(cell.qubo_one_hot, cell.qubo_checked) +
                           " anneal_vs_exhaustive=" + rate(cell.anneal_agree, cell.qubo_checked) +
                           (ok ? " PASS" : " FAIL") + "\n";
            report.cells.push_back(cell);
        }
    }
    return report;
}

}  // namespace some
