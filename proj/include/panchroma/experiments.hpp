#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "panchroma/bounds.hpp"
#include "panchroma/coloring.hpp"
#include "panchroma/hypergraph.hpp"

namespace panchroma::experiments {

struct ExperimentConfig {
    Hypergraph h;
    int r = 2;
    std::optional<double> p_override;  // default: p from the (n, r) formula
    long long trials = 1;
    std::uint64_t master_seed = 0;
    bool collect_success = true;
    bool collect_short_edges = true;
    bool collect_snake_balls = true;
    bool collect_failing_edges = true;
    int failure_record_cap = 100;
    int threads = 0;  // 0 = decide from PANCHROMA_THREADS, else hardware
};

// Integer accumulators so partial merges are exact and order-independent.
struct CountStat {
    long long sum = 0;
    long long sum_sq = 0;

    void add(long long value) {
        sum += value;
        sum_sq += value * value;
    }
    void merge(const CountStat& other) {
        sum += other.sum;
        sum_sq += other.sum_sq;
    }
    double mean(long long trials) const;
    double stderr_of_mean(long long trials) const;
};

struct FailureRecord {
    long long trial = 0;
    std::uint64_t seed = 0;
    int failing_edge = -1;      // lowest-index edge missing a color
    bool had_short_edge = false;
    bool snake_verified = false;  // meaningful only when !had_short_edge
};

struct McStats {
    // experiment identity, for bound matching
    long long n = 0;       // uniformity
    int r = 0;
    double p = 0.0;
    long long num_edges = 0;
    std::uint64_t master_seed = 0;
    int failure_record_cap = 100;

    long long trials = 0;
    long long successes = 0;
    CountStat short_edge_count;    // distinct short edges per trial
    CountStat failing_edge_count;  // edges missing >= 1 color per trial
    long long short_trials = 0;    // trials with at least one short edge
    long long snake_attempts = 0;  // failing trials with no short edge
    long long snake_verified = 0;  // of those, extraction + verification ok
    long long inconsistencies = 0; // extraction contract violations (must be 0)
    std::vector<FailureRecord> failure_records;  // first records by trial, capped

    double success_rate() const;
    double success_stderr() const;
    // 95% Wilson score interval for the success probability.
    double wilson_low() const;
    double wilson_high() const;
    // P(failure with no short edge) — the event the snake-ball machinery bounds.
    double failure_no_short_rate() const;
    double failure_no_short_stderr() const;

    // Exact, associative merge of disjoint trial ranges.
    void merge(const McStats& other);
};

// Runs cfg.trials independent trials. Trial k draws weights with seed
// trial_seed(master_seed, k); the result is identical for any thread count.
// Extraction contract violations ("witness missing", unexpected verify
// failures) are counted in `inconsistencies` and recorded, never swallowed.
McStats run_experiment(const ExperimentConfig& cfg);

struct ComparisonRow {
    std::string name;          // tracked statistic
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::optional<double> bound_log;  // matched analytic bound, if any
    std::string verdict;       // "within bound" | "exceeds bound" | "n/a"
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    bool any_violation = false;
};

// Pairs each tracked statistic with a matching bound:
//   SHORT_EDGE_EXPECTED            -> mean short-edge count per trial
//   SNAKE_CHAIN_SECTION6 / LEMMA1  -> failure-with-no-short-edge rate
// Bounds evaluated at parameters other than the experiment's (n, r, p, |E|)
// are rejected with std::invalid_argument. A statistic exceeds its bound when
// mean > exp(bound_log) + 5 * stderr.
ComparisonReport summarize(const McStats& stats,
                           const std::vector<bounds::LogBound>& bound_list);

std::string mc_csv_header();
std::string mc_csv(const ComparisonReport& report);
std::string mc_json(const McStats& stats, const ComparisonReport& report);

}  // namespace panchroma::experiments
