#include "panchroma/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "panchroma/conflict.hpp"
#include "panchroma/rng.hpp"

namespace panchroma::experiments {

namespace {

constexpr double WILSON_Z = 1.959963984540054;  // 97.5% normal quantile

double bernoulli_stderr(long long hits, long long trials) {
    if (trials <= 0)
        return 0.0;
    const double rate = static_cast<double>(hits) / static_cast<double>(trials);
    return std::sqrt(std::max(0.0, rate * (1.0 - rate) / static_cast<double>(trials)));
}

std::pair<double, double> wilson_interval(long long hits, long long trials) {
    if (trials <= 0)
        return {0.0, 1.0};
    const double t = static_cast<double>(trials);
    const double phat = static_cast<double>(hits) / t;
    const double z2 = WILSON_Z * WILSON_Z;
    const double denom = 1.0 + z2 / t;
    const double center = (phat + z2 / (2.0 * t)) / denom;
    const double half =
        WILSON_Z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace

double CountStat::mean(long long trials) const {
    if (trials <= 0)
        return 0.0;
    return static_cast<double>(sum) / static_cast<double>(trials);
}

double CountStat::stderr_of_mean(long long trials) const {
    if (trials <= 1)
        return 0.0;
    const double t = static_cast<double>(trials);
    const double m = static_cast<double>(sum) / t;
    const double variance =
        (static_cast<double>(sum_sq) - t * m * m) / (t - 1.0);
    return std::sqrt(std::max(0.0, variance / t));
}

double McStats::success_rate() const {
    return trials > 0 ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
}

double McStats::success_stderr() const {
    return bernoulli_stderr(successes, trials);
}

double McStats::wilson_low() const {
    return wilson_interval(successes, trials).first;
}

double McStats::wilson_high() const {
    return wilson_interval(successes, trials).second;
}

double McStats::failure_no_short_rate() const {
    return trials > 0 ? static_cast<double>(snake_attempts) / static_cast<double>(trials) : 0.0;
}

double McStats::failure_no_short_stderr() const {
    return bernoulli_stderr(snake_attempts, trials);
}

void McStats::merge(const McStats& other) {
    if (other.trials == 0)
        return;
    if (trials == 0) {
        *this = other;
        return;
    }
    if (n != other.n || r != other.r || p != other.p || num_edges != other.num_edges ||
        master_seed != other.master_seed)
        throw std::invalid_argument("cannot merge statistics from different experiments");
    trials += other.trials;
    successes += other.successes;
    short_edge_count.merge(other.short_edge_count);
    failing_edge_count.merge(other.failing_edge_count);
    short_trials += other.short_trials;
    snake_attempts += other.snake_attempts;
    snake_verified += other.snake_verified;
    inconsistencies += other.inconsistencies;
    failure_records.insert(failure_records.end(), other.failure_records.begin(),
                           other.failure_records.end());
    std::sort(failure_records.begin(), failure_records.end(),
              [](const FailureRecord& a, const FailureRecord& b) { return a.trial < b.trial; });
    if (static_cast<int>(failure_records.size()) > failure_record_cap)
        failure_records.resize(static_cast<std::size_t>(failure_record_cap));
}

namespace {

McStats blank_stats(const ExperimentConfig& cfg, const PartitionParams& params) {
    McStats stats;
    stats.n = cfg.h.n;
    stats.r = cfg.r;
    stats.p = params.p;
    stats.num_edges = cfg.h.num_edges();
    stats.master_seed = cfg.master_seed;
    stats.failure_record_cap = cfg.failure_record_cap;
    return stats;
}

// Trials [first, last) of the experiment; deterministic in the range alone.
McStats run_chunk(const ExperimentConfig& cfg, const PartitionParams& params, long long first,
                  long long last) {
    McStats stats = blank_stats(cfg, params);
    for (long long k = first; k < last; ++k) {
        const std::uint64_t seed = trial_seed(cfg.master_seed, static_cast<std::uint64_t>(k));
        const WeightAssignment weights = assign_weights(cfg.h, seed);
        const ColoringTrace trace = run_coloring(cfg.h, params, weights);
        const PanchromaticCheck check = is_panchromatic(cfg.h, trace);

        ++stats.trials;
        if (check.ok)
            ++stats.successes;

        int short_count = 0;
        if (cfg.collect_short_edges || cfg.collect_snake_balls) {
            const ShortEdgeReport report = find_short_edges(cfg.h, cfg.r, trace.labels);
            short_count = static_cast<int>(report.edges().size());
            if (cfg.collect_short_edges)
                stats.short_edge_count.add(short_count);
            if (short_count > 0)
                ++stats.short_trials;
        }

        if (check.ok)
            continue;

        int failing_edge = check.failing.front().first;
        if (cfg.collect_failing_edges) {
            long long distinct = 0;
            int prev = -1;
            for (const auto& [edge, color] : check.failing) {
                if (edge != prev)
                    ++distinct;
                prev = edge;
            }
            stats.failing_edge_count.add(distinct);
        }

        FailureRecord record;
        record.trial = k;
        record.seed = seed;
        record.failing_edge = failing_edge;
        record.had_short_edge = short_count > 0;

        if (cfg.collect_snake_balls && short_count == 0) {
            ++stats.snake_attempts;
            try {
                const SnakeBall sb = extract_snake_ball(cfg.h, trace, failing_edge);
                const VerifyResult verdict = verify_snake_ball(cfg.h, trace, sb);
                if (verdict.ok) {
                    ++stats.snake_verified;
                    record.snake_verified = true;
                } else {
                    ++stats.inconsistencies;
                }
            } catch (const std::logic_error&) {
                // "witness missing" or any precondition surprise is a
                // contract violation, surfaced in the totals.
                ++stats.inconsistencies;
            }
        }

        if (static_cast<int>(stats.failure_records.size()) < cfg.failure_record_cap)
            stats.failure_records.push_back(record);
    }
    return stats;
}

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("PANCHROMA_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

McStats run_experiment(const ExperimentConfig& cfg) {
    require_valid(cfg.h);
    if (cfg.trials < 1)
        throw std::domain_error("experiment needs at least one trial");
    if (cfg.failure_record_cap < 0)
        throw std::domain_error("failure record cap must be nonnegative");
    const PartitionParams params = cfg.p_override
                                       ? params_override(cfg.r, *cfg.p_override)
                                       : params_from_formula(cfg.h.n, cfg.r);

    const int threads = std::min<long long>(resolve_threads(cfg.threads), cfg.trials);
    if (threads <= 1)
        return run_chunk(cfg, params, 0, cfg.trials);

    std::vector<McStats> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    const long long per = cfg.trials / threads;
    const long long extra = cfg.trials % threads;
    long long start = 0;
    for (int t = 0; t < threads; ++t) {
        const long long count = per + (t < extra ? 1 : 0);
        workers.emplace_back(
            [&cfg, &params, &parts, t, start, count] {
                parts[static_cast<std::size_t>(t)] = run_chunk(cfg, params, start, start + count);
            });
        start += count;
    }
    for (auto& w : workers)
        w.join();
    McStats total = blank_stats(cfg, params);
    for (const auto& part : parts)
        total.merge(part);
    return total;
}

namespace {

struct TrackedStat {
    std::string name;
    double mean;
    double stderr_of_mean;
};

const char* stat_for_formula(bounds::Formula f) {
    switch (f) {
        case bounds::Formula::SHORT_EDGE_EXPECTED:
            return "short_edge_count";
        case bounds::Formula::SNAKE_CHAIN_SECTION6:
        case bounds::Formula::SNAKE_BALL_LEMMA1:
            return "failure_no_short_rate";
        default:
            return nullptr;
    }
}

void require_matching(const McStats& stats, const bounds::LogBound& b) {
    if (b.n != stats.n || b.r != stats.r)
        throw std::invalid_argument("bound evaluated at different (n, r) than the experiment");
    if (b.p) {
        const double diff = std::fabs(*b.p - stats.p);
        if (diff > 1e-12 * std::max(1.0, std::fabs(stats.p)))
            throw std::invalid_argument("bound evaluated at a different p than the experiment");
    }
    if (b.log_num_edges) {
        const double expected = std::log(static_cast<double>(stats.num_edges));
        if (std::fabs(*b.log_num_edges - expected) > 1e-9 * std::max(1.0, std::fabs(expected)))
            throw std::invalid_argument(
                "bound evaluated at a different edge count than the experiment");
    }
}

}  // namespace

ComparisonReport summarize(const McStats& stats, const std::vector<bounds::LogBound>& bound_list) {
    const std::vector<TrackedStat> tracked = {
        {"success_rate", stats.success_rate(), stats.success_stderr()},
        {"short_edge_count", stats.short_edge_count.mean(stats.trials),
         stats.short_edge_count.stderr_of_mean(stats.trials)},
        {"failing_edge_count", stats.failing_edge_count.mean(stats.trials),
         stats.failing_edge_count.stderr_of_mean(stats.trials)},
        {"failure_no_short_rate", stats.failure_no_short_rate(),
         stats.failure_no_short_stderr()},
    };

    ComparisonReport report;
    std::vector<char> used(tracked.size(), 0);
    for (const auto& stat : tracked)
        report.rows.push_back(ComparisonRow{stat.name, stat.mean, stat.stderr_of_mean,
                                            std::nullopt, "n/a"});

    for (const auto& bound : bound_list) {
        const char* target = stat_for_formula(bound.id);
        if (target == nullptr)
            throw std::invalid_argument("no tracked statistic matches formula " +
                                        bounds::formula_name(bound.id));
        require_matching(stats, bound);
        std::size_t idx = 0;
        while (idx < tracked.size() && tracked[idx].name != target)
            ++idx;
        ComparisonRow row{tracked[idx].name, tracked[idx].mean, tracked[idx].stderr_of_mean,
                          bound.log_value, ""};
        const double limit = std::exp(bound.log_value) + 5.0 * row.stderr_of_mean;
        row.verdict = row.mean > limit ? "exceeds bound" : "within bound";
        if (row.verdict == "exceeds bound")
            report.any_violation = true;
        if (!used[idx]) {
            report.rows[idx] = row;  // attach to the base row
            used[idx] = 1;
        } else {
            report.rows.push_back(row);  // second bound for the same statistic
        }
    }
    return report;
}

std::string mc_csv_header() {
    return "name,mean,stderr,bound_log,verdict";
}

std::string mc_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << mc_csv_header() << '\n';
    out.precision(17);
    for (const auto& row : report.rows) {
        out << row.name << ',' << row.mean << ',' << row.stderr_of_mean << ',';
        if (row.bound_log)
            out << *row.bound_log;
        out << ',' << row.verdict << '\n';
    }
    return out.str();
}

std::string mc_json(const McStats& stats, const ComparisonReport& report) {
    nlohmann::json j;
    j["config"] = {{"n", stats.n},
                   {"r", stats.r},
                   {"p", stats.p},
                   {"edges", stats.num_edges},
                   {"master_seed", stats.master_seed},
                   {"trials", stats.trials},
                   {"failure_record_cap", stats.failure_record_cap}};
    j["totals"] = {{"successes", stats.successes},
                   {"short_trials", stats.short_trials},
                   {"snake_attempts", stats.snake_attempts},
                   {"snake_verified", stats.snake_verified},
                   {"inconsistencies", stats.inconsistencies}};
    j["success"] = {{"rate", stats.success_rate()},
                    {"stderr", stats.success_stderr()},
                    {"wilson_low", stats.wilson_low()},
                    {"wilson_high", stats.wilson_high()}};
    j["short_edge_count"] = {{"mean", stats.short_edge_count.mean(stats.trials)},
                             {"stderr", stats.short_edge_count.stderr_of_mean(stats.trials)}};
    j["failing_edge_count"] = {{"mean", stats.failing_edge_count.mean(stats.trials)},
                               {"stderr", stats.failing_edge_count.stderr_of_mean(stats.trials)}};
    j["failure_no_short"] = {{"rate", stats.failure_no_short_rate()},
                             {"stderr", stats.failure_no_short_stderr()}};
    j["failure_records"] = nlohmann::json::array();
    for (const auto& rec : stats.failure_records)
        j["failure_records"].push_back({{"trial", rec.trial},
                                        {"seed", rec.seed},
                                        {"failing_edge", rec.failing_edge},
                                        {"had_short_edge", rec.had_short_edge},
                                        {"snake_verified", rec.snake_verified}});
    j["comparison"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json jr = {{"name", row.name},
                             {"mean", row.mean},
                             {"stderr", row.stderr_of_mean},
                             {"verdict", row.verdict}};
        if (row.bound_log)
            jr["bound_log"] = *row.bound_log;
        j["comparison"].push_back(jr);
    }
    return j.dump(2) + "\n";
}

}  // namespace panchroma::experiments
