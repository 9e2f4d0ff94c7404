#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "panchroma/bounds.hpp"
#include "panchroma/coloring.hpp"
#include "panchroma/conflict.hpp"
#include "panchroma/experiments.hpp"
#include "panchroma/hypergraph.hpp"
#include "panchroma/lemmas.hpp"
#include "panchroma/oracle.hpp"
#include "panchroma/partition.hpp"
#include "panchroma/trace_io.hpp"

namespace {

using namespace panchroma;

constexpr const char* SYNOPSIS =
    "usage: panchroma {gen|color|analyze|mc|oracle|bounds|verify-lemmas} [options]\n"
    "Run 'panchroma --help' or 'panchroma <subcommand> --help' for details.\n";

// Thrown for well-formed flags carrying unparseable values; exits 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::domain_error("cannot open output file: " + path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::domain_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double parse_p_value(const std::string& text) {
    try {
        return static_cast<double>(oracle::parse_rational(text));
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("bad value for --p: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad value for ") + flag + ": '" + item +
                             "' is not an integer");
        }
    }
    if (out.empty())
        throw UsageError(std::string("empty list for ") + flag);
    return out;
}

// ---------------------------------------------------------------- gen

struct GenOpts {
    int n = 0;
    int vertices = 0;
    int edges = 0;
    std::uint64_t seed = 0;
    std::string output;
};

void run_gen(const GenOpts& o) {
    const Hypergraph h = random_uniform(o.n, o.vertices, o.edges, o.seed);
    emit(write_hg_string(h), o.output);
}

// ---------------------------------------------------------------- color

struct ColorOpts {
    std::string input;
    int r = 2;
    std::string p_text;
    std::uint64_t seed = 0;
    std::string output;
};

void run_color(const ColorOpts& o) {
    const Hypergraph h = read_hg_file(o.input);
    PartitionParams params;
    TraceMeta meta;
    meta.seed = o.seed;
    meta.n = h.n;
    if (o.p_text.empty()) {
        params = params_from_formula(h.n, o.r);
        meta.mode = "formula";
    } else {
        params = params_override(o.r, parse_p_value(o.p_text));
        meta.mode = "override";
    }
    const WeightAssignment weights = assign_weights(h, o.seed);
    const ColoringTrace trace = run_coloring(h, params, weights);
    emit(trace_to_json(trace, meta), o.output);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
    std::string input;
    std::string trace_path;
    int edge = -1;  // -1: lowest-index failing edge
    std::string format = "text";
    std::string output;
};

void run_analyze(const AnalyzeOpts& o) {
    const Hypergraph h = read_hg_file(o.input);
    const TraceWithMeta loaded = trace_from_json(slurp(o.trace_path));
    const ColoringTrace& trace = loaded.trace;
    if (static_cast<int>(trace.labels.size()) != h.num_vertices)
        throw std::domain_error("trace does not color this hypergraph");

    const ShortEdgeReport shorts = find_short_edges(h, trace.r, trace.labels);
    const PanchromaticCheck check = is_panchromatic(h, trace);

    std::optional<SnakeBall> ball;
    bool verified = false;
    if (!check.ok && shorts.empty()) {
        const int start = o.edge >= 0 ? o.edge : check.failing.front().first;
        ball = extract_snake_ball(h, trace, start);
        verified = verify_snake_ball(h, trace, *ball).ok;
    }

    const auto condition_name = [](const ShortEdgeEntry& e) {
        const int big = e.missing_upper ? e.index + 1 : e.index;
        return "Delta" + std::to_string(big) + "+delta" + std::to_string(e.index);
    };

    if (o.format == "json") {
        nlohmann::json j;
        j["panchromatic"] = check.ok;
        j["short_edges"] = nlohmann::json::array();
        for (const auto& entry : shorts.entries)
            j["short_edges"].push_back(
                {{"edge", entry.edge}, {"i", entry.index}, {"missing", condition_name(entry)}});
        j["failing"] = nlohmann::json::array();
        for (const auto& [edge, color] : check.failing)
            j["failing"].push_back({{"edge", edge}, {"missing_color", color}});
        if (ball) {
            j["snake_ball"] = nlohmann::json::parse(snake_ball_to_json(*ball));
            j["snake_verified"] = verified;
        } else {
            j["snake_ball"] = nullptr;
        }
        emit(j.dump(2) + "\n", o.output);
        return;
    }

    std::ostringstream out;
    out << "panchromatic: " << (check.ok ? "yes" : "no") << "\n";
    out << "short edges: " << shorts.entries.size() << "\n";
    for (const auto& entry : shorts.entries)
        out << "  edge " << entry.edge << " misses " << condition_name(entry) << "\n";
    for (const auto& [edge, color] : check.failing)
        out << "failing: edge " << edge << " misses color " << color << "\n";
    if (ball) {
        out << "snake ball: edges [";
        for (std::size_t i = 0; i < ball->edges.size(); ++i)
            out << (i ? " " : "") << ball->edges[i];
        out << "] links [";
        for (std::size_t i = 0; i < ball->links.size(); ++i)
            out << (i ? " " : "") << ball->links[i];
        out << "] verified: " << (verified ? "yes" : "no") << "\n";
    }
    emit(out.str(), o.output);
}

// ---------------------------------------------------------------- mc

struct McOpts {
    std::string input;
    int r = 2;
    std::string p_text;
    long long trials = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    int cap = 100;
    bool no_bounds = false;
    std::string format = "text";
    std::string output;
};

int run_mc(const McOpts& o) {
    experiments::ExperimentConfig cfg;
    cfg.h = read_hg_file(o.input);
    cfg.r = o.r;
    if (!o.p_text.empty())
        cfg.p_override = parse_p_value(o.p_text);
    cfg.trials = o.trials;
    cfg.master_seed = o.seed;
    cfg.failure_record_cap = o.cap;
    cfg.threads = o.threads;

    const experiments::McStats stats = experiments::run_experiment(cfg);

    std::vector<bounds::LogBound> bound_list;
    if (!o.no_bounds && cfg.h.num_edges() > 0) {
        bound_list.push_back(bounds::short_edge_expected_bound(
            stats.n, stats.r, stats.p, static_cast<double>(stats.num_edges)));
        if (stats.n >= 3) {  // the chain bound is only defined for n >= 3
            bounds::BoundParams bp;
            bp.n = stats.n;
            bp.r = stats.r;
            bp.p = stats.p;
            bp.num_edges = static_cast<double>(stats.num_edges);
            bp.check_applicability = false;  // fixtures sit far below the asymptotic regime
            bound_list.push_back(bounds::eval_bound(bounds::Formula::SNAKE_CHAIN_SECTION6, bp));
        }
    }
    const experiments::ComparisonReport report = experiments::summarize(stats, bound_list);

    if (o.format == "json") {
        emit(experiments::mc_json(stats, report), o.output);
    } else if (o.format == "csv") {
        emit(experiments::mc_csv(report), o.output);
    } else {
        std::ostringstream out;
        out << "trials: " << stats.trials << "  successes: " << stats.successes << "\n";
        out << "success rate: " << fmt(stats.success_rate()) << " +- "
            << fmt(stats.success_stderr()) << "  wilson95 [" << fmt(stats.wilson_low()) << ", "
            << fmt(stats.wilson_high()) << "]\n";
        out << "short-edge trials: " << stats.short_trials
            << "  snake attempts: " << stats.snake_attempts
            << "  snake verified: " << stats.snake_verified
            << "  inconsistencies: " << stats.inconsistencies << "\n";
        for (const auto& row : report.rows) {
            out << row.name << ": mean " << fmt(row.mean) << " +- " << fmt(row.stderr_of_mean);
            if (row.bound_log)
                out << "  bound_log " << fmt(*row.bound_log);
            out << "  [" << row.verdict << "]\n";
        }
        emit(out.str(), o.output);
    }
    return (report.any_violation || stats.inconsistencies > 0) ? 1 : 0;
}

// ---------------------------------------------------------------- oracle

struct OracleOpts {
    std::string op;
    std::string input;
    int r = 2;
    std::string p_text;
    int edge = 0;
    std::string tuple_text;
    std::string output;
};

int run_oracle(const OracleOpts& o) {
    const Hypergraph h = read_hg_file(o.input);
    if (o.op == "exists") {
        const oracle::PanchromaticWitness w = oracle::panchromatic_exists(h, o.r);
        std::ostringstream out;
        if (w.exists) {
            out << "exists:";
            for (int c : w.coloring)
                out << ' ' << c;
            out << "\n";
        } else {
            out << "none\n";
        }
        emit(out.str(), o.output);
        return 0;
    }

    oracle::BigRational p;
    try {
        p = oracle::parse_rational(o.p_text);
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("bad value for --p: ") + e.what());
    }

    oracle::RationalProbability result;
    if (o.op == "success") {
        result = oracle::exact_success_probability(h, o.r, p);
    } else {
        oracle::EventSpec event;
        if (o.op == "failure") {
            event.kind = oracle::EventKind::failure;
        } else if (o.op == "short") {
            event.kind = oracle::EventKind::edge_is_short;
            event.edge = o.edge;
        } else if (o.op == "snake") {
            event.kind = oracle::EventKind::snake_ball;
            if (o.tuple_text.empty())
                throw UsageError("oracle snake requires --tuple");
            event.tuple = parse_int_list(o.tuple_text, "--tuple");
        } else {
            throw UsageError("unknown oracle operation: " + o.op);
        }
        result = oracle::exact_event_probability(h, o.r, p, event);
    }
    emit(result.fraction() + "\n" + result.decimal() + "\n", o.output);
    return 0;
}

// ---------------------------------------------------------------- bounds

struct BoundsOpts {
    std::string formula;
    long long n = 0;
    int r = 0;
    std::string p_text;
    double edges = -1;
    double log_edges = std::numeric_limits<double>::quiet_NaN();
    double c = 1.0;
    bool local = false;
    bool no_applicability = false;
    std::string overlap_text;
    std::string intersections_text;
    bool certificate = false;
    bool thm2 = false;
    long long degree = -1;
    double log_degree = std::numeric_limits<double>::quiet_NaN();
    std::string format = "csv";
    std::string output;
};

int run_bounds(const BoundsOpts& o) {
    std::ostringstream out;
    out.precision(17);

    if (o.certificate) {
        bounds::Theorem1Certificate cert;
        if (!std::isnan(o.log_edges))
            cert = bounds::theorem1_certificate_log(o.n, o.r, o.log_edges);
        else if (o.edges >= 0)
            cert = bounds::theorem1_certificate(o.n, o.r, o.edges);
        else
            cert = bounds::theorem1_certificate_log(o.n, o.r,
                                                    bounds::theorem1_threshold_log(o.n, o.r));
        out << "n: " << cert.n << "\nr: " << cert.r << "\np: " << fmt(cert.p) << "\n";
        out << "log_num_edges: " << fmt(cert.log_num_edges) << "\n";
        out << "log_threshold: " << fmt(cert.log_threshold) << "\n";
        out << "short_expected_log: " << fmt(cert.short_expected_log) << "\n";
        out << "short_bound: " << fmt(cert.short_bound) << "\n";
        out << "snake_bound_log: " << fmt(cert.snake_bound_log) << "\n";
        out << "snake_bound: " << fmt(cert.snake_bound) << "\n";
        out << "success_lower: " << fmt(cert.success_lower) << "\n";
        out << "printed_slack: " << fmt(cert.printed_slack) << "\n";
        emit(out.str(), o.output);
        return 0;
    }

    if (o.thm2) {
        bounds::Theorem2Condition cond;
        if (!std::isnan(o.log_degree))
            cond = bounds::theorem2_condition_log(o.n, o.r, o.log_degree);
        else if (o.degree >= 0)
            cond = bounds::theorem2_condition(o.n, o.r, o.degree);
        else
            cond = bounds::theorem2_condition_log(o.n, o.r,
                                                  bounds::theorem2_threshold_log(o.n, o.r));
        out << "n: " << cond.n << "\nr: " << cond.r << "\np: " << fmt(cond.p) << "\n";
        out << "log_degree: " << fmt(cond.log_degree) << "\n";
        out << "snake_sum: " << fmt(cond.snake_sum) << " (log " << fmt(cond.log_snake_sum)
            << ")\n";
        out << "short_sum: " << fmt(cond.short_sum) << " (log " << fmt(cond.log_short_sum)
            << ")\n";
        out << "ok: " << (cond.ok ? "yes" : "no") << "\n";
        emit(out.str(), o.output);
        return 0;
    }

    if (o.formula.empty())
        throw UsageError("bounds requires --formula (or --certificate / --thm2)");
    bounds::Formula f;
    try {
        f = bounds::parse_formula(o.formula);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    bounds::BoundParams params;
    params.n = o.n;
    params.r = o.r;
    params.c = o.c;
    if (!o.p_text.empty())
        params.p = parse_p_value(o.p_text);
    if (o.edges >= 0)
        params.num_edges = o.edges;
    if (!std::isnan(o.log_edges))
        params.log_num_edges = o.log_edges;
    params.local_variant = o.local;
    params.check_applicability = !o.no_applicability;
    if (!o.overlap_text.empty() || !o.intersections_text.empty()) {
        bounds::SnakeBallOverlap overlap;
        if (!o.overlap_text.empty())
            overlap.s_values = parse_int_list(o.overlap_text, "--overlap");
        if (!o.intersections_text.empty())
            for (int v : parse_int_list(o.intersections_text, "--intersections"))
                overlap.consecutive_intersections.push_back(v);
        params.overlap = overlap;
    }

    const bounds::LogBound b = bounds::eval_bound(f, params);
    if (o.format == "text") {
        out << "formula: " << bounds::formula_name(b.id) << "\n";
        out << "n: " << b.n << "\nr: " << b.r << "\n";
        if (!b.extra_params.empty())
            out << "extra: " << b.extra_params << "\n";
        out << "log_value: " << fmt(b.log_value) << "\n";
        out << "value: " << bounds::sci_notation(b.log_value) << "\n";
        if (b.up_to_constant)
            out << "note: stated up to an unspecified constant factor\n";
    } else {
        out << bounds::csv_header() << "\n" << bounds::csv_row(b) << "\n";
    }
    emit(out.str(), o.output);
    return 0;
}

// ---------------------------------------------------------------- verify-lemmas

struct VerifyOpts {
    std::string suite = "all";
    std::uint64_t seed = 2024;
    std::string format = "csv";
    std::string output;
};

int run_verify(const VerifyOpts& o) {
    lemmas::SweepReport report;
    if (o.suite == "all")
        report = lemmas::run_all_sweeps();
    else if (o.suite == "lemma2")
        report = lemmas::lemma2_sweep(o.seed);
    else if (o.suite == "injection")
        report = lemmas::injection_sweep();
    else if (o.suite == "lemma3")
        report = lemmas::lemma3_sweep();
    else if (o.suite == "lemma4")
        report = lemmas::lemma4_sweep(o.seed);
    else if (o.suite == "corollary")
        report = lemmas::corollary_sweep();
    else
        throw UsageError("unknown suite: " + o.suite +
                         " (expected all|lemma2|injection|lemma3|lemma4|corollary)");

    std::ostringstream out;
    if (o.format == "text") {
        long long ok = 0;
        for (const auto& row : report.rows)
            if (row.ok)
                ++ok;
        out << "checked " << report.rows.size() << " inequalities, " << ok << " ok\n";
        for (const auto& row : report.rows)
            if (!row.ok)
                out << "FAILED " << row.lemma << " " << row.params << " lhs " << fmt(row.lhs)
                    << " rhs " << fmt(row.rhs) << "\n";
        out << (report.all_ok ? "all ok\n" : "FAILURES PRESENT\n");
    } else {
        out << lemmas::sweep_csv_header() << "\n";
        for (const auto& row : report.rows)
            out << lemmas::sweep_csv_row(row) << "\n";
    }
    emit(out.str(), o.output);
    return report.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"panchromatic interval-coloring toolkit"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* sub_gen = app.add_subcommand("gen", "generate a random uniform hypergraph");
    sub_gen->add_option("--n", gen.n, "edge size (uniformity)")->required();
    sub_gen->add_option("--vertices", gen.vertices, "number of vertices")->required();
    sub_gen->add_option("--edges", gen.edges, "number of edges")->required();
    sub_gen->add_option("--seed", gen.seed, "generator seed")->required();
    sub_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

    ColorOpts color;
    auto* sub_color = app.add_subcommand("color", "run one traced coloring");
    sub_color->add_option("--input", color.input, "hypergraph file")->required();
    sub_color->add_option("--r", color.r, "number of colors")->required();
    sub_color->add_option("--p", color.p_text, "override p (rational or decimal)");
    sub_color->add_option("--seed", color.seed, "weight seed");
    sub_color->add_option("-o,--output", color.output, "output file (default stdout)");

    AnalyzeOpts analyze;
    auto* sub_analyze = app.add_subcommand("analyze", "short edges + snake ball of a trace");
    sub_analyze->add_option("--input", analyze.input, "hypergraph file")->required();
    sub_analyze->add_option("--trace", analyze.trace_path, "trace JSON file")->required();
    sub_analyze->add_option("--edge", analyze.edge, "failing edge to start from");
    sub_analyze->add_option("--format", analyze.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub_analyze->add_option("-o,--output", analyze.output, "output file (default stdout)");

    McOpts mc;
    auto* sub_mc = app.add_subcommand("mc", "Monte Carlo experiment");
    sub_mc->add_option("--input", mc.input, "hypergraph file")->required();
    sub_mc->add_option("--r", mc.r, "number of colors")->required();
    sub_mc->add_option("--p", mc.p_text, "override p (rational or decimal)");
    sub_mc->add_option("--trials", mc.trials, "trial count")->required();
    sub_mc->add_option("--seed", mc.seed, "master seed");
    sub_mc->add_option("--threads", mc.threads, "worker threads (0 = auto)");
    sub_mc->add_option("--cap", mc.cap, "failure record cap");
    sub_mc->add_flag("--no-bounds", mc.no_bounds, "skip analytic bound comparison");
    sub_mc->add_option("--format", mc.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub_mc->add_option("-o,--output", mc.output, "output file (default stdout)");

    OracleOpts orc;
    auto* sub_oracle = app.add_subcommand("oracle", "exact probabilities on tiny instances");
    sub_oracle->add_option("op", orc.op, "success|failure|short|snake|exists")
        ->required()
        ->check(CLI::IsMember({"success", "failure", "short", "snake", "exists"}));
    sub_oracle->add_option("--input", orc.input, "hypergraph file")->required();
    sub_oracle->add_option("--r", orc.r, "number of colors")->required();
    sub_oracle->add_option("--p", orc.p_text, "exact p, e.g. 1/5");
    sub_oracle->add_option("--edge", orc.edge, "edge index (short)");
    sub_oracle->add_option("--tuple", orc.tuple_text, "ordered edge tuple, e.g. 0,1 (snake)");
    sub_oracle->add_option("-o,--output", orc.output, "output file (default stdout)");

    BoundsOpts bnd;
    auto* sub_bounds = app.add_subcommand("bounds", "closed-form bound evaluation");
    sub_bounds->add_option("--formula", bnd.formula, "formula id (see docs)");
    sub_bounds->add_option("--n", bnd.n, "uniformity n")->required();
    sub_bounds->add_option("--r", bnd.r, "number of colors")->required();
    sub_bounds->add_option("--p", bnd.p_text, "p (rational or decimal)");
    sub_bounds->add_option("--edges", bnd.edges, "edge count");
    sub_bounds->add_option("--log-edges", bnd.log_edges, "ln of edge count");
    sub_bounds->add_option("--c", bnd.c, "scale for up-to-constant formulas");
    sub_bounds->add_flag("--local", bnd.local, "local (edge-degree) variant");
    sub_bounds->add_flag("--no-applicability", bnd.no_applicability,
                         "evaluate outside the stated applicability regime");
    sub_bounds->add_option("--overlap", bnd.overlap_text, "s(v) multiset, e.g. 2,2,3");
    sub_bounds->add_option("--intersections", bnd.intersections_text,
                           "consecutive |C_i cap C_i+1| list");
    sub_bounds->add_flag("--certificate", bnd.certificate,
                         "success-probability certificate at an edge-count threshold");
    sub_bounds->add_flag("--thm2", bnd.thm2, "degree-threshold quarter condition");
    sub_bounds->add_option("--degree", bnd.degree, "max edge degree D (thm2)");
    sub_bounds->add_option("--log-degree", bnd.log_degree, "ln D (thm2)");
    sub_bounds->add_option("--format", bnd.format, "csv|text")
        ->check(CLI::IsMember({"csv", "text"}));
    sub_bounds->add_option("-o,--output", bnd.output, "output file (default stdout)");

    VerifyOpts ver;
    auto* sub_verify = app.add_subcommand("verify-lemmas", "inequality sweeps");
    sub_verify->add_option("--suite", ver.suite, "all|lemma2|injection|lemma3|lemma4|corollary");
    sub_verify->add_option("--seed", ver.seed, "sweep seed");
    sub_verify->add_option("--format", ver.format, "csv|text")
        ->check(CLI::IsMember({"csv", "text"}));
    sub_verify->add_option("-o,--output", ver.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << SYNOPSIS;
        return 2;
    }

    try {
        if (sub_gen->parsed()) {
            run_gen(gen);
            return 0;
        }
        if (sub_color->parsed()) {
            run_color(color);
            return 0;
        }
        if (sub_analyze->parsed()) {
            run_analyze(analyze);
            return 0;
        }
        if (sub_mc->parsed())
            return run_mc(mc);
        if (sub_oracle->parsed())
            return run_oracle(orc);
        if (sub_bounds->parsed())
            return run_bounds(bnd);
        if (sub_verify->parsed())
            return run_verify(ver);
        std::cerr << SYNOPSIS;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << SYNOPSIS;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
