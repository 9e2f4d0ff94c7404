#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "panchroma/hypergraph.hpp"

namespace panchroma::bounds {

inline constexpr double NEG_INF = -std::numeric_limits<double>::infinity();

// ln(e^a + e^b) without overflow; handles -inf operands.
double logsumexp(double a, double b);

// ln C(m, k) for real m supplied as ln m; exact via log-gamma when m is
// moderate, asymptotic (error far below 1e-12) when m is astronomically
// large. Returns NEG_INF when the falling factorial hits a nonpositive
// factor (e.g. C(1,2) = 0).
double log_choose(double log_m, long long k);

enum class Formula {
    ERDOS_LOVASZ_1975,
    KOSTOCHKA_LOWER,
    KOSTOCHKA_UPPER,
    ROZ_SHAB_LOWER,
    ROZ_SHAB_UPPER,
    CHERKASHIN_LOWER,
    THM1_LOWER,
    COROLLARY_LOWER,
    THM2_LOCAL_LOWER,
    EL_LOCAL_DEGREE,
    SHORT_EDGE_EXPECTED,
    SNAKE_BALL_LEMMA1,
    SNAKE_CHAIN_SECTION6,
};

std::string formula_name(Formula f);
Formula parse_formula(const std::string& name);
std::vector<Formula> all_formulas();

// Per-edge-tuple overlap data: the multiset of per-vertex overlap counts
// s(v) >= 2, and the consecutive intersection sizes |C_i cap C_{i+1}|.
struct SnakeBallOverlap {
    std::vector<int> s_values;
    std::vector<long long> consecutive_intersections;
};

SnakeBallOverlap make_overlap(const Hypergraph& h, const std::vector<int>& tuple);

// Double-counting identity for a concrete tuple:
// sum over pairs |C_i cap C_j| equals sum over vertices C(s(v), 2).
struct OverlapIdentity {
    long long pair_sum = 0;
    long long vertex_sum = 0;
    bool ok = true;
};
OverlapIdentity overlap_identity(const Hypergraph& h, const std::vector<int>& tuple);

struct BoundParams {
    long long n = 0;
    int r = 0;
    double c = 1.0;  // scale for the formulas stated only up to a constant
    std::optional<double> p;
    std::optional<double> num_edges;      // linear edge count
    std::optional<double> log_num_edges;  // ln of edge count (astronomic counts)
    std::optional<SnakeBallOverlap> overlap;
    bool local_variant = false;  // ROZ_SHAB_LOWER: evaluate the edge-degree form
    bool check_applicability = true;
};

struct LogBound {
    Formula id = Formula::ERDOS_LOVASZ_1975;
    long long n = 0;
    int r = 0;
    std::string extra_params;
    double log_value = NEG_INF;  // natural log; NEG_INF is the zero sentinel
    bool up_to_constant = false;
    std::optional<double> p;          // echoed when the formula consumed one
    std::optional<double> log_num_edges;
};

LogBound eval_bound(Formula f, const BoundParams& params);

LogBound short_edge_expected_bound(long long n, int r, double p, double num_edges);
LogBound short_edge_expected_bound_log(long long n, int r, double p, double log_num_edges);

LogBound snake_ball_probability_bound(long long n, int r, double p,
                                      const SnakeBallOverlap& overlap);

struct Theorem1Certificate {
    long long n = 0;
    int r = 0;
    double p = 0.0;
    double log_num_edges = NEG_INF;
    double log_threshold = NEG_INF;
    double short_bound = 0.0;        // 1/(10 r)
    double short_expected_log = NEG_INF;
    double snake_bound_log = NEG_INF;
    double snake_bound = 0.0;
    double success_lower = 0.0;      // 1 - short_bound - snake_bound
    double printed_slack = 0.0;      // 1 - 1/(10r) - (1/r)(r/(r-1))^2
};

Theorem1Certificate theorem1_certificate(long long n, int r, double num_edges);
Theorem1Certificate theorem1_certificate_log(long long n, int r, double log_num_edges);

// ln of the edge-count threshold (1/(20 r^2)) (n/ln n)^((r-1)/r) (r/(r-1))^n.
double theorem1_threshold_log(long long n, int r);
// ln of the degree threshold (1/(40 r^3)) (n/ln n)^((r-1)/r) (r/(r-1))^n.
double theorem2_threshold_log(long long n, int r);

struct LllGeneralResult {
    bool ok = false;
    double no_event_lower_bound = 0.0;  // product of (1 - x_i)
};
LllGeneralResult lll_general_check(const std::vector<double>& probs,
                                   const std::vector<std::vector<int>>& adjacency,
                                   const std::vector<double>& x);

struct LllQuarterResult {
    bool ok = false;
    double max_prob = 0.0;
    double max_neighborhood_sum = 0.0;
};
LllQuarterResult lll_quarter_check(const std::vector<double>& probs,
                                   const std::vector<std::vector<int>>& adjacency);

struct Theorem2Condition {
    long long n = 0;
    int r = 0;
    double p = 0.0;
    double log_degree = NEG_INF;
    double log_snake_sum = NEG_INF;  // neighborhood sum for a snake-ball event
    double log_short_sum = NEG_INF;  // neighborhood sum for a short-edge event
    double snake_sum = 0.0;
    double short_sum = 0.0;
    bool ok = false;  // both sums < 1/4
};
Theorem2Condition theorem2_condition(long long n, int r, long long max_degree);
Theorem2Condition theorem2_condition_log(long long n, int r, double log_degree);

// "a.b...e+NN" scientific rendering of exp(log_value); NEG_INF renders "0".
std::string sci_notation(double log_value);
double parse_sci_notation(const std::string& text);

std::string csv_header();
std::string csv_row(const LogBound& b);

}  // namespace panchroma::bounds
