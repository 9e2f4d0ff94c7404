#include "panchroma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "panchroma/partition.hpp"

namespace panchroma::bounds {

namespace {

constexpr double LN10 = 2.302585092994045684;

double log_ratio(int r) {  // ln(r/(r-1))
    return std::log1p(1.0 / (r - 1));
}

// 1 - ((1-p)/r + p/(r-1)), the probability mass outside one Delta+delta block.
double outside_block(int r, double p) {
    return 1.0 - (static_cast<double>(r) - 1.0 + p) / (static_cast<double>(r) * (r - 1));
}

void require_nr(long long n, int r, long long min_n) {
    if (r < 2)
        throw std::domain_error("formula requires r >= 2");
    if (n < min_n)
        throw std::domain_error("formula requires n >= " + std::to_string(min_n));
}

// r <= (n/(100 ln n))^(1/3), i.e. 100 r^3 ln n <= n.
bool cube_root_ok(long long n, int r, bool strict) {
    const double lhs = 100.0 * r * r * r * std::log(static_cast<double>(n));
    return strict ? lhs < static_cast<double>(n) : lhs <= static_cast<double>(n);
}

void require_cube_root(long long n, int r, bool strict) {
    if (!cube_root_ok(n, r, strict))
        throw std::domain_error("r exceeds (n/(100 ln n))^{1/3}");
}

double resolve_log_edges(const BoundParams& params) {
    if (params.log_num_edges)
        return *params.log_num_edges;
    if (params.num_edges) {
        if (*params.num_edges < 0.0)
            throw std::domain_error("num_edges must be nonnegative");
        return *params.num_edges == 0.0 ? NEG_INF : std::log(*params.num_edges);
    }
    throw std::domain_error("formula requires num_edges");
}

double resolve_p(const BoundParams& params) {
    if (params.p) {
        if (!(*params.p > 0.0) || !(*params.p < 1.0))
            throw std::domain_error("partition parameter p must lie in (0,1)");
        return *params.p;
    }
    const double p = compute_p(params.n, params.r);
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("derived p falls outside (0,1); supply an override");
    return p;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string overlap_extra(const SnakeBallOverlap& overlap) {
    std::ostringstream out;
    out << "s=";
    for (std::size_t i = 0; i < overlap.s_values.size(); ++i)
        out << (i ? "+" : "") << overlap.s_values[i];
    out << ";cuts=";
    for (std::size_t i = 0; i < overlap.consecutive_intersections.size(); ++i)
        out << (i ? "+" : "") << overlap.consecutive_intersections[i];
    return out.str();
}

}  // namespace

double logsumexp(double a, double b) {
    if (a == NEG_INF)
        return b;
    if (b == NEG_INF)
        return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double log_choose(double log_m, long long k) {
    if (k < 0)
        throw std::domain_error("log_choose requires k >= 0");
    if (k == 0)
        return 0.0;
    if (log_m == NEG_INF)
        return NEG_INF;
    if (log_m > 35.0) {
        // m > e^35: the falling factorial's relative corrections are below
        // k^2/m < 1e-12 and vanish against the leading term.
        return static_cast<double>(k) * log_m - std::lgamma(static_cast<double>(k) + 1.0);
    }
    double m = std::exp(log_m);
    // Callers feed integer counts through logs; snap the round-trip noise so
    // the falling factorial hits zero exactly at integer m (C(3,4) = 0).
    const double nearest = std::round(m);
    if (std::fabs(m - nearest) <= 1e-9 * std::max(1.0, m))
        m = nearest;
    double sum = 0.0;
    for (long long j = 0; j < k; ++j) {
        const double factor = m - static_cast<double>(j);
        if (factor <= 0.0)
            return NEG_INF;
        sum += std::log(factor);
    }
    return sum - std::lgamma(static_cast<double>(k) + 1.0);
}

std::string formula_name(Formula f) {
    switch (f) {
        case Formula::ERDOS_LOVASZ_1975: return "ERDOS_LOVASZ_1975";
        case Formula::KOSTOCHKA_LOWER: return "KOSTOCHKA_LOWER";
        case Formula::KOSTOCHKA_UPPER: return "KOSTOCHKA_UPPER";
        case Formula::ROZ_SHAB_LOWER: return "ROZ_SHAB_LOWER";
        case Formula::ROZ_SHAB_UPPER: return "ROZ_SHAB_UPPER";
        case Formula::CHERKASHIN_LOWER: return "CHERKASHIN_LOWER";
        case Formula::THM1_LOWER: return "THM1_LOWER";
        case Formula::COROLLARY_LOWER: return "COROLLARY_LOWER";
        case Formula::THM2_LOCAL_LOWER: return "THM2_LOCAL_LOWER";
        case Formula::EL_LOCAL_DEGREE: return "EL_LOCAL_DEGREE";
        case Formula::SHORT_EDGE_EXPECTED: return "SHORT_EDGE_EXPECTED";
        case Formula::SNAKE_BALL_LEMMA1: return "SNAKE_BALL_LEMMA1";
        case Formula::SNAKE_CHAIN_SECTION6: return "SNAKE_CHAIN_SECTION6";
    }
    throw std::domain_error("unknown formula id");
}

Formula parse_formula(const std::string& name) {
    for (Formula f : all_formulas())
        if (formula_name(f) == name)
            return f;
    throw std::domain_error("unknown formula id: " + name);
}

std::vector<Formula> all_formulas() {
    return {Formula::ERDOS_LOVASZ_1975, Formula::KOSTOCHKA_LOWER, Formula::KOSTOCHKA_UPPER,
            Formula::ROZ_SHAB_LOWER,    Formula::ROZ_SHAB_UPPER,  Formula::CHERKASHIN_LOWER,
            Formula::THM1_LOWER,        Formula::COROLLARY_LOWER, Formula::THM2_LOCAL_LOWER,
            Formula::EL_LOCAL_DEGREE,   Formula::SHORT_EDGE_EXPECTED,
            Formula::SNAKE_BALL_LEMMA1, Formula::SNAKE_CHAIN_SECTION6};
}

SnakeBallOverlap make_overlap(const Hypergraph& h, const std::vector<int>& tuple) {
    for (int e : tuple)
        if (e < 0 || e >= h.num_edges())
            throw std::domain_error("unknown tuple indices");
    SnakeBallOverlap overlap;
    std::map<int, int> count;
    for (int e : tuple)
        for (int v : h.edges[static_cast<std::size_t>(e)])
            ++count[v];
    for (const auto& [v, s] : count)
        if (s >= 2)
            overlap.s_values.push_back(s);
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        overlap.consecutive_intersections.push_back(
            edge_intersection_size(h, tuple[i], tuple[i + 1]));
    return overlap;
}

OverlapIdentity overlap_identity(const Hypergraph& h, const std::vector<int>& tuple) {
    for (int e : tuple)
        if (e < 0 || e >= h.num_edges())
            throw std::domain_error("unknown tuple indices");
    OverlapIdentity id;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            id.pair_sum += edge_intersection_size(h, tuple[i], tuple[j]);
    std::map<int, long long> count;
    for (int e : tuple)
        for (int v : h.edges[static_cast<std::size_t>(e)])
            ++count[v];
    for (const auto& [v, s] : count)
        if (s >= 2)
            id.vertex_sum += s * (s - 1) / 2;
    id.ok = id.pair_sum == id.vertex_sum;
    return id;
}

LogBound short_edge_expected_bound(long long n, int r, double p, double num_edges) {
    if (num_edges < 0.0)
        throw std::domain_error("num_edges must be nonnegative");
    return short_edge_expected_bound_log(n, r, p,
                                         num_edges == 0.0 ? NEG_INF : std::log(num_edges));
}

LogBound short_edge_expected_bound_log(long long n, int r, double p, double log_num_edges) {
    if (r < 2)
        throw std::domain_error("formula requires r >= 2");
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("partition parameter p must lie in (0,1)");
    LogBound b;
    b.id = Formula::SHORT_EDGE_EXPECTED;
    b.n = n;
    b.r = r;
    b.p = p;
    b.log_num_edges = log_num_edges;
    b.extra_params = "p=" + format_double(p) + ";logE=" + format_double(log_num_edges);
    if (log_num_edges == NEG_INF) {
        b.log_value = NEG_INF;
        return b;
    }
    b.log_value = std::log(2.0) + std::log(static_cast<double>(r - 1)) + log_num_edges +
                  static_cast<double>(n) * std::log(outside_block(r, p));
    return b;
}

LogBound snake_ball_probability_bound(long long n, int r, double p,
                                      const SnakeBallOverlap& overlap) {
    if (r < 2)
        throw std::domain_error("formula requires r >= 2");
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("partition parameter p must lie in (0,1)");
    const double denom = 1.0 - ((1.0 - p) / r + 2.0 * p / (r - 1));
    if (!(denom > 0.0))
        throw std::domain_error("(1-p)/r + 2p/(r-1) reaches 1: outside the bound's regime");

    LogBound b;
    b.id = Formula::SNAKE_BALL_LEMMA1;
    b.n = n;
    b.r = r;
    b.p = p;
    b.extra_params = "p=" + format_double(p) + ";" + overlap_extra(overlap);

    double log_value = (r - 1) * std::log(p / (r - 1)) -
                       (static_cast<double>(n - 2) * r + 2.0) * log_ratio(r) +
                       p * r / (static_cast<double>(r - 1) * (r - 1));
    for (int s : overlap.s_values) {
        if (s < 2 || s > r)
            throw std::domain_error("overlap count s(v) must lie in [2, r]");
        const double numer = 1.0 - s * (1.0 - p) / r;
        if (!(numer > 0.0))
            throw std::domain_error("s(v)(1-p)/r reaches 1: outside the bound's regime");
        log_value += std::log(numer) - s * std::log(denom);
    }
    for (long long cut : overlap.consecutive_intersections) {
        if (cut < 0)
            throw std::domain_error("intersection sizes must be nonnegative");
        if (cut == 0) {
            b.log_value = NEG_INF;
            return b;
        }
        log_value += std::log(static_cast<double>(cut));
    }
    b.log_value = log_value;
    return b;
}

double theorem1_threshold_log(long long n, int r) {
    require_nr(n, r, 3);
    const double nd = static_cast<double>(n);
    return -std::log(20.0) - 2.0 * std::log(static_cast<double>(r)) +
           (static_cast<double>(r - 1) / r) * (std::log(nd) - std::log(std::log(nd))) +
           nd * log_ratio(r);
}

double theorem2_threshold_log(long long n, int r) {
    require_nr(n, r, 3);
    const double nd = static_cast<double>(n);
    return -std::log(40.0) - 3.0 * std::log(static_cast<double>(r)) +
           (static_cast<double>(r - 1) / r) * (std::log(nd) - std::log(std::log(nd))) +
           nd * log_ratio(r);
}

LogBound eval_bound(Formula f, const BoundParams& params) {
    const long long n = params.n;
    const int r = params.r;
    LogBound b;
    b.id = f;
    b.n = n;
    b.r = r;
    const double nd = static_cast<double>(n);

    switch (f) {
        case Formula::ERDOS_LOVASZ_1975:
        case Formula::EL_LOCAL_DEGREE: {
            require_nr(n, r, 2);
            // ln 4 written as 2 ln 2 so that r = 2, n = 3 cancels to exactly 0.
            b.log_value = (nd - 1.0) * std::log(static_cast<double>(r)) -
                          2.0 * std::log(2.0) - nd * std::log(static_cast<double>(r - 1));
            return b;
        }
        case Formula::KOSTOCHKA_LOWER: {
            require_nr(n, r, 2);
            b.up_to_constant = true;
            b.extra_params = "c=" + format_double(params.c);
            b.log_value = params.c * nd / r - std::log(static_cast<double>(r));
            return b;
        }
        case Formula::KOSTOCHKA_UPPER: {
            require_nr(n, r, 2);
            b.up_to_constant = true;
            b.extra_params = "c=" + format_double(params.c);
            b.log_value = std::log(static_cast<double>(r)) + params.c * nd / r;
            return b;
        }
        case Formula::ROZ_SHAB_LOWER: {
            require_nr(n, r, 3);
            // The edge-count bound is stated for r < n/(2 ln n), the
            // edge-degree variant for r <= n/(2 ln n).
            const double r_limit = nd / (2.0 * std::log(nd));
            const bool applicable = params.local_variant
                                        ? static_cast<double>(r) <= r_limit
                                        : static_cast<double>(r) < r_limit;
            if (params.check_applicability && !applicable)
                throw std::domain_error("r exceeds n/(2 ln n)");
            const double tail = nd * log_ratio(r);
            if (params.local_variant) {
                b.extra_params = "variant=local";
                b.log_value = std::log((std::sqrt(11.0) - 3.0) / 4.0) -
                              std::log(static_cast<double>(r)) +
                              0.5 * (std::log(nd) - 2.0 * std::log(static_cast<double>(r - 1)) -
                                     std::log(std::log(nd))) +
                              tail;
            } else {
                b.log_value = -std::log(2.0 * r) +
                              0.5 * (std::log(nd) - 2.0 * std::log(static_cast<double>(r)) -
                                     std::log(std::log(nd))) +
                              tail;
            }
            return b;
        }
        case Formula::ROZ_SHAB_UPPER: {
            require_nr(n, r, 3);
            if (params.check_applicability &&
                !(static_cast<double>(r) < nd / (2.0 * std::log(nd))))
                throw std::domain_error("r exceeds n/(2 ln n)");
            b.up_to_constant = true;
            b.extra_params = "c=" + format_double(params.c);
            b.log_value = std::log(params.c) + 2.0 * std::log(nd) + nd * log_ratio(r) +
                          std::log(std::log(static_cast<double>(r)));
            return b;
        }
        case Formula::CHERKASHIN_LOWER: {
            require_nr(n, r, 2);
            if (params.check_applicability &&
                !(static_cast<double>(r) <= params.c * nd / std::log(nd)))
                throw std::domain_error("r exceeds c n/ln n");
            b.up_to_constant = true;
            b.extra_params = "c=" + format_double(params.c);
            const double first = 0.25 * std::log(nd) - 1.5 * std::log(static_cast<double>(r));
            const double second = -0.5 * std::log(nd);
            b.log_value = std::log(params.c) + std::max(first, second) + nd * log_ratio(r);
            return b;
        }
        case Formula::THM1_LOWER: {
            require_nr(n, r, 3);
            if (params.check_applicability)
                require_cube_root(n, r, /*strict=*/false);
            b.log_value = theorem1_threshold_log(n, r);
            return b;
        }
        case Formula::COROLLARY_LOWER: {
            require_nr(n, r, 3);
            if (params.check_applicability) {
                if (!(std::log(nd) < static_cast<double>(r)))
                    throw std::domain_error("r must exceed ln n");
                require_cube_root(n, r, /*strict=*/true);
            }
            b.up_to_constant = true;
            b.extra_params = "c=" + format_double(params.c);
            b.log_value = std::log(params.c) + std::log(nd) -
                          2.0 * std::log(static_cast<double>(r)) - std::log(std::log(nd)) +
                          nd / r + nd / (2.0 * static_cast<double>(r) * r);
            return b;
        }
        case Formula::THM2_LOCAL_LOWER: {
            require_nr(n, r, 3);
            if (params.check_applicability)
                require_cube_root(n, r, /*strict=*/true);
            b.log_value = theorem2_threshold_log(n, r);
            return b;
        }
        case Formula::SHORT_EDGE_EXPECTED:
            return short_edge_expected_bound_log(n, r, resolve_p(params),
                                                 resolve_log_edges(params));
        case Formula::SNAKE_BALL_LEMMA1: {
            SnakeBallOverlap overlap;
            if (params.overlap) {
                overlap = *params.overlap;
            } else {
                overlap.consecutive_intersections.assign(static_cast<std::size_t>(r - 1), 1);
            }
            return snake_ball_probability_bound(n, r, resolve_p(params), overlap);
        }
        case Formula::SNAKE_CHAIN_SECTION6: {
            require_nr(n, r, 3);
            const double p = resolve_p(params);
            const double log_edges = resolve_log_edges(params);
            b.p = p;
            b.log_num_edges = log_edges;
            b.extra_params = "p=" + format_double(p) + ";logE=" + format_double(log_edges);
            b.log_value = log_choose(log_edges, r) + (r - 1) * std::log(p / (r - 1)) -
                          static_cast<double>(n - 2) * r * log_ratio(r) +
                          r * std::log(20.0) + 2.0 * r * std::log(static_cast<double>(r)) -
                          static_cast<double>(r - 1);
            return b;
        }
    }
    throw std::domain_error("unknown formula id");
}

Theorem1Certificate theorem1_certificate(long long n, int r, double num_edges) {
    if (num_edges < 0.0)
        throw std::domain_error("num_edges must be nonnegative");
    return theorem1_certificate_log(n, r, num_edges == 0.0 ? NEG_INF : std::log(num_edges));
}

Theorem1Certificate theorem1_certificate_log(long long n, int r, double log_num_edges) {
    require_nr(n, r, 3);
    require_cube_root(n, r, /*strict=*/false);
    const double log_threshold = theorem1_threshold_log(n, r);
    if (!(log_num_edges <= log_threshold))
        throw std::domain_error(
            "num_edges exceeds the certified threshold (1/(20 r^2))(n/ln n)^((r-1)/r)(r/(r-1))^n");

    Theorem1Certificate cert;
    cert.n = n;
    cert.r = r;
    cert.p = compute_p(n, r);
    cert.log_num_edges = log_num_edges;
    cert.log_threshold = log_threshold;
    cert.short_bound = 1.0 / (10.0 * r);
    cert.short_expected_log =
        short_edge_expected_bound_log(n, r, cert.p, log_num_edges).log_value;

    BoundParams chain;
    chain.n = n;
    chain.r = r;
    chain.p = cert.p;
    chain.log_num_edges = log_num_edges;
    cert.snake_bound_log = eval_bound(Formula::SNAKE_CHAIN_SECTION6, chain).log_value;
    cert.snake_bound = cert.snake_bound_log == NEG_INF ? 0.0 : std::exp(cert.snake_bound_log);

    cert.success_lower = 1.0 - cert.short_bound - cert.snake_bound;
    const double ratio = static_cast<double>(r) / (r - 1);
    cert.printed_slack = 1.0 - 1.0 / (10.0 * r) - (ratio * ratio) / r;
    if (cert.success_lower < cert.printed_slack - 1e-12)
        throw std::logic_error("certificate slack check failed");
    return cert;
}

LllGeneralResult lll_general_check(const std::vector<double>& probs,
                                   const std::vector<std::vector<int>>& adjacency,
                                   const std::vector<double>& x) {
    const std::size_t m = probs.size();
    if (adjacency.size() != m || x.size() != m)
        throw std::invalid_argument("dimension mismatch");
    for (double xi : x)
        if (!(xi >= 0.0) || !(xi < 1.0))
            throw std::domain_error("each x_i must lie in [0,1)");
    LllGeneralResult result;
    result.ok = true;
    result.no_event_lower_bound = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        double rhs = x[i];
        for (int j : adjacency[i]) {
            if (j < 0 || static_cast<std::size_t>(j) >= m)
                throw std::invalid_argument("dimension mismatch");
            rhs *= 1.0 - x[static_cast<std::size_t>(j)];
        }
        if (probs[i] > rhs)
            result.ok = false;
        result.no_event_lower_bound *= 1.0 - x[i];
    }
    return result;
}

LllQuarterResult lll_quarter_check(const std::vector<double>& probs,
                                   const std::vector<std::vector<int>>& adjacency) {
    if (adjacency.size() != probs.size())
        throw std::invalid_argument("dimension mismatch");
    LllQuarterResult result;
    result.ok = true;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        result.max_prob = std::max(result.max_prob, probs[i]);
        double sum = 0.0;
        for (int j : adjacency[i]) {
            if (j < 0 || static_cast<std::size_t>(j) >= probs.size())
                throw std::invalid_argument("dimension mismatch");
            sum += probs[static_cast<std::size_t>(j)];
        }
        result.max_neighborhood_sum = std::max(result.max_neighborhood_sum, sum);
        if (probs[i] > 0.5 || sum > 0.25)
            result.ok = false;
    }
    return result;
}

Theorem2Condition theorem2_condition(long long n, int r, long long max_degree) {
    if (max_degree < 0)
        throw std::domain_error("max degree must be nonnegative");
    return theorem2_condition_log(
        n, r, max_degree == 0 ? NEG_INF : std::log(static_cast<double>(max_degree)));
}

Theorem2Condition theorem2_condition_log(long long n, int r, double log_degree) {
    if (r < 2)
        throw std::domain_error("theorem2_condition requires r >= 2");
    Theorem2Condition cond;
    cond.n = n;
    cond.r = r;
    cond.p = compute_p(n, r);
    if (!(cond.p > 0.0) || !(cond.p < 1.0))
        throw std::domain_error("derived p falls outside (0,1)");
    cond.log_degree = log_degree;

    const double log_dp1 = logsumexp(log_degree, 0.0);  // ln(D + 1)
    const double log_short_event = std::log(2.0) + std::log(static_cast<double>(r - 1)) +
                                   static_cast<double>(n) * std::log(outside_block(r, cond.p));
    const double log_snake_tail =
        (r - 1) * log_degree - static_cast<double>(n - 2) * r * log_ratio(r) +
        (r - 1) * std::log(cond.p / (r - 1)) + r * std::log(20.0) +
        2.0 * r * std::log(static_cast<double>(r)) - static_cast<double>(r - 1);

    const double log_r = std::log(static_cast<double>(r));
    cond.log_snake_sum = logsumexp(log_r + log_dp1 + log_short_event,
                                   std::log(2.0) + 2.0 * log_r + log_dp1 + log_snake_tail);
    cond.log_short_sum = logsumexp(log_dp1 + log_short_event,
                                   std::log(2.0) + log_r + log_dp1 + log_snake_tail);
    cond.snake_sum = cond.log_snake_sum == NEG_INF ? 0.0 : std::exp(cond.log_snake_sum);
    cond.short_sum = cond.log_short_sum == NEG_INF ? 0.0 : std::exp(cond.log_short_sum);
    const double log_quarter = std::log(0.25);
    cond.ok = cond.log_snake_sum < log_quarter && cond.log_short_sum < log_quarter;
    return cond;
}

std::string sci_notation(double log_value) {
    if (log_value == NEG_INF)
        return "0";
    if (std::isnan(log_value))
        throw std::domain_error("log value is not a number");
    const double log10_value = log_value / LN10;
    double exponent = std::floor(log10_value);
    double mantissa = std::pow(10.0, log10_value - exponent);
    if (mantissa >= 10.0) {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    if (mantissa < 1.0) {
        mantissa *= 10.0;
        exponent -= 1.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15fe%+03lld", mantissa,
                  static_cast<long long>(exponent));
    // Formatting can round 9.999... up to 10.000...; renormalize if it did.
    if (buf[0] == '1' && buf[1] == '0') {
        std::snprintf(buf, sizeof(buf), "%.15fe%+03lld", 1.0,
                      static_cast<long long>(exponent) + 1);
    }
    return buf;
}

double parse_sci_notation(const std::string& text) {
    if (text == "0")
        return NEG_INF;
    const auto e_pos = text.find('e');
    if (e_pos == std::string::npos)
        throw std::domain_error("malformed scientific notation: " + text);
    const double mantissa = std::stod(text.substr(0, e_pos));
    const long long exponent = std::stoll(text.substr(e_pos + 1));
    if (!(mantissa > 0.0))
        throw std::domain_error("malformed scientific notation: " + text);
    return std::log(mantissa) + static_cast<double>(exponent) * LN10;
}

std::string csv_header() { return "formula_id,n,r,extra_params,log_value,sci_notation"; }

std::string csv_row(const LogBound& b) {
    std::ostringstream out;
    out << formula_name(b.id) << ',' << b.n << ',' << b.r << ',' << b.extra_params << ',';
    if (b.log_value == NEG_INF)
        out << "-inf";
    else
        out << format_double(b.log_value);
    out << ',' << sci_notation(b.log_value);
    return out.str();
}

}  // namespace panchroma::bounds
