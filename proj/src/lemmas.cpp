#include "panchroma/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "panchroma/partition.hpp"
#include "panchroma/rng.hpp"

namespace panchroma::lemmas {

IntersectionMatrix zero_matrix(int r) {
    if (r < 2)
        throw std::domain_error("intersection matrix requires r >= 2");
    IntersectionMatrix m;
    m.r = r;
    m.x.assign(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(r), 0));
    return m;
}

IntersectionMatrix matrix_from_tuple(const Hypergraph& h, const std::vector<int>& tuple) {
    IntersectionMatrix m = zero_matrix(static_cast<int>(tuple.size()));
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            const long long size = edge_intersection_size(h, tuple[i], tuple[j]);
            m.x[i][j] = size;
            m.x[j][i] = size;
        }
    }
    return m;
}

void require_valid(const IntersectionMatrix& m) {
    if (m.r < 2 || static_cast<int>(m.x.size()) != m.r)
        throw std::invalid_argument("intersection matrix has wrong dimensions");
    for (int i = 0; i < m.r; ++i) {
        if (static_cast<int>(m.x[static_cast<std::size_t>(i)].size()) != m.r)
            throw std::invalid_argument("intersection matrix has wrong dimensions");
        for (int j = 0; j < m.r; ++j) {
            const long long v = m.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 0)
                throw std::invalid_argument("intersection matrix entries must be nonnegative");
            if (i == j && v != 0)
                throw std::invalid_argument("intersection matrix diagonal must be zero");
            if (v != m.x[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw std::invalid_argument("intersection matrix must be symmetric");
        }
    }
}

BigInt perm_sum_bruteforce(const IntersectionMatrix& m) {
    require_valid(m);
    if (m.r > 9)
        throw std::domain_error("perm_sum_bruteforce rejects r > 9");
    std::vector<int> perm(static_cast<std::size_t>(m.r));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        BigInt product = 1;
        for (int k = 0; k + 1 < m.r; ++k) {
            const long long factor = m.x[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]
                                        [static_cast<std::size_t>(perm[static_cast<std::size_t>(k + 1)])];
            if (factor == 0) {
                product = 0;
                break;
            }
            product *= factor;
        }
        total += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Lemma2Result lemma2_check(const IntersectionMatrix& m) {
    Lemma2Result result;
    result.lhs = perm_sum_bruteforce(m);
    BigInt pair_sum = 0;
    for (int i = 0; i < m.r; ++i)
        for (int j = i + 1; j < m.r; ++j)
            pair_sum += m.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    // lhs <= ((2S+r)/r)^r  iff  lhs * r^r <= (2S+r)^r, exactly in integers.
    BigInt rhs_num = 1;
    BigInt r_pow = 1;
    const BigInt base = 2 * pair_sum + m.r;
    for (int k = 0; k < m.r; ++k) {
        rhs_num *= base;
        r_pow *= m.r;
    }
    result.ok = result.lhs * r_pow <= rhs_num;
    result.lhs_value = static_cast<double>(result.lhs);
    result.rhs_value = std::pow(static_cast<double>(base) / m.r, m.r);
    return result;
}

std::vector<int> injection_map(const std::vector<int>& chain) {
    const int r = static_cast<int>(chain.size());
    if (r < 1)
        throw std::domain_error("chain must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(r) + 1, 0);
    for (int v : chain) {
        if (v < 1 || v > r || seen[static_cast<std::size_t>(v)])
            throw std::domain_error("chain is not a permutation of 1..r");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> selection(static_cast<std::size_t>(r), 0);
    for (int k = 0; k + 1 < r; ++k)
        selection[static_cast<std::size_t>(chain[static_cast<std::size_t>(k)] - 1)] =
            chain[static_cast<std::size_t>(k + 1)];
    return selection;
}

namespace {

double lemma_ratio(int r, double p, int s) {
    const double numer = 1.0 - s * (1.0 - p) / r;
    const double denom = 1.0 - ((1.0 - p) / r + 2.0 * p / (r - 1));
    if (!(denom > 0.0))
        throw std::domain_error("(1-p)/r + 2p/(r-1) reaches 1: outside the regime");
    if (!(numer > 0.0))
        throw std::domain_error("s(1-p)/r reaches 1: outside the regime");
    return numer / std::pow(denom, s);
}

void require_lemma3_regime(int r, double p, int s) {
    if (r < 3)
        throw std::domain_error("s range {2..r-1} requires r >= 3");
    if (s < 2 || s > r - 1)
        throw std::domain_error("s must lie in {2,...,r-1}");
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("p must lie in (0,1)");
    if (!(p * r < 0.01))
        throw std::domain_error("regime requires p r < 1/100");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

InequalityResult lemma3_check(int r, double p, int s) {
    require_lemma3_regime(r, p, s);
    InequalityResult result;
    result.lhs = lemma_ratio(r, p, s);
    result.rhs = std::exp(-static_cast<double>(s) * s / (20.0 * r * r));
    result.ok = result.lhs <= result.rhs;
    return result;
}

InequalityResult lemma4_check(int r, double p, const std::vector<int>& s_values,
                              const IntersectionMatrix& m) {
    require_valid(m);
    if (m.r != r)
        throw std::invalid_argument("matrix size does not match r");
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("p must lie in (0,1)");
    long long pair_sum = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            pair_sum += m.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    long long vertex_sum = 0;
    for (int s : s_values)
        vertex_sum += static_cast<long long>(s) * (s - 1) / 2;
    if (pair_sum != vertex_sum)
        throw std::domain_error("overlap multiset inconsistent with intersection matrix");

    double product = 1.0;
    for (int s : s_values) {
        require_lemma3_regime(r, p, s);
        product *= lemma_ratio(r, p, s);
    }
    InequalityResult result;
    result.lhs = product * static_cast<double>(perm_sum_bruteforce(m));
    result.rhs = std::exp(r * std::log(20.0) + 2.0 * r * std::log(static_cast<double>(r)) -
                          static_cast<double>(r - 1));
    result.ok = result.lhs <= result.rhs;
    return result;
}

CorollaryResult corollary_inequality_check(long long r) {
    if (r < 2)
        throw std::domain_error("corollary inequality requires r >= 2");
    CorollaryResult result;
    const double rd = static_cast<double>(r);
    result.lhs = 1.0 + 1.0 / (rd - 1.0);
    result.rhs = std::exp(1.0 / rd + 1.0 / (2.0 * rd * rd));
    result.log_margin = std::log1p(1.0 / (rd - 1.0)) - (1.0 / rd + 1.0 / (2.0 * rd * rd));
    result.ok = result.log_margin > 0.0;
    return result;
}

long long minimal_admissible_n(int r) {
    if (r < 2)
        throw std::domain_error("admissibility requires r >= 2");
    const auto admissible = [r](long long n) {
        return 100.0 * r * r * r * std::log(static_cast<double>(n)) <= static_cast<double>(n);
    };
    long long hi = 16;
    while (!admissible(hi))
        hi *= 2;
    long long lo = std::max<long long>(3, hi / 2);
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (admissible(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

void SweepReport::append(const SweepReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    all_ok = all_ok && other.all_ok;
}

SweepReport lemma2_sweep(std::uint64_t seed, int samples_per_r) {
    SweepReport report;
    Rng rng(seed);
    for (int r = 2; r <= 6; ++r) {
        for (int sample = 0; sample < samples_per_r; ++sample) {
            IntersectionMatrix m = zero_matrix(r);
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    const long long v = static_cast<long long>(rng.below(11));
                    m.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                    m.x[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
                }
            const Lemma2Result res = lemma2_check(m);
            SweepRow row;
            row.lemma = "lemma2";
            row.params = "r=" + std::to_string(r) + ";sample=" + std::to_string(sample);
            row.lhs = res.lhs_value;
            row.rhs = res.rhs_value;
            row.margin = res.rhs_value - res.lhs_value;
            row.ok = res.ok;
            report.rows.push_back(row);
            report.all_ok = report.all_ok && row.ok;
        }
    }
    return report;
}

SweepReport injection_sweep(int max_r) {
    SweepReport report;
    for (int r = 2; r <= max_r; ++r) {
        std::vector<int> chain(static_cast<std::size_t>(r));
        std::iota(chain.begin(), chain.end(), 1);
        std::set<std::vector<int>> images;
        long long total = 0;
        bool self_loop_free = true;
        do {
            const auto sel = injection_map(chain);
            for (int i = 1; i <= r; ++i)
                if (sel[static_cast<std::size_t>(i - 1)] == i)
                    self_loop_free = false;
            images.insert(sel);
            ++total;
        } while (std::next_permutation(chain.begin(), chain.end()));
        SweepRow row;
        row.lemma = "injection";
        row.params = "r=" + std::to_string(r);
        row.lhs = static_cast<double>(images.size());
        row.rhs = static_cast<double>(total);
        row.margin = 0.0;
        row.ok = static_cast<long long>(images.size()) == total && self_loop_free;
        report.rows.push_back(row);
        report.all_ok = report.all_ok && row.ok;
    }
    return report;
}

SweepReport lemma3_sweep(int r_lo, int r_hi) {
    SweepReport report;
    for (int r = r_lo; r <= r_hi; ++r) {
        const long long n = minimal_admissible_n(r);
        const double p = compute_p(n, r);
        for (int s = 2; s <= r - 1; ++s) {
            const InequalityResult res = lemma3_check(r, p, s);
            SweepRow row;
            row.lemma = "lemma3";
            row.params = "r=" + std::to_string(r) + ";s=" + std::to_string(s) +
                         ";n=" + std::to_string(n) + ";p=" + format_double(p);
            row.lhs = res.lhs;
            row.rhs = res.rhs;
            row.margin = res.rhs - res.lhs;
            row.ok = res.ok;
            report.rows.push_back(row);
            report.all_ok = report.all_ok && row.ok;
        }
    }
    return report;
}

SweepReport lemma4_sweep(std::uint64_t seed, int samples_per_r) {
    SweepReport report;
    for (int r = 2; r <= 6; ++r) {
        const long long n_admissible = minimal_admissible_n(r);
        const double p = compute_p(n_admissible, r);
        int produced = 0;
        std::uint64_t attempt = 0;
        while (produced < samples_per_r) {
            if (++attempt > 100000)
                throw std::logic_error("lemma4 sweep failed to generate configurations");
            const Hypergraph h =
                random_uniform(3, 3 * r, r, trial_seed(seed, (static_cast<std::uint64_t>(r) << 32) + attempt));
            std::vector<int> tuple(static_cast<std::size_t>(r));
            std::iota(tuple.begin(), tuple.end(), 0);
            std::map<int, int> count;
            for (int e : tuple)
                for (int v : h.edges[static_cast<std::size_t>(e)])
                    ++count[v];
            std::vector<int> s_values;
            bool in_regime = true;
            for (const auto& [v, s] : count) {
                if (s >= 2) {
                    if (s > r - 1) {
                        in_regime = false;
                        break;
                    }
                    s_values.push_back(s);
                }
            }
            if (!in_regime)
                continue;
            const IntersectionMatrix m = matrix_from_tuple(h, tuple);
            const InequalityResult res = lemma4_check(r, p, s_values, m);
            SweepRow row;
            row.lemma = "lemma4";
            row.params = "r=" + std::to_string(r) + ";sample=" + std::to_string(produced) +
                         ";overlaps=" + std::to_string(s_values.size()) +
                         ";p=" + format_double(p);
            row.lhs = res.lhs;
            row.rhs = res.rhs;
            row.margin = res.rhs - res.lhs;
            row.ok = res.ok;
            report.rows.push_back(row);
            report.all_ok = report.all_ok && row.ok;
            ++produced;
        }
    }
    return report;
}

SweepReport corollary_sweep(long long r_max) {
    SweepReport report;
    std::vector<long long> grid;
    double value = 2.0;
    while (static_cast<long long>(value) < r_max) {
        const long long r = static_cast<long long>(value);
        if (grid.empty() || grid.back() != r)
            grid.push_back(r);
        value *= 1.35;
    }
    grid.push_back(r_max);
    for (long long r : grid) {
        const CorollaryResult res = corollary_inequality_check(r);
        SweepRow row;
        row.lemma = "corollary";
        row.params = "r=" + std::to_string(r);
        row.lhs = res.lhs;
        row.rhs = res.rhs;
        row.margin = res.log_margin;
        row.ok = res.ok;
        report.rows.push_back(row);
        report.all_ok = report.all_ok && row.ok;
    }
    return report;
}

SweepReport run_all_sweeps() {
    SweepReport report = lemma2_sweep();
    report.append(injection_sweep());
    report.append(lemma3_sweep());
    report.append(lemma4_sweep());
    report.append(corollary_sweep());
    return report;
}

std::string sweep_csv_header() { return "lemma,params,lhs,rhs,margin"; }

std::string sweep_csv_row(const SweepRow& row) {
    std::ostringstream out;
    out << row.lemma << ',' << row.params << ',' << format_double(row.lhs) << ','
        << format_double(row.rhs) << ',' << format_double(row.margin);
    return out.str();
}

}  // namespace panchroma::lemmas
