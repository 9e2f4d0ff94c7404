#include "panchroma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "panchroma/coloring.hpp"
#include "panchroma/conflict.hpp"
#include "panchroma/partition.hpp"

namespace panchroma::oracle {

std::string RationalProbability::fraction() const {
    return value.str();
}

std::string RationalProbability::decimal(int digits) const {
    if (digits < 1)
        throw std::domain_error("decimal rendering needs at least one digit");
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const BigInt num = boost::multiprecision::numerator(value) * scale;
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt scaled = (num + den / 2) / den;  // round half up
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string frac_str = frac.str();
    if (static_cast<int>(frac_str.size()) < digits)
        frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
    return whole.str() + "." + frac_str;
}

double RationalProbability::to_double() const {
    return static_cast<double>(value);
}

BigRational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::domain_error("empty rational literal");
    const auto is_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
        });
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw std::domain_error("malformed rational: " + text);
        const BigInt d(den);
        if (d == 0)
            throw std::domain_error("zero denominator: " + text);
        return BigRational(BigInt(num), d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac))
            throw std::domain_error("malformed rational: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        const BigInt whole_value = whole.empty() ? BigInt(0) : BigInt(whole);
        return BigRational(whole_value * scale + BigInt(frac), scale);
    }
    if (!is_digits(text))
        throw std::domain_error("malformed rational: " + text);
    return BigRational(BigInt(text));
}

PanchromaticWitness panchromatic_exists(const Hypergraph& h, int r, const SearchBudget& budget) {
    require_valid(h);
    if (r < 1)
        throw std::domain_error("panchromatic search requires r >= 1");
    const int V = h.num_vertices;
    if (V > budget.max_vertices &&
        std::pow(static_cast<double>(r), static_cast<double>(V)) > budget.max_states)
        throw std::domain_error("budget exceeded: instance too large for exact search");

    const auto incidence = incidence_lists(h);
    const int E = h.num_edges();
    std::vector<int> colors(static_cast<std::size_t>(V), 0);
    std::vector<std::vector<int>> color_count(
        static_cast<std::size_t>(E), std::vector<int>(static_cast<std::size_t>(r) + 1, 0));
    std::vector<int> missing(static_cast<std::size_t>(E), r);   // colors absent from the edge
    std::vector<int> uncolored(static_cast<std::size_t>(E), 0); // uncolored vertices in the edge
    for (int e = 0; e < E; ++e)
        uncolored[static_cast<std::size_t>(e)] = h.n;

    std::function<bool(int)> search = [&](int v) -> bool {
        if (v == V)
            return true;
        for (int c = 1; c <= r; ++c) {
            bool feasible = true;
            colors[static_cast<std::size_t>(v)] = c;
            for (int e : incidence[static_cast<std::size_t>(v)]) {
                auto& counts = color_count[static_cast<std::size_t>(e)];
                if (counts[static_cast<std::size_t>(c)]++ == 0)
                    --missing[static_cast<std::size_t>(e)];
                --uncolored[static_cast<std::size_t>(e)];
                if (missing[static_cast<std::size_t>(e)] > uncolored[static_cast<std::size_t>(e)])
                    feasible = false;
            }
            if (feasible && search(v + 1))
                return true;
            for (int e : incidence[static_cast<std::size_t>(v)]) {
                auto& counts = color_count[static_cast<std::size_t>(e)];
                if (--counts[static_cast<std::size_t>(c)] == 0)
                    ++missing[static_cast<std::size_t>(e)];
                ++uncolored[static_cast<std::size_t>(e)];
            }
            colors[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };

    PanchromaticWitness result;
    // An edge can never see all r colors if it has fewer than r vertices.
    if (h.n < r && E > 0)
        return result;
    result.exists = search(0);
    if (result.exists)
        result.coloring = colors;
    return result;
}

BigInt enumeration_work(int num_vertices, int r) {
    // sum over M (total small-interval vertices) of
    // C(M + r - 2, r - 2) * V!/(V-M)! * r^(V-M):
    // compositions of M into r-1 intervals, vertex placements collapsed by
    // the per-interval factorials, and big-interval choices.
    const int V = num_vertices;
    BigInt total = 0;
    for (int M = 0; M <= V; ++M) {
        BigInt compositions = 1;  // C(M + r - 2, r - 2)
        for (int i = 1; i <= r - 2; ++i) {
            compositions *= M + i;
            compositions /= i;
        }
        BigInt placements = 1;  // V! / (V - M)!
        for (int i = V - M + 1; i <= V; ++i)
            placements *= i;
        BigInt big_choices = 1;
        for (int i = 0; i < V - M; ++i)
            big_choices *= r;
        total += compositions * placements * big_choices;
    }
    return total;
}

namespace {

struct Enumerator {
    const Hypergraph& h;
    int r;
    BigRational big_len;
    BigRational small_len;

    // Returns the probability of the event described by the callbacks.
    // `order_free` may decide the event from the labels alone (returning 0 or
    // 1); otherwise `per_order` is evaluated on every order combination.
    RationalProbability run(const std::function<int(const std::vector<IntervalCode>&)>& order_free,
                            const std::function<bool(const ColoringTrace&)>& per_order) const {
        const int V = h.num_vertices;
        const int codes = 2 * r - 1;
        std::vector<IntervalCode> labels(static_cast<std::size_t>(V), 0);
        BigRational total = 0;

        std::vector<std::vector<int>> groups(static_cast<std::size_t>(r - 1));
        for (;;) {
            // Weight of this interval assignment.
            BigRational weight = 1;
            for (int v = 0; v < V; ++v)
                weight *= is_big_interval(labels[static_cast<std::size_t>(v)]) ? big_len
                                                                               : small_len;

            const int decided = order_free ? order_free(labels) : -1;
            if (decided == 1) {
                total += weight;
            } else if (decided < 0) {
                for (auto& g : groups)
                    g.clear();
                for (int v = 0; v < V; ++v) {
                    const IntervalCode code = labels[static_cast<std::size_t>(v)];
                    if (is_small_interval(code))
                        groups[static_cast<std::size_t>(interval_number(code) - 1)].push_back(v);
                }
                long long satisfied = 0;
                long long orders = 0;
                std::vector<int> delta_order;
                std::function<void(std::size_t)> iterate = [&](std::size_t g) {
                    if (g == groups.size()) {
                        ++orders;
                        const ColoringTrace trace = run_on_labels(h, r, labels, delta_order);
                        if (per_order(trace))
                            ++satisfied;
                        return;
                    }
                    auto& group = groups[g];
                    if (group.empty()) {
                        iterate(g + 1);
                        return;
                    }
                    std::sort(group.begin(), group.end());
                    const std::size_t base = delta_order.size();
                    do {
                        delta_order.resize(base);
                        delta_order.insert(delta_order.end(), group.begin(), group.end());
                        iterate(g + 1);
                    } while (std::next_permutation(group.begin(), group.end()));
                    delta_order.resize(base);
                };
                iterate(0);
                if (satisfied > 0)
                    total += weight * BigRational(satisfied, orders);
            }

            // Advance the assignment odometer.
            int pos = V - 1;
            while (pos >= 0 && labels[static_cast<std::size_t>(pos)] == codes - 1) {
                labels[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++labels[static_cast<std::size_t>(pos)];
        }
        RationalProbability prob;
        prob.value = total;
        return prob;
    }
};

Enumerator make_enumerator(const Hypergraph& h, int r, const BigRational& p,
                           const EnumerationBudget& budget) {
    require_valid(h);
    if (r < 2)
        throw std::domain_error("exact enumeration requires r >= 2");
    if (!(p > 0) || !(p < 1))
        throw std::domain_error("partition parameter p must lie in (0,1)");
    if (h.num_vertices > budget.max_vertices)
        throw std::domain_error("budget exceeded: more than " +
                                std::to_string(budget.max_vertices) + " vertices");
    if (enumeration_work(h.num_vertices, r) > budget.max_work)
        throw std::domain_error("budget exceeded: enumeration work above " +
                                std::to_string(budget.max_work));
    Enumerator en{h, r, (1 - p) / r, p / (r - 1)};
    return en;
}

}  // namespace

RationalProbability exact_success_probability(const Hypergraph& h, int r, const BigRational& p,
                                              const EnumerationBudget& budget) {
    const Enumerator en = make_enumerator(h, r, p, budget);
    return en.run(nullptr, [&h](const ColoringTrace& trace) {
        return is_panchromatic(h, trace).ok;
    });
}

RationalProbability exact_event_probability(const Hypergraph& h, int r, const BigRational& p,
                                            const EventSpec& event,
                                            const EnumerationBudget& budget) {
    const Enumerator en = make_enumerator(h, r, p, budget);
    switch (event.kind) {
        case EventKind::failure:
            return en.run(nullptr, [&h](const ColoringTrace& trace) {
                return !is_panchromatic(h, trace).ok;
            });
        case EventKind::edge_is_short: {
            if (event.edge < 0 || event.edge >= h.num_edges())
                throw std::domain_error("unknown edge index");
            const int edge = event.edge;
            // Shortness depends on interval membership only.
            return en.run(
                [&h, r, edge](const std::vector<IntervalCode>& labels) {
                    const auto report = find_short_edges(h, r, labels);
                    for (const auto& entry : report.entries)
                        if (entry.edge == edge)
                            return 1;
                    return 0;
                },
                nullptr);
        }
        case EventKind::snake_ball: {
            if (static_cast<int>(event.tuple.size()) != r)
                throw std::domain_error("snake-ball event needs an ordered tuple of r edges");
            for (int e : event.tuple)
                if (e < 0 || e >= h.num_edges())
                    throw std::domain_error("unknown tuple indices");
            const std::vector<int> tuple = event.tuple;
            return en.run(
                [&h, r, tuple](const std::vector<IntervalCode>& labels) -> int {
                    const auto report = find_short_edges(h, r, labels);
                    for (const auto& entry : report.entries)
                        for (int e : tuple)
                            if (entry.edge == e)
                                return 0;  // a short tuple edge kills the event
                    return -1;             // undecided: depends on the order
                },
                [&h, tuple](const ColoringTrace& trace) {
                    return tuple_forms_snake_ball(h, trace, tuple);
                });
        }
    }
    throw std::domain_error("unknown event kind");
}

}  // namespace panchroma::oracle
