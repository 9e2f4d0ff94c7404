#include "panchroma/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace panchroma {

std::vector<int> processing_positions(const ColoringTrace& trace) {
    std::vector<int> pos(trace.labels.size(), -1);
    for (std::size_t k = 0; k < trace.delta_order.size(); ++k)
        pos[static_cast<std::size_t>(trace.delta_order[k])] = static_cast<int>(k);
    return pos;
}

ColoringTrace run_on_labels(const Hypergraph& h, int r, const std::vector<IntervalCode>& labels,
                            const std::vector<int>& delta_order) {
    require_valid(h);
    if (r < 2)
        throw std::domain_error("coloring requires r >= 2");
    const int V = h.num_vertices;
    if (static_cast<int>(labels.size()) != V)
        throw std::invalid_argument("labels must cover every vertex");
    std::size_t small_count = 0;
    for (int v = 0; v < V; ++v) {
        const IntervalCode code = labels[static_cast<std::size_t>(v)];
        if (code < 0 || code > 2 * r - 2)
            throw std::invalid_argument("interval code out of range for vertex " +
                                        std::to_string(v));
        if (is_small_interval(code))
            ++small_count;
    }
    if (delta_order.size() != small_count)
        throw std::invalid_argument("delta_order must list each small-interval vertex once");
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    for (int v : delta_order) {
        if (v < 0 || v >= V || !is_small_interval(labels[static_cast<std::size_t>(v)]) ||
            seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("delta_order must list each small-interval vertex once");
        seen[static_cast<std::size_t>(v)] = 1;
    }

    ColoringTrace trace;
    trace.r = r;
    trace.labels = labels;
    trace.delta_order = delta_order;
    trace.colors.assign(static_cast<std::size_t>(V), 0);

    for (int v = 0; v < V; ++v) {
        const IntervalCode code = labels[static_cast<std::size_t>(v)];
        if (is_big_interval(code))
            trace.colors[static_cast<std::size_t>(v)] = interval_number(code);
    }

    const auto incidence = incidence_lists(h);
    trace.decisions.reserve(delta_order.size());
    for (int v : delta_order) {
        const int offered = offered_color(labels[static_cast<std::size_t>(v)]);
        Decision d;
        d.vertex = v;
        d.offered = offered;
        for (int e : incidence[static_cast<std::size_t>(v)]) {
            bool has_color = false;
            for (int u : h.edges[static_cast<std::size_t>(e)]) {
                if (trace.colors[static_cast<std::size_t>(u)] == offered) {
                    has_color = true;
                    break;
                }
            }
            if (!has_color)
                d.witnesses.push_back(e);
        }
        d.chosen = d.witnesses.empty() ? offered + 1 : offered;
        trace.colors[static_cast<std::size_t>(v)] = d.chosen;
        trace.decisions.push_back(std::move(d));
    }
    return trace;
}

std::vector<int> delta_processing_order(const std::vector<IntervalCode>& labels,
                                        const std::vector<double>& sigma) {
    if (labels.size() != sigma.size())
        throw std::invalid_argument("labels and sigma must have equal length");
    std::vector<int> order;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (is_small_interval(labels[v]))
            order.push_back(static_cast<int>(v));
    std::sort(order.begin(), order.end(), [&sigma](int a, int b) {
        const double sa = sigma[static_cast<std::size_t>(a)];
        const double sb = sigma[static_cast<std::size_t>(b)];
        if (sa != sb)
            return sa < sb;
        return a < b;
    });
    return order;
}

ColoringTrace run_coloring(const Hypergraph& h, const PartitionParams& params,
                           const WeightAssignment& weights) {
    require_valid(params);
    if (static_cast<int>(weights.sigma.size()) != h.num_vertices)
        throw std::invalid_argument("weights must cover every vertex");
    std::vector<IntervalCode> labels(weights.sigma.size());
    for (std::size_t v = 0; v < weights.sigma.size(); ++v)
        labels[v] = locate(weights.sigma[v], params);
    auto order = delta_processing_order(labels, weights.sigma);
    ColoringTrace trace = run_on_labels(h, params.r, labels, order);
    trace.p = params.p;
    trace.sigma = weights.sigma;
    return trace;
}

PanchromaticCheck is_panchromatic(const Hypergraph& h, const ColoringTrace& trace) {
    if (static_cast<int>(trace.colors.size()) != h.num_vertices)
        throw std::invalid_argument("trace does not color this hypergraph");
    for (int c : trace.colors)
        if (c < 1 || c > trace.r)
            throw std::invalid_argument("trace contains an uncolored or out-of-range vertex");
    PanchromaticCheck result;
    std::vector<char> present(static_cast<std::size_t>(trace.r) + 1, 0);
    for (int e = 0; e < h.num_edges(); ++e) {
        std::fill(present.begin(), present.end(), 0);
        for (int v : h.edges[static_cast<std::size_t>(e)])
            present[static_cast<std::size_t>(trace.colors[static_cast<std::size_t>(v)])] = 1;
        for (int c = 1; c <= trace.r; ++c)
            if (!present[static_cast<std::size_t>(c)])
                result.failing.emplace_back(e, c);
    }
    result.ok = result.failing.empty();
    return result;
}

}  // namespace panchroma
