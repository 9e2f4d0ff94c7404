#include "panchroma/conflict.hpp"

#include <algorithm>
#include <stdexcept>

namespace panchroma {

std::vector<int> ShortEdgeReport::edges() const {
    std::vector<int> out;
    for (const auto& entry : entries)
        out.push_back(entry.edge);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ShortEdgeReport find_short_edges(const Hypergraph& h, int r,
                                 const std::vector<IntervalCode>& labels) {
    require_valid(h);
    if (r < 2)
        throw std::domain_error("short-edge analysis requires r >= 2");
    if (static_cast<int>(labels.size()) != h.num_vertices)
        throw std::invalid_argument("labels must cover every vertex");

    ShortEdgeReport report;
    std::vector<char> present(static_cast<std::size_t>(2 * r - 1), 0);
    for (int e = 0; e < h.num_edges(); ++e) {
        std::fill(present.begin(), present.end(), 0);
        for (int v : h.edges[static_cast<std::size_t>(e)]) {
            const IntervalCode code = labels[static_cast<std::size_t>(v)];
            if (code < 0 || code > 2 * r - 2)
                throw std::invalid_argument("interval code out of range for vertex " +
                                            std::to_string(v));
            present[static_cast<std::size_t>(code)] = 1;
        }
        for (int i = 1; i <= r - 1; ++i) {
            const bool hits_lower = present[static_cast<std::size_t>(big_interval_code(i))] ||
                                    present[static_cast<std::size_t>(small_interval_code(i))];
            const bool hits_upper = present[static_cast<std::size_t>(big_interval_code(i + 1))] ||
                                    present[static_cast<std::size_t>(small_interval_code(i))];
            if (!hits_lower)
                report.entries.push_back(ShortEdgeEntry{e, i, false});
            if (!hits_upper)
                report.entries.push_back(ShortEdgeEntry{e, i, true});
        }
    }
    return report;
}

ShortEdgeReport find_short_edges(const Hypergraph& h, const PartitionParams& params,
                                 const WeightAssignment& weights) {
    if (static_cast<int>(weights.sigma.size()) != h.num_vertices)
        throw std::invalid_argument("weights must cover every vertex");
    std::vector<IntervalCode> labels(weights.sigma.size());
    for (std::size_t v = 0; v < weights.sigma.size(); ++v)
        labels[v] = locate(weights.sigma[v], params);
    return find_short_edges(h, params.r, labels);
}

namespace {

bool edge_has_color(const Hypergraph& h, const ColoringTrace& trace, int edge, int color) {
    for (int v : h.edges[static_cast<std::size_t>(edge)])
        if (trace.colors[static_cast<std::size_t>(v)] == color)
            return true;
    return false;
}

// True iff `edge` contained `color` among vertices colored strictly before
// the decision at timeline position `pos_limit` (big-interval vertices are
// colored before every decision; colors are never revoked afterwards).
bool edge_had_color_before(const Hypergraph& h, const ColoringTrace& trace,
                           const std::vector<int>& pos, int edge, int color, int pos_limit) {
    for (int v : h.edges[static_cast<std::size_t>(edge)]) {
        if (trace.colors[static_cast<std::size_t>(v)] != color)
            continue;
        const int pv = pos[static_cast<std::size_t>(v)];
        if (pv < pos_limit)  // big-interval vertices carry pos -1
            return true;
    }
    return false;
}

}  // namespace

SnakeBall extract_snake_ball(const Hypergraph& h, const ColoringTrace& trace, int failing_edge) {
    const int r = trace.r;
    if (static_cast<int>(trace.colors.size()) != h.num_vertices)
        throw std::invalid_argument("trace does not color this hypergraph");
    if (failing_edge < 0 || failing_edge >= h.num_edges())
        throw std::domain_error("no failing edge: edge index " + std::to_string(failing_edge) +
                                " out of range");
    if (edge_has_color(h, trace, failing_edge, r))
        throw std::domain_error("no failing edge: edge " + std::to_string(failing_edge) +
                                " does not miss color " + std::to_string(r));
    if (!find_short_edges(h, r, trace.labels).empty())
        throw std::domain_error("short edge present: extraction requires a short-edge-free run");

    const auto pos = processing_positions(trace);

    SnakeBall sb;
    sb.failing_color = r;
    sb.edges.push_back(failing_edge);
    for (int j = 1; j <= r - 1; ++j) {
        const int d = r - j;
        const IntervalCode code = small_interval_code(d);
        const int current = sb.edges.back();
        int link = -1;
        for (int v : h.edges[static_cast<std::size_t>(current)]) {
            if (trace.labels[static_cast<std::size_t>(v)] != code)
                continue;
            if (link < 0 || pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(link)])
                link = v;
        }
        if (link < 0)
            throw std::logic_error("witness missing: edge " + std::to_string(current) +
                                   " has no vertex in delta_" + std::to_string(d));
        const auto& decision =
            trace.decisions[static_cast<std::size_t>(pos[static_cast<std::size_t>(link)])];
        if (decision.witnesses.empty())
            throw std::logic_error("witness missing: vertex " + std::to_string(link) +
                                   " recorded no witness edge");
        sb.links.push_back(link);
        sb.delta_indices.push_back(d);
        sb.edges.push_back(*std::min_element(decision.witnesses.begin(),
                                             decision.witnesses.end()));
    }
    return sb;
}

VerifyResult verify_snake_ball(const Hypergraph& h, const ColoringTrace& trace,
                               const SnakeBall& sb) {
    const int r = trace.r;
    if (static_cast<int>(trace.colors.size()) != h.num_vertices)
        return {false, "trace does not color this hypergraph"};
    if (static_cast<int>(sb.edges.size()) != r || static_cast<int>(sb.links.size()) != r - 1 ||
        static_cast<int>(sb.delta_indices.size()) != r - 1)
        return {false, "size mismatch"};
    if (sb.failing_color != r)
        return {false, "failing color mismatch"};
    for (int e : sb.edges)
        if (e < 0 || e >= h.num_edges())
            return {false, "edge index out of range"};
    for (int v : sb.links)
        if (v < 0 || v >= h.num_vertices)
            return {false, "link vertex out of range"};

    if (edge_has_color(h, trace, sb.edges.front(), r))
        return {false, "failing edge has color r"};

    const auto pos = processing_positions(trace);
    for (int j = 1; j <= r - 1; ++j) {
        const int d = r - j;
        const IntervalCode code = small_interval_code(d);
        const int a = sb.edges[static_cast<std::size_t>(j - 1)];
        const int b = sb.edges[static_cast<std::size_t>(j)];
        const int v = sb.links[static_cast<std::size_t>(j - 1)];
        if (sb.delta_indices[static_cast<std::size_t>(j - 1)] != d)
            return {false, "delta index mismatch"};
        if (trace.labels[static_cast<std::size_t>(v)] != code)
            return {false, "link vertex not in its small interval"};
        const auto& ea = h.edges[static_cast<std::size_t>(a)];
        const auto& eb = h.edges[static_cast<std::size_t>(b)];
        if (std::find(ea.begin(), ea.end(), v) == ea.end() ||
            std::find(eb.begin(), eb.end(), v) == eb.end())
            return {false, "link vertex not in edge"};
        const int pv = pos[static_cast<std::size_t>(v)];
        for (int u : ea)
            if (u != v && trace.labels[static_cast<std::size_t>(u)] == code &&
                pos[static_cast<std::size_t>(u)] > pv)
                return {false, "link not last vertex"};
        for (int u : eb)
            if (u != v && trace.labels[static_cast<std::size_t>(u)] == code &&
                pos[static_cast<std::size_t>(u)] < pv)
                return {false, "link not first vertex"};
        if (edge_had_color_before(h, trace, pos, b, d, pv))
            return {false, "witness edge had color"};
    }
    return {};
}

bool tuple_forms_snake_ball(const Hypergraph& h, const ColoringTrace& trace,
                            const std::vector<int>& tuple) {
    const int r = trace.r;
    if (static_cast<int>(tuple.size()) != r)
        throw std::domain_error("tuple must list exactly r edges");
    for (int e : tuple)
        if (e < 0 || e >= h.num_edges())
            throw std::domain_error("unknown tuple indices");

    const auto pos = processing_positions(trace);
    SnakeBall candidate;
    candidate.edges = tuple;
    candidate.failing_color = r;
    for (int j = 1; j <= r - 1; ++j) {
        const int d = r - j;
        const IntervalCode code = small_interval_code(d);
        const auto& ea = h.edges[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j - 1)])];
        const auto& eb = h.edges[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
        int last_a = -1;
        for (int v : ea)
            if (trace.labels[static_cast<std::size_t>(v)] == code &&
                (last_a < 0 ||
                 pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(last_a)]))
                last_a = v;
        int first_b = -1;
        for (int v : eb)
            if (trace.labels[static_cast<std::size_t>(v)] == code &&
                (first_b < 0 ||
                 pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(first_b)]))
                first_b = v;
        if (last_a < 0 || last_a != first_b)
            return false;
        candidate.links.push_back(last_a);
        candidate.delta_indices.push_back(d);
    }
    return verify_snake_ball(h, trace, candidate).ok;
}

}  // namespace panchroma
