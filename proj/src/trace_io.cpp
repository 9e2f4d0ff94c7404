#include "panchroma/trace_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace panchroma {

std::string trace_to_json(const ColoringTrace& trace, const TraceMeta& meta) {
    nlohmann::json j;
    j["meta"] = {{"seed", meta.seed},
                 {"n", meta.n},
                 {"r", trace.r},
                 {"p", trace.p},
                 {"mode", meta.mode}};
    const auto pos = processing_positions(trace);
    auto vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < trace.labels.size(); ++v) {
        nlohmann::json jv;
        jv["id"] = v;
        jv["sigma"] = v < trace.sigma.size() ? trace.sigma[v] : 0.0;
        jv["interval"] = interval_name(trace.labels[v]);
        jv["color"] = trace.colors[v];
        if (is_small_interval(trace.labels[v]))
            jv["witnesses"] = trace.decisions[static_cast<std::size_t>(pos[v])].witnesses;
        vertices.push_back(jv);
    }
    j["vertices"] = vertices;
    return j.dump(2) + "\n";
}

TraceWithMeta trace_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("trace parse error: ") + e.what());
    }
    try {
        TraceWithMeta out;
        const auto& meta = j.at("meta");
        out.meta.seed = meta.at("seed").get<std::uint64_t>();
        out.meta.n = meta.at("n").get<long long>();
        out.meta.mode = meta.at("mode").get<std::string>();
        out.trace.r = meta.at("r").get<int>();
        out.trace.p = meta.at("p").get<double>();
        if (out.trace.r < 2)
            throw std::domain_error("trace parse error: r must be at least 2");

        const auto& vertices = j.at("vertices");
        const std::size_t count = vertices.size();
        out.trace.labels.assign(count, 0);
        out.trace.sigma.assign(count, 0.0);
        out.trace.colors.assign(count, 0);
        std::vector<std::vector<int>> witness_by_vertex(count);
        std::vector<char> seen(count, 0);
        for (const auto& jv : vertices) {
            const long long id = jv.at("id").get<long long>();
            if (id < 0 || id >= static_cast<long long>(count))
                throw std::domain_error("trace parse error: vertex id out of range");
            const auto v = static_cast<std::size_t>(id);
            if (seen[v])
                throw std::domain_error("trace parse error: duplicate vertex id");
            seen[v] = 1;
            out.trace.sigma[v] = jv.at("sigma").get<double>();
            out.trace.labels[v] =
                parse_interval_name(jv.at("interval").get<std::string>(), out.trace.r);
            out.trace.colors[v] = jv.at("color").get<int>();
            if (is_small_interval(out.trace.labels[v])) {
                if (!jv.contains("witnesses"))
                    throw std::domain_error(
                        "trace parse error: small-interval vertex lacks witnesses");
                witness_by_vertex[v] = jv.at("witnesses").get<std::vector<int>>();
            } else if (jv.contains("witnesses")) {
                throw std::domain_error(
                    "trace parse error: big-interval vertex carries witnesses");
            }
        }

        out.trace.delta_order = delta_processing_order(out.trace.labels, out.trace.sigma);
        for (int v : out.trace.delta_order) {
            Decision d;
            d.vertex = v;
            d.offered = offered_color(out.trace.labels[static_cast<std::size_t>(v)]);
            d.witnesses = witness_by_vertex[static_cast<std::size_t>(v)];
            d.chosen = out.trace.colors[static_cast<std::size_t>(v)];
            out.trace.decisions.push_back(std::move(d));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("trace parse error: ") + e.what());
    }
}

std::string snake_ball_to_json(const SnakeBall& sb) {
    nlohmann::json j;
    j["edges"] = sb.edges;
    j["links"] = sb.links;
    j["delta_indices"] = sb.delta_indices;
    return j.dump(2) + "\n";
}

}  // namespace panchroma
