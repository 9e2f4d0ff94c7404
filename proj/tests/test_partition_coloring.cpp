#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "panchroma/coloring.hpp"
#include "panchroma/hypergraph.hpp"
#include "panchroma/partition.hpp"
#include "panchroma/trace_io.hpp"

using namespace panchroma;

namespace {

Hypergraph make(int n, int vertices, std::vector<std::vector<int>> edges) {
    Hypergraph h;
    h.n = n;
    h.num_vertices = vertices;
    h.edges = std::move(edges);
    return h;
}

}  // namespace

TEST_CASE("compute_p matches the closed form") {
    CHECK(compute_p(1000000, 2) == doctest::Approx(5.5948593217441317e-06).epsilon(1e-14));
    CHECK(compute_p(10000, 2) == doctest::Approx(0.00034950067828041682).epsilon(1e-14));
    // ((r-1)/r) (r-1)^2 ln(n/ln n)/n at n=100, r=3 by hand.
    const double by_hand = (2.0 / 3.0) * 4.0 * std::log(100.0 / std::log(100.0)) / 100.0;
    CHECK(compute_p(100, 3) == doctest::Approx(by_hand).epsilon(1e-15));
    // Decreasing in n for fixed r.
    CHECK(compute_p(10000, 2) > compute_p(20000, 2));
    CHECK_THROWS_WITH(compute_p(2, 2), "compute_p requires n >= 3");
    CHECK_THROWS_WITH(compute_p(1000, 1), "compute_p requires r >= 2");
}

TEST_CASE("partition params validate their range") {
    const PartitionParams f = params_from_formula(10000, 2);
    CHECK(f.r == 2);
    CHECK(f.p == compute_p(10000, 2));
    CHECK(f.provenance == PProvenance::formula);

    const PartitionParams o = params_override(3, 0.25);
    CHECK(o.provenance == PProvenance::override_value);
    CHECK_NOTHROW(require_valid(o));

    CHECK_THROWS_WITH(require_valid(params_override(1, 0.5)), "partition params require r >= 2");
    CHECK_THROWS_WITH(require_valid(params_override(2, 0.0)),
                      "partition parameter p must lie in (0,1)");
    CHECK_THROWS_WITH(require_valid(params_override(2, 1.0)),
                      "partition parameter p must lie in (0,1)");
}

TEST_CASE("interval layout covers [0,1) with the prescribed lengths") {
    const IntervalLayout lay = interval_layout(params_override(5, 0.1));
    CHECK(lay.intervals.size() == 9);
    CHECK(lay.big_length == doctest::Approx(0.18).epsilon(1e-15));
    CHECK(lay.small_length == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(lay.intervals.front().start == 0.0);
    CHECK(lay.intervals.back().end == 1.0);  // exact shared boundary
    for (std::size_t k = 0; k < lay.intervals.size(); ++k) {
        CHECK(lay.intervals[k].code == static_cast<int>(k));
        if (k > 0)
            CHECK(lay.intervals[k].start == lay.intervals[k - 1].end);
        const double want = is_big_interval(static_cast<int>(k)) ? 0.18 : 0.025;
        CHECK(lay.intervals[k].length() == doctest::Approx(want).epsilon(1e-12));
    }

    const IntervalLayout two = interval_layout(params_override(2, 0.2));
    CHECK(two.intervals[0].end == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(two.intervals[1].end == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(two.intervals[2].end == 1.0);
}

TEST_CASE("interval codes and names round-trip") {
    CHECK(interval_name(0) == "Delta1");
    CHECK(interval_name(1) == "delta1");
    CHECK(interval_name(4) == "Delta3");
    CHECK(is_big_interval(0));
    CHECK(is_small_interval(3));
    CHECK(interval_number(4) == 3);
    CHECK(big_interval_code(3) == 4);
    CHECK(small_interval_code(2) == 3);
    CHECK(offered_color(1) == 1);
    CHECK(offered_color(5) == 3);
    for (int code = 0; code < 9; ++code)
        CHECK(parse_interval_name(interval_name(code), 5) == code);
    CHECK_THROWS_WITH(parse_interval_name("gamma3", 5), "unknown interval name: gamma3");
    CHECK_THROWS_WITH(parse_interval_name("Delta6", 5), "interval index out of range: Delta6");
    CHECK_THROWS_WITH(parse_interval_name("delta5", 5), "interval index out of range: delta5");
    CHECK_THROWS_WITH(parse_interval_name("Delta0", 5), "interval index out of range: Delta0");
}

TEST_CASE("locate agrees with the layout everywhere") {
    const PartitionParams pp = params_override(2, 0.2);
    CHECK(locate(0.0, pp) == 0);
    CHECK(locate(0.39, pp) == 0);
    CHECK(locate(0.4, pp) == 1);
    CHECK(locate(0.6, pp) == 2);   // boundary belongs to the right piece
    CHECK(locate(0.999, pp) == 2);
    CHECK_THROWS_WITH(locate(1.0, pp), "sigma must lie in [0,1)");
    CHECK_THROWS_WITH(locate(-0.001, pp), "sigma must lie in [0,1)");

    for (int r : {2, 3, 5, 7}) {
        for (double p : {0.01, 0.2, 0.5, 0.9}) {
            const PartitionParams q = params_override(r, p);
            const IntervalLayout lay = interval_layout(q);
            for (const Interval& iv : lay.intervals) {
                CHECK(locate(iv.start, q) == iv.code);
                const double mid = iv.start + iv.length() / 2;
                CHECK(locate(mid, q) == iv.code);
            }
            // Dense sweep: membership by layout must match locate().
            for (int k = 0; k <= 1000; ++k) {
                const double s = k / 1000.5;
                const IntervalCode c = locate(s, q);
                const Interval& iv = lay.intervals[static_cast<std::size_t>(c)];
                CHECK(s >= iv.start);
                CHECK(s < iv.end);
            }
        }
    }
}

TEST_CASE("assign_weights is seeded and uniform") {
    const Hypergraph h = random_uniform(2, 100000, 1, 3);
    const WeightAssignment a = assign_weights(h, 99);
    const WeightAssignment b = assign_weights(h, 99);
    const WeightAssignment c = assign_weights(h, 100);
    CHECK(a.sigma == b.sigma);
    CHECK(a.sigma != c.sigma);
    CHECK(a.sigma.size() == 100000);
    double sum = 0.0;
    for (double s : a.sigma) {
        CHECK(s >= 0.0);
        CHECK(s < 1.0);
        sum += s;
    }
    // Mean of 1e5 uniforms: 0.5 +- 5 * sqrt(1/12/1e5).
    CHECK(std::abs(sum / 1e5 - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / 1e5));

    const Hypergraph empty = make(2, 0, {});
    CHECK(assign_weights(empty, 7).sigma.empty());
}

TEST_CASE("two-step coloring on a hand-checked path") {
    // Edges e = {0,1}, f = {1,2}; r = 2, p = 0.4 so Delta1 = [0,0.3),
    // delta1 = [0.3,0.7), Delta2 = [0.7,1).
    const Hypergraph h = make(2, 3, {{0, 1}, {1, 2}});
    const PartitionParams pp = params_override(2, 0.4);
    WeightAssignment w;
    w.sigma = {0.1, 0.5, 0.7};
    const ColoringTrace t = run_coloring(h, pp, w);

    CHECK(t.r == 2);
    CHECK(t.p == 0.4);
    CHECK(t.labels == std::vector<IntervalCode>{0, 1, 2});
    CHECK(t.colors == std::vector<int>{1, 1, 2});
    CHECK(t.delta_order == std::vector<int>{1});
    REQUIRE(t.decisions.size() == 1);
    CHECK(t.decisions[0].vertex == 1);
    CHECK(t.decisions[0].offered == 1);
    // Edge f = {1,2} had no color-1 vertex when vertex 1 was decided.
    CHECK(t.decisions[0].witnesses == std::vector<int>{1});
    CHECK(t.decisions[0].chosen == 1);

    const PanchromaticCheck chk = is_panchromatic(h, t);
    CHECK_FALSE(chk.ok);
    CHECK(chk.failing == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("second small-interval vertex moves on when the offer is taken") {
    // Both vertices of a single edge in delta1: the first keeps color 1
    // (its edge still lacks 1), the second finds no witness and takes 2.
    const Hypergraph h = make(2, 2, {{0, 1}});
    WeightAssignment w;
    w.sigma = {0.35, 0.5};
    const ColoringTrace t = run_coloring(h, params_override(2, 0.4), w);
    CHECK(t.labels == std::vector<IntervalCode>{1, 1});
    CHECK(t.delta_order == std::vector<int>{0, 1});
    CHECK(t.decisions[0].witnesses == std::vector<int>{0});
    CHECK(t.decisions[0].chosen == 1);
    CHECK(t.decisions[1].witnesses.empty());
    CHECK(t.decisions[1].chosen == 2);
    CHECK(t.colors == std::vector<int>{1, 2});
    CHECK(is_panchromatic(h, t).ok);
}

TEST_CASE("big-interval-only runs skip step two") {
    const Hypergraph h = make(2, 2, {{0, 1}});
    WeightAssignment w;
    w.sigma = {0.1, 0.8};
    const ColoringTrace t = run_coloring(h, params_override(2, 0.4), w);
    CHECK(t.delta_order.empty());
    CHECK(t.decisions.empty());
    CHECK(t.colors == std::vector<int>{1, 2});
    CHECK(processing_positions(t) == std::vector<int>{-1, -1});
}

TEST_CASE("run_on_labels validates its inputs") {
    const Hypergraph h = make(2, 2, {{0, 1}});
    CHECK_THROWS_WITH(run_on_labels(h, 1, {0, 0}, {}), "coloring requires r >= 2");
    CHECK_THROWS_WITH(run_on_labels(h, 2, {0}, {}), "labels must cover every vertex");
    CHECK_THROWS_WITH(run_on_labels(h, 2, {0, 5}, {}),
                      "interval code out of range for vertex 1");
    CHECK_THROWS_WITH(run_on_labels(h, 2, {1, 0}, {}),
                      "delta_order must list each small-interval vertex once");
    CHECK_THROWS_WITH(run_on_labels(h, 2, {1, 1}, {0, 0}),
                      "delta_order must list each small-interval vertex once");
}

TEST_CASE("delta_processing_order sorts by weight then index") {
    const std::vector<IntervalCode> labels = {1, 0, 1, 1};
    const std::vector<double> sigma = {0.5, 0.1, 0.4, 0.5};
    CHECK(delta_processing_order(labels, sigma) == std::vector<int>{2, 0, 3});
}

TEST_CASE("trace invariants hold on random runs") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const Hypergraph h = random_uniform(3, 12, 8, seed);
        const PartitionParams pp = params_override(3, 0.3);
        const WeightAssignment w = assign_weights(h, seed * 17 + 1);
        const ColoringTrace t = run_coloring(h, pp, w);

        REQUIRE(t.labels.size() == 12);
        REQUIRE(t.colors.size() == 12);
        const auto pos = processing_positions(t);
        for (int v = 0; v < 12; ++v) {
            CHECK(t.labels[v] == locate(w.sigma[v], pp));
            CHECK(t.colors[v] >= 1);
            CHECK(t.colors[v] <= 3);
            if (is_big_interval(t.labels[v])) {
                CHECK(t.colors[v] == interval_number(t.labels[v]));
                CHECK(pos[v] == -1);
            } else {
                CHECK(pos[v] >= 0);
                CHECK(t.delta_order[static_cast<std::size_t>(pos[v])] == v);
            }
        }
        for (std::size_t k = 0; k + 1 < t.delta_order.size(); ++k) {
            const int u = t.delta_order[k];
            const int v = t.delta_order[k + 1];
            CHECK((w.sigma[u] < w.sigma[v] || (w.sigma[u] == w.sigma[v] && u < v)));
        }
        REQUIRE(t.decisions.size() == t.delta_order.size());
        for (std::size_t k = 0; k < t.decisions.size(); ++k) {
            const Decision& d = t.decisions[k];
            CHECK(d.vertex == t.delta_order[k]);
            CHECK(d.offered == offered_color(t.labels[d.vertex]));
            CHECK(d.chosen == (d.witnesses.empty() ? d.offered + 1 : d.offered));
            CHECK(t.colors[d.vertex] == d.chosen);
        }

        // Label-driven replay reproduces the same coloring.
        const ColoringTrace replay = run_on_labels(h, 3, t.labels, t.delta_order);
        CHECK(replay.colors == t.colors);
    }
}

TEST_CASE("is_panchromatic lists failures in edge-major order") {
    const Hypergraph tri = make(2, 3, {{0, 1}, {1, 2}, {0, 2}});
    ColoringTrace t = run_on_labels(tri, 2, {0, 0, 0}, {});  // everyone color 1
    const PanchromaticCheck chk = is_panchromatic(tri, t);
    CHECK_FALSE(chk.ok);
    CHECK(chk.failing ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 2}});

    const Hypergraph one = make(3, 3, {{0, 1, 2}});
    ColoringTrace u = run_on_labels(one, 3, {2, 2, 2}, {});  // everyone color 2
    CHECK(is_panchromatic(one, u).failing ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 3}});

    CHECK_THROWS_WITH(is_panchromatic(make(2, 5, {{0, 1}}), t),
                      "trace does not color this hypergraph");
}

TEST_CASE("trace json round-trips") {
    const Hypergraph h = make(2, 3, {{0, 1}, {1, 2}});
    const PartitionParams pp = params_override(2, 0.4);
    WeightAssignment w;
    w.sigma = {0.1, 0.5, 0.7};
    const ColoringTrace t = run_coloring(h, pp, w);
    TraceMeta meta;
    meta.seed = 41;
    meta.n = 2;
    meta.mode = "override";

    const std::string text = trace_to_json(t, meta);
    const TraceWithMeta back = trace_from_json(text);
    CHECK(back.meta.seed == 41);
    CHECK(back.meta.n == 2);
    CHECK(back.meta.mode == "override");
    CHECK(back.trace.r == t.r);
    CHECK(back.trace.p == t.p);
    CHECK(back.trace.labels == t.labels);
    CHECK(back.trace.sigma == t.sigma);
    CHECK(back.trace.colors == t.colors);
    CHECK(back.trace.delta_order == t.delta_order);
    REQUIRE(back.trace.decisions.size() == t.decisions.size());
    for (std::size_t k = 0; k < t.decisions.size(); ++k) {
        CHECK(back.trace.decisions[k].vertex == t.decisions[k].vertex);
        CHECK(back.trace.decisions[k].offered == t.decisions[k].offered);
        CHECK(back.trace.decisions[k].witnesses == t.decisions[k].witnesses);
        CHECK(back.trace.decisions[k].chosen == t.decisions[k].chosen);
    }

    // Serializing the reconstruction gives back the identical document.
    CHECK(trace_to_json(back.trace, back.meta) == text);
}

TEST_CASE("trace json rejects malformed input") {
    CHECK_THROWS_AS(trace_from_json("not json"), std::domain_error);
    CHECK_THROWS_AS(trace_from_json("{}"), std::domain_error);
    CHECK_THROWS_AS(
        trace_from_json(R"({"meta":{"seed":0,"n":2,"r":1,"p":0.4,"mode":"override"},"vertices":[]})"),
        std::domain_error);
    // Witness list on a big-interval vertex.
    CHECK_THROWS_AS(
        trace_from_json(R"({"meta":{"seed":0,"n":2,"r":2,"p":0.4,"mode":"override"},
                            "vertices":[{"id":0,"sigma":0.1,"interval":"Delta1","color":1,
                                         "witnesses":[0]}]})"),
        std::domain_error);
    // Missing witness list on a small-interval vertex.
    CHECK_THROWS_AS(
        trace_from_json(R"({"meta":{"seed":0,"n":2,"r":2,"p":0.4,"mode":"override"},
                            "vertices":[{"id":0,"sigma":0.5,"interval":"delta1","color":1}]})"),
        std::domain_error);
}
