#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "panchroma/conflict.hpp"
#include "panchroma/coloring.hpp"
#include "panchroma/hypergraph.hpp"
#include "panchroma/partition.hpp"

using namespace panchroma;

namespace {

Hypergraph make(int n, int vertices, std::vector<std::vector<int>> edges) {
    Hypergraph h;
    h.n = n;
    h.num_vertices = vertices;
    h.edges = std::move(edges);
    return h;
}

bool entry_is(const ShortEdgeEntry& e, int edge, int index, bool upper) {
    return e.edge == edge && e.index == index && e.missing_upper == upper;
}

// Edges C1 = {0,1}, C2 = {0,3}, C3 = {1,2}, C4 = {0,1} again, C5 = {1,4}.
// Labels: v0, v1 in delta1; v2, v3 in Delta2; v4 in Delta1 (color 1 up
// front). Processing order v0 then v1; both keep color 1 (C1 resp. C3
// lacked it), so C1 ends monochromatic in color 1.
struct MutationFixture {
    Hypergraph h = make(2, 5, {{0, 1}, {0, 3}, {1, 2}, {0, 1}, {1, 4}});
    ColoringTrace trace = run_on_labels(h, 2, {1, 1, 2, 2, 0}, {0, 1});
};

}  // namespace

TEST_CASE("short edges: r = 2 label patterns") {
    const Hypergraph h = make(2, 2, {{0, 1}});
    const auto both_low = find_short_edges(h, 2, {0, 0});
    REQUIRE(both_low.entries.size() == 1);
    CHECK(entry_is(both_low.entries[0], 0, 1, true));

    const auto both_high = find_short_edges(h, 2, {2, 2});
    REQUIRE(both_high.entries.size() == 1);
    CHECK(entry_is(both_high.entries[0], 0, 1, false));

    CHECK(find_short_edges(h, 2, {0, 2}).empty());  // spans both unions
    CHECK(find_short_edges(h, 2, {1, 1}).empty());  // delta1 sits in both
    CHECK(find_short_edges(h, 2, {0, 1}).empty());
}

TEST_CASE("short edges: entries are edge-major, by index, lower union first") {
    // One edge buried in Delta3 with r = 3: misses Delta1+delta1,
    // Delta2+delta1, and Delta2+delta2, but hits Delta3+delta2.
    const Hypergraph h = make(3, 3, {{0, 1, 2}});
    const auto rep = find_short_edges(h, 3, {4, 4, 4});
    REQUIRE(rep.entries.size() == 3);
    CHECK(entry_is(rep.entries[0], 0, 1, false));
    CHECK(entry_is(rep.entries[1], 0, 1, true));
    CHECK(entry_is(rep.entries[2], 0, 2, false));
    CHECK(rep.edges() == std::vector<int>{0});

    // Inside Delta2 with r = 3: misses Delta1+delta1 (i = 1, lower) and
    // Delta3+delta2 (i = 2, upper), but hits both unions containing Delta2.
    const auto mid = find_short_edges(h, 3, {2, 2, 2});
    REQUIRE(mid.entries.size() == 2);
    CHECK(entry_is(mid.entries[0], 0, 1, false));
    CHECK(entry_is(mid.entries[1], 0, 2, true));

    const Hypergraph two = make(2, 4, {{0, 1}, {2, 3}});
    const auto rep2 = find_short_edges(two, 2, {0, 0, 2, 2});
    REQUIRE(rep2.entries.size() == 2);
    CHECK(rep2.entries[0].edge == 0);
    CHECK(rep2.entries[1].edge == 1);
    CHECK(rep2.edges() == std::vector<int>{0, 1});
}

TEST_CASE("short edges: weight overload matches label overload") {
    const Hypergraph h = make(2, 2, {{0, 1}});
    const PartitionParams pp = params_override(2, 0.4);
    WeightAssignment w;
    w.sigma = {0.1, 0.2};  // both in Delta1 = [0, 0.3)
    const auto rep = find_short_edges(h, pp, w);
    REQUIRE(rep.entries.size() == 1);
    CHECK(entry_is(rep.entries[0], 0, 1, true));

    WeightAssignment bad;
    bad.sigma = {0.1};
    CHECK_THROWS_WITH(find_short_edges(h, pp, bad), "weights must cover every vertex");
    CHECK_THROWS_WITH(find_short_edges(h, 1, {0, 0}), "short-edge analysis requires r >= 2");
    CHECK_THROWS_WITH(find_short_edges(h, 2, {0}), "labels must cover every vertex");
}

TEST_CASE("snake-ball extraction on the hand-checked path") {
    const Hypergraph h = make(2, 3, {{0, 1}, {1, 2}});
    const PartitionParams pp = params_override(2, 0.4);
    WeightAssignment w;
    w.sigma = {0.1, 0.5, 0.7};
    const ColoringTrace t = run_coloring(h, pp, w);
    REQUIRE_FALSE(is_panchromatic(h, t).ok);
    REQUIRE(find_short_edges(h, pp, w).empty());

    const SnakeBall sb = extract_snake_ball(h, t, 0);
    CHECK(sb.edges == std::vector<int>{0, 1});
    CHECK(sb.links == std::vector<int>{1});
    CHECK(sb.delta_indices == std::vector<int>{1});
    CHECK(sb.failing_color == 2);
    CHECK(verify_snake_ball(h, t, sb).ok);

    // Re-extraction is deterministic.
    const SnakeBall again = extract_snake_ball(h, t, 0);
    CHECK(again.edges == sb.edges);
    CHECK(again.links == sb.links);
}

TEST_CASE("extraction rejects bad starting points") {
    const Hypergraph h = make(2, 3, {{0, 1}, {1, 2}});
    const PartitionParams pp = params_override(2, 0.4);

    WeightAssignment good;
    good.sigma = {0.1, 0.5, 0.7};
    const ColoringTrace failing = run_coloring(h, pp, good);
    CHECK_THROWS_WITH(extract_snake_ball(h, failing, 1),
                      "no failing edge: edge 1 does not miss color 2");
    CHECK_THROWS_WITH(extract_snake_ball(h, failing, 5),
                      "no failing edge: edge index 5 out of range");
    CHECK_THROWS_WITH(extract_snake_ball(h, failing, -1),
                      "no failing edge: edge index -1 out of range");

    // Shove every vertex into Delta1: edges are short, extraction refuses.
    WeightAssignment shorty;
    shorty.sigma = {0.1, 0.15, 0.2};
    const ColoringTrace with_short = run_coloring(h, pp, shorty);
    CHECK_THROWS_WITH(extract_snake_ball(h, with_short, 0),
                      "short edge present: extraction requires a short-edge-free run");
}

TEST_CASE("extraction picks the smallest witness edge") {
    // v1's decision sees witnesses C3 = {1,2} and its duplicate at index 4.
    Hypergraph h = make(2, 4, {{0, 1}, {0, 3}, {1, 2}, {0, 1}, {1, 2}});
    const ColoringTrace t = run_on_labels(h, 2, {1, 1, 2, 2}, {0, 1});
    REQUIRE(t.colors == std::vector<int>{1, 1, 2, 2});
    const SnakeBall sb = extract_snake_ball(h, t, 0);
    CHECK(sb.edges == std::vector<int>{0, 2});
    CHECK(sb.links == std::vector<int>{1});
    CHECK(verify_snake_ball(h, t, sb).ok);
}

TEST_CASE("verify_snake_ball pinpoints each violated invariant") {
    MutationFixture fx;
    REQUIRE(fx.trace.colors == std::vector<int>{1, 1, 2, 2, 1});
    const SnakeBall good = extract_snake_ball(fx.h, fx.trace, 0);
    CHECK(good.edges == std::vector<int>{0, 2});
    CHECK(good.links == std::vector<int>{1});
    REQUIRE(verify_snake_ball(fx.h, fx.trace, good).ok);

    SnakeBall sb = good;
    sb.edges = {0};
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "size mismatch");

    sb = good;
    sb.failing_color = 1;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "failing color mismatch");

    sb = good;
    sb.edges[1] = 9;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "edge index out of range");

    sb = good;
    sb.links[0] = 9;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "link vertex out of range");

    sb = good;
    sb.edges[0] = 2;  // C3 = {1,2} contains color 2
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "failing edge has color r");

    sb = good;
    sb.delta_indices[0] = 2;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "delta index mismatch");

    sb = good;
    sb.links[0] = 2;  // v2 sits in Delta2
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation ==
          "link vertex not in its small interval");

    sb = good;
    sb.edges[1] = 1;  // C2 = {0,3} does not contain v1
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "link vertex not in edge");

    // Chain C1 -> C2 with link v0: v1 comes later inside C1's delta1 part.
    sb = good;
    sb.edges[1] = 1;
    sb.links[0] = 0;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "link not last vertex");

    // Chain C1 -> C4 (duplicate of C1) with link v1: v0 comes earlier in C4.
    sb = good;
    sb.edges[1] = 3;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "link not first vertex");

    // Chain C1 -> C5 via v1: C5 already held color 1 through v4 in Delta1.
    sb = good;
    sb.edges[1] = 4;
    CHECK(verify_snake_ball(fx.h, fx.trace, sb).violation == "witness edge had color");

    ColoringTrace wrong_size = fx.trace;
    wrong_size.colors.pop_back();
    CHECK(verify_snake_ball(fx.h, wrong_size, good).violation ==
          "trace does not color this hypergraph");
}

TEST_CASE("tuple_forms_snake_ball agrees with the invariant checks") {
    MutationFixture fx;
    CHECK(tuple_forms_snake_ball(fx.h, fx.trace, {0, 2}));        // the real chain
    CHECK_FALSE(tuple_forms_snake_ball(fx.h, fx.trace, {0, 1}));  // link endpoints differ
    CHECK_FALSE(tuple_forms_snake_ball(fx.h, fx.trace, {0, 0}));  // self-chain endpoints differ
    CHECK_FALSE(tuple_forms_snake_ball(fx.h, fx.trace, {2, 0}));  // C3 contains color 2
    CHECK_FALSE(tuple_forms_snake_ball(fx.h, fx.trace, {1, 2}));  // endpoints differ again
    CHECK_FALSE(tuple_forms_snake_ball(fx.h, fx.trace, {0, 4}));  // C5 held color 1 already

    CHECK_THROWS_WITH(tuple_forms_snake_ball(fx.h, fx.trace, {0}),
                      "tuple must list exactly r edges");
    CHECK_THROWS_WITH(tuple_forms_snake_ball(fx.h, fx.trace, {0, 9}),
                      "unknown tuple indices");
}

TEST_CASE("every short-edge-free failure yields a verifiable snake ball") {
    // Randomized structural check; the acceptance gate runs the large version.
    const PartitionParams pp = params_override(2, 0.2);
    int failures_examined = 0;
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
        const Hypergraph h = random_uniform(2, 5, 4, seed / 2);
        const WeightAssignment w = assign_weights(h, seed * 1315423911ULL + 7);
        const ColoringTrace t = run_coloring(h, pp, w);
        const PanchromaticCheck chk = is_panchromatic(h, t);
        if (chk.ok)
            continue;
        if (!find_short_edges(h, pp.r, t.labels).empty())
            continue;
        ++failures_examined;
        for (const auto& [edge, color] : chk.failing) {
            REQUIRE(color == 2);
            SnakeBall sb;
            REQUIRE_NOTHROW(sb = extract_snake_ball(h, t, edge));
            const VerifyResult vr = verify_snake_ball(h, t, sb);
            REQUIRE_MESSAGE(vr.ok, vr.violation);
            REQUIRE(tuple_forms_snake_ball(h, t, sb.edges));
        }
    }
    CHECK(failures_examined > 0);
}

TEST_CASE("verify replays the timeline rather than trusting recorded witnesses") {
    MutationFixture fx;
    const SnakeBall sb = extract_snake_ball(fx.h, fx.trace, 0);
    ColoringTrace tampered = fx.trace;
    for (auto& d : tampered.decisions)
        d.witnesses.clear();  // corrupt the recorded sets
    CHECK(verify_snake_ball(fx.h, tampered, sb).ok);  // replay is unaffected
}
