#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "panchroma/oracle.hpp"

using namespace panchroma;
using namespace panchroma::oracle;

namespace {

Hypergraph make(int n, int vertices, std::vector<std::vector<int>> edges) {
    Hypergraph h;
    h.n = n;
    h.num_vertices = vertices;
    h.edges = std::move(edges);
    return h;
}

const BigRational kFifth = BigRational(1, 5);

}  // namespace

TEST_CASE("rational literals parse and render") {
    CHECK(parse_rational("17/25") == BigRational(17, 25));
    CHECK(parse_rational("3/6") == BigRational(1, 2));
    CHECK(parse_rational("2") == BigRational(2));
    CHECK(parse_rational("0.2") == kFifth);
    CHECK(parse_rational("0.125") == BigRational(1, 8));
    CHECK(parse_rational("1.5") == BigRational(3, 2));

    CHECK_THROWS_WITH(parse_rational(""), "empty rational literal");
    CHECK_THROWS_WITH(parse_rational("abc"), "malformed rational: abc");
    CHECK_THROWS_WITH(parse_rational("1/0"), "zero denominator: 1/0");
    CHECK_THROWS_WITH(parse_rational("-1/2"), "malformed rational: -1/2");
    CHECK_THROWS_WITH(parse_rational("1.5.2"), "malformed rational: 1.5.2");
    CHECK_THROWS_WITH(parse_rational("1/2/3"), "malformed rational: 1/2/3");

    RationalProbability prob;
    prob.value = BigRational(17, 25);
    CHECK(prob.fraction() == "17/25");
    CHECK(prob.decimal() == "0.680000000000000");
    CHECK(prob.decimal(3) == "0.680");
    CHECK(prob.to_double() == doctest::Approx(0.68).epsilon(1e-15));

    prob.value = BigRational(2, 3);
    CHECK(prob.decimal() == "0.666666666666667");  // round half up at digit 15
    prob.value = BigRational(1);
    CHECK(prob.fraction() == "1");
    CHECK(prob.decimal() == "1.000000000000000");
    prob.value = BigRational(0);
    CHECK(prob.fraction() == "0");
    CHECK(prob.decimal(4) == "0.0000");
    CHECK_THROWS_WITH(prob.decimal(0), "decimal rendering needs at least one digit");
}

TEST_CASE("exact search for panchromatic colorings") {
    const Hypergraph single = make(2, 2, {{0, 1}});
    const PanchromaticWitness w = panchromatic_exists(single, 2);
    CHECK(w.exists);
    REQUIRE(w.coloring.size() == 2);
    CHECK(w.coloring[0] != w.coloring[1]);

    // The triangle admits no proper 2-coloring, so three 2-edges suffice to
    // defeat two colors.
    const Hypergraph tri = make(2, 3, {{0, 1}, {1, 2}, {0, 2}});
    const PanchromaticWitness none = panchromatic_exists(tri, 2);
    CHECK_FALSE(none.exists);
    CHECK(none.coloring.empty());

    // Any two 2-edges are colorable.
    for (const auto& pair : std::vector<std::vector<std::vector<int>>>{
             {{0, 1}, {0, 1}}, {{0, 1}, {1, 2}}, {{0, 1}, {2, 3}}}) {
        const Hypergraph h = make(2, 4, pair);
        CHECK(panchromatic_exists(h, 2).exists);
    }

    // Edges narrower than the palette are hopeless; vacuous without edges.
    CHECK_FALSE(panchromatic_exists(make(2, 3, {{0, 1}}), 3).exists);
    CHECK(panchromatic_exists(make(2, 3, {}), 3).exists);
    CHECK(panchromatic_exists(make(1, 0, {}), 2).exists);

    // Single color: always satisfiable.
    const PanchromaticWitness mono = panchromatic_exists(single, 1);
    CHECK(mono.exists);
    CHECK(mono.coloring == std::vector<int>{1, 1});
    CHECK_THROWS_WITH(panchromatic_exists(single, 0),
                      "panchromatic search requires r >= 1");
}

TEST_CASE("search witnesses are valid colorings") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Hypergraph h = random_uniform(3, 6, 4, seed);
        const PanchromaticWitness w = panchromatic_exists(h, 3);
        if (!w.exists)
            continue;
        REQUIRE(w.coloring.size() == 6);
        for (const auto& edge : h.edges) {
            std::set<int> colors;
            for (int v : edge) {
                CHECK(w.coloring[static_cast<std::size_t>(v)] >= 1);
                CHECK(w.coloring[static_cast<std::size_t>(v)] <= 3);
                colors.insert(w.coloring[static_cast<std::size_t>(v)]);
            }
            CHECK(colors.size() == 3);
        }
    }
}

TEST_CASE("search budget guard") {
    Hypergraph big = make(2, 40, {{0, 1}});
    CHECK_THROWS_WITH(panchromatic_exists(big, 2),
                      "budget exceeded: instance too large for exact search");
    // 17 vertices exceed the vertex cap but 2^17 states fit the fallback.
    Hypergraph mid = make(2, 17, {{0, 1}});
    CHECK(panchromatic_exists(mid, 2).exists);
}

TEST_CASE("enumeration work counts order combinations") {
    CHECK(enumeration_work(0, 2) == 1);
    CHECK(enumeration_work(2, 2) == 10);
    CHECK(enumeration_work(3, 2) == 38);
    CHECK(enumeration_work(1, 3) == 5);
    // Growth sanity: adding a vertex multiplies work by more than 2r-1.
    CHECK(enumeration_work(6, 2) > 5 * enumeration_work(5, 2));
}

TEST_CASE("exact success probability on the frozen fixtures") {
    const Hypergraph single = make(2, 2, {{0, 1}});
    const RationalProbability s = exact_success_probability(single, 2, kFifth);
    CHECK(s.fraction() == "17/25");
    CHECK(s.decimal() == "0.680000000000000");

    const Hypergraph path = make(2, 3, {{0, 1}, {1, 2}});
    const RationalProbability ps = exact_success_probability(path, 2, kFifth);
    CHECK(ps.fraction() == "146/375");

    // No edges: success is certain.
    CHECK(exact_success_probability(make(2, 2, {}), 2, kFifth).fraction() == "1");
    CHECK(exact_success_probability(make(2, 1, {}), 2, kFifth).fraction() == "1");
    CHECK(exact_success_probability(make(1, 0, {}), 2, kFifth).fraction() == "1");
}

TEST_CASE("exact event probabilities on the frozen fixtures") {
    const Hypergraph single = make(2, 2, {{0, 1}});
    EventSpec fail;
    fail.kind = EventKind::failure;
    CHECK(exact_event_probability(single, 2, kFifth, fail).fraction() == "8/25");

    EventSpec short0;
    short0.kind = EventKind::edge_is_short;
    short0.edge = 0;
    CHECK(exact_event_probability(single, 2, kFifth, short0).fraction() == "8/25");

    const Hypergraph path = make(2, 3, {{0, 1}, {1, 2}});
    CHECK(exact_event_probability(path, 2, kFifth, short0).fraction() == "8/25");
    CHECK(exact_event_probability(path, 2, kFifth, fail).fraction() == "229/375");

    EventSpec snake;
    snake.kind = EventKind::snake_ball;
    snake.tuple = {0, 1};
    CHECK(exact_event_probability(path, 2, kFifth, snake).fraction() == "37/750");
    CHECK(exact_event_probability(path, 2, kFifth, snake).decimal() ==
          "0.049333333333333");

    // A tuple chained through the same edge twice never forms a ball here.
    EventSpec self_chain;
    self_chain.kind = EventKind::snake_ball;
    self_chain.tuple = {0, 0};
    CHECK(exact_event_probability(single, 2, kFifth, self_chain).fraction() == "0");
}

TEST_CASE("success and failure probabilities are exactly complementary") {
    const std::vector<Hypergraph> fixtures = {
        make(2, 2, {{0, 1}}),
        make(2, 3, {{0, 1}, {1, 2}}),
        make(2, 3, {{0, 1}, {1, 2}, {0, 2}}),
        make(3, 4, {{0, 1, 2}, {1, 2, 3}}),
    };
    for (const auto& h : fixtures) {
        for (const BigRational& p : {kFifth, BigRational(1, 10), BigRational(1, 3)}) {
            const int r = h.n;  // n-uniform with r = n keeps events nontrivial
            const RationalProbability s = exact_success_probability(h, r, p);
            EventSpec fail;
            fail.kind = EventKind::failure;
            const RationalProbability f = exact_event_probability(h, r, p, fail);
            CHECK(s.value + f.value == BigRational(1));
        }
    }
}

TEST_CASE("enumeration budget guards") {
    Hypergraph wide = make(2, 13, {{0, 1}});
    CHECK_THROWS_WITH(exact_success_probability(wide, 2, kFifth),
                      "budget exceeded: more than 12 vertices");

    EnumerationBudget tight;
    tight.max_work = 9;
    const Hypergraph single = make(2, 2, {{0, 1}});
    CHECK_THROWS_WITH(exact_success_probability(single, 2, kFifth, tight),
                      "budget exceeded: enumeration work above 9");

    CHECK_THROWS_WITH(exact_success_probability(single, 1, kFifth),
                      "exact enumeration requires r >= 2");
    CHECK_THROWS_WITH(exact_success_probability(single, 2, BigRational(1)),
                      "partition parameter p must lie in (0,1)");
    CHECK_THROWS_WITH(exact_success_probability(single, 2, BigRational(0)),
                      "partition parameter p must lie in (0,1)");

    EventSpec bad_edge;
    bad_edge.kind = EventKind::edge_is_short;
    bad_edge.edge = 7;
    CHECK_THROWS_WITH(exact_event_probability(single, 2, kFifth, bad_edge),
                      "unknown edge index");
    EventSpec bad_tuple;
    bad_tuple.kind = EventKind::snake_ball;
    bad_tuple.tuple = {0};
    CHECK_THROWS_WITH(exact_event_probability(single, 2, kFifth, bad_tuple),
                      "snake-ball event needs an ordered tuple of r edges");
    bad_tuple.tuple = {0, 5};
    CHECK_THROWS_WITH(exact_event_probability(single, 2, kFifth, bad_tuple),
                      "unknown tuple indices");
}
