#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "panchroma/hypergraph.hpp"

namespace panchroma::oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct RationalProbability {
    BigRational value;  // in [0,1], kept in lowest terms by the representation
    std::string fraction() const;            // "17/25"
    std::string decimal(int digits = 15) const;
    double to_double() const;
};

// Accepts "a/b", plain integers, and decimal literals like "0.2".
BigRational parse_rational(const std::string& text);

struct EnumerationBudget {
    int max_vertices = 12;
    long long max_work = 100000000;  // sum over assignments of prod m_i!
};

struct SearchBudget {
    int max_vertices = 16;
    double max_states = 1e8;  // r^num_vertices fallback cap
};

struct PanchromaticWitness {
    bool exists = false;
    std::vector<int> coloring;  // per-vertex color in [1..r] when exists
};

// Decides whether any panchromatic r-coloring exists, by backtracking with
// forward checking (exact). Requires num_vertices <= max_vertices or
// r^num_vertices <= max_states; otherwise throws "budget exceeded".
PanchromaticWitness panchromatic_exists(const Hypergraph& h, int r,
                                        const SearchBudget& budget = {});

// Exact probability that the two-step coloring succeeds, computed by
// enumerating every interval assignment (weighted by exact interval lengths)
// and averaging over the per-small-interval processing orders. The run's
// outcome depends on the weights only through interval membership and the
// within-interval orderings, so this enumeration is exhaustive.
RationalProbability exact_success_probability(const Hypergraph& h, int r, const BigRational& p,
                                              const EnumerationBudget& budget = {});

enum class EventKind { edge_is_short, snake_ball, failure };

struct EventSpec {
    EventKind kind = EventKind::failure;
    int edge = -1;             // edge_is_short: which edge
    std::vector<int> tuple;    // snake_ball: the ordered edge tuple
};

// Same enumeration with the indicator replaced by the named event:
//   edge_is_short  -- the given edge is short;
//   snake_ball     -- the given ordered tuple forms a snake ball and none of
//                     its edges is short;
//   failure        -- the final coloring is not panchromatic.
RationalProbability exact_event_probability(const Hypergraph& h, int r, const BigRational& p,
                                            const EventSpec& event,
                                            const EnumerationBudget& budget = {});

// The enumeration work that the budget meters: sum over interval assignments
// of the number of within-interval order combinations.
BigInt enumeration_work(int num_vertices, int r);

}  // namespace panchroma::oracle
