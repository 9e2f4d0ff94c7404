#pragma once

#include <cstdint>
#include <string>

#include "panchroma/coloring.hpp"
#include "panchroma/conflict.hpp"

namespace panchroma {

// Run metadata carried alongside a trace: the weight seed, the uniformity n
// of the colored hypergraph, and how p was chosen ("formula" or "override").
struct TraceMeta {
    std::uint64_t seed = 0;
    long long n = 0;
    std::string mode = "override";
};

struct TraceWithMeta {
    ColoringTrace trace;
    TraceMeta meta;
};

// JSON layout:
//   {"meta": {"seed", "n", "r", "p", "mode"},
//    "vertices": [{"id", "sigma", "interval", "color", "witnesses"?}, ...]}
// "interval" is the interval name ("Delta2", "delta1"); "witnesses" is
// present exactly for small-interval vertices. Vertices appear in id order.
std::string trace_to_json(const ColoringTrace& trace, const TraceMeta& meta);

// Parses the layout above; throws std::domain_error on malformed input.
// delta_order and decisions are rebuilt from sigma and the witness lists.
TraceWithMeta trace_from_json(const std::string& text);

std::string snake_ball_to_json(const SnakeBall& sb);

}  // namespace panchroma
