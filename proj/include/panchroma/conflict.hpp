#pragma once

#include <string>
#include <vector>

#include "panchroma/coloring.hpp"
#include "panchroma/hypergraph.hpp"
#include "panchroma/partition.hpp"

namespace panchroma {

// An edge is "short" for index i (1 <= i <= r-1) when it misses the union
// Delta_i + delta_i entirely (missing_upper = false) or the union
// Delta_{i+1} + delta_i entirely (missing_upper = true).
struct ShortEdgeEntry {
    int edge = -1;
    int index = 0;        // the i of the violated union
    bool missing_upper = false;
};

struct ShortEdgeReport {
    std::vector<ShortEdgeEntry> entries;  // edge-major, then by i, lower union first
    bool empty() const { return entries.empty(); }
    // Distinct short edges in increasing index order.
    std::vector<int> edges() const;
};

ShortEdgeReport find_short_edges(const Hypergraph& h, int r,
                                 const std::vector<IntervalCode>& labels);
ShortEdgeReport find_short_edges(const Hypergraph& h, const PartitionParams& params,
                                 const WeightAssignment& weights);

// Failure certificate: edges C_1..C_r chained by link vertices v_1..v_{r-1},
// where v_j lies in delta_{r-j}, is the last processed vertex of
// C_j intersect delta_{r-j}, the first of C_{j+1} intersect delta_{r-j}, and
// C_{j+1} lacked color r-j at the moment v_j was colored. C_1 misses color r.
struct SnakeBall {
    std::vector<int> edges;          // C_1..C_r
    std::vector<int> links;          // v_1..v_{r-1}
    std::vector<int> delta_indices;  // r-1, r-2, ..., 1 (interval of each link)
    int failing_color = 0;           // always r
};

// Builds the certificate starting from `failing_edge` (which must miss color
// r) in a run with no short edge. Witness edges are chosen by smallest edge
// index, so extraction is deterministic. Throws std::domain_error("no failing
// edge...") or ("short edge present...") on violated preconditions, and
// std::logic_error("witness missing...") if the chain cannot be continued --
// the latter is unreachable for traces produced by run_on_labels.
SnakeBall extract_snake_ball(const Hypergraph& h, const ColoringTrace& trace, int failing_edge);

struct VerifyResult {
    bool ok = true;
    std::string violation;
};

// Independently re-checks every SnakeBall invariant by replaying the trace
// timeline (labels, colors, processing order only -- recorded witness sets
// are not consulted). Returns the first violation found.
VerifyResult verify_snake_ball(const Hypergraph& h, const ColoringTrace& trace,
                               const SnakeBall& sb);

// Whether the fixed ordered tuple (C_1..C_r) forms a snake ball under the
// trace: link vertices exist, coincide, and satisfy the replay checks above.
bool tuple_forms_snake_ball(const Hypergraph& h, const ColoringTrace& trace,
                            const std::vector<int>& tuple);

}  // namespace panchroma
