#pragma once

#include <utility>
#include <vector>

#include "panchroma/hypergraph.hpp"
#include "panchroma/partition.hpp"

namespace panchroma {

// Decision record for one small-interval vertex: the vertex was offered the
// color of its interval; `witnesses` lists the edges containing it that
// lacked that color at decision time; the vertex keeps the offered color iff
// at least one witness exists, otherwise it takes offered+1.
struct Decision {
    int vertex = -1;
    int offered = 0;
    std::vector<int> witnesses;
    int chosen = 0;
};

struct ColoringTrace {
    int r = 0;
    double p = 0.0;                    // 0 when the run was label-driven with no real p
    std::vector<IntervalCode> labels;  // per-vertex interval
    std::vector<double> sigma;         // per-vertex weights; empty for label-driven runs
    std::vector<int> colors;           // per-vertex final color in [1..r]
    std::vector<int> delta_order;      // small-interval vertices in processing order
    std::vector<Decision> decisions;   // one per delta_order entry, same order
};

// Position of each vertex in the processing timeline: -1 for big-interval
// vertices (colored up front), otherwise the index within delta_order.
std::vector<int> processing_positions(const ColoringTrace& trace);

// Core two-step coloring. Step 1 gives every big-interval vertex the color of
// its interval. Step 2 walks `delta_order` (which must enumerate exactly the
// small-interval vertices); each vertex is offered its interval's color and
// keeps it iff some incident edge has no vertex of that color among the
// vertices colored so far, else takes the next color.
ColoringTrace run_on_labels(const Hypergraph& h, int r, const std::vector<IntervalCode>& labels,
                            const std::vector<int>& delta_order);

// Small-interval vertices sorted by ascending weight, ties by vertex index.
std::vector<int> delta_processing_order(const std::vector<IntervalCode>& labels,
                                        const std::vector<double>& sigma);

// Weight-driven wrapper: labels from locate(), order from ascending sigma.
ColoringTrace run_coloring(const Hypergraph& h, const PartitionParams& params,
                           const WeightAssignment& weights);

struct PanchromaticCheck {
    bool ok = true;
    std::vector<std::pair<int, int>> failing;  // (edge index, missing color)
};

// True iff every edge contains every color in [1..r]; otherwise lists every
// (edge, missing color) pair in edge-major order.
PanchromaticCheck is_panchromatic(const Hypergraph& h, const ColoringTrace& trace);

}  // namespace panchroma
