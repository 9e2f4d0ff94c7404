#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "panchroma/hypergraph.hpp"

namespace panchroma {

// Provenance of the partition parameter p: computed from the (n, r) formula
// or supplied directly by the caller.
enum class PProvenance { formula, override_value };

struct PartitionParams {
    int r = 2;
    double p = 0.0;
    PProvenance provenance = PProvenance::override_value;
};

// p(n, r) = ((r-1)/r) * (r-1)^2 * ln(n / ln n) / n.
// Requires n >= 3 and r >= 2; returns the raw formula value (may exceed 1
// for small n and large r, in which case it cannot seed valid params).
double compute_p(long long n, int r);

// Validates 0 < p < 1 and r >= 2; throws std::domain_error otherwise.
void require_valid(const PartitionParams& params);

PartitionParams params_from_formula(long long n, int r);
PartitionParams params_override(int r, double p);

// The unit interval [0,1) is split into 2r-1 half-open pieces
//   Delta_1, delta_1, Delta_2, ..., delta_{r-1}, Delta_r
// where each Delta_i has length (1-p)/r and each delta_i has length p/(r-1).
// Codes: even code 2k   -> Delta_{k+1}  (k = 0..r-1)
//        odd  code 2k+1 -> delta_{k+1}  (k = 0..r-2)
using IntervalCode = int;

inline bool is_big_interval(IntervalCode code) { return code % 2 == 0; }
inline bool is_small_interval(IntervalCode code) { return code % 2 == 1; }
// 1-based interval index i of Delta_i / delta_i.
inline int interval_number(IntervalCode code) { return code / 2 + 1; }
inline IntervalCode big_interval_code(int i) { return 2 * (i - 1); }
inline IntervalCode small_interval_code(int i) { return 2 * (i - 1) + 1; }
// For a small interval code, the color offered in step 2 (= interval number).
inline int offered_color(IntervalCode code) { return (code + 1) / 2; }

std::string interval_name(IntervalCode code);                  // "Delta3", "delta1"
IntervalCode parse_interval_name(const std::string& name, int r);

struct Interval {
    IntervalCode code = 0;
    double start = 0.0;
    double end = 0.0;
    double length() const { return end - start; }
};

struct IntervalLayout {
    int r = 0;
    double p = 0.0;
    double big_length = 0.0;    // (1-p)/r
    double small_length = 0.0;  // p/(r-1)
    std::vector<Interval> intervals;  // 2r-1 contiguous pieces covering [0,1)
};

IntervalLayout interval_layout(const PartitionParams& params);

// Maps sigma in [0,1) to the interval containing it, consistent with
// interval_layout boundaries. Throws std::domain_error for sigma outside [0,1).
IntervalCode locate(double sigma, const PartitionParams& params);

struct WeightAssignment {
    std::vector<double> sigma;  // per-vertex, each in [0,1)
};

// Independent uniform draws in [0,1), one per vertex, deterministic in seed.
WeightAssignment assign_weights(const Hypergraph& h, std::uint64_t seed);

}  // namespace panchroma
