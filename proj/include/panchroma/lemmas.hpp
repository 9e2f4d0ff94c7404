#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "panchroma/hypergraph.hpp"

namespace panchroma::lemmas {

using BigInt = boost::multiprecision::cpp_int;

// Symmetric nonnegative integer matrix with zero diagonal; x[i][j] plays the
// role of the intersection size |C_i cap C_j| of an edge tuple.
struct IntersectionMatrix {
    int r = 0;
    std::vector<std::vector<long long>> x;
};

IntersectionMatrix zero_matrix(int r);
IntersectionMatrix matrix_from_tuple(const Hypergraph& h, const std::vector<int>& tuple);
void require_valid(const IntersectionMatrix& m);

// Sum over all permutations (i_1..i_r) of the chain products
// x[i_1][i_2] * x[i_2][i_3] * ... * x[i_{r-1}][i_r], by exhaustive
// enumeration. Rejects r > 9.
BigInt perm_sum_bruteforce(const IntersectionMatrix& m);

// Checks perm_sum <= ((2 sum_{i<j} x[i][j] + r)/r)^r with exact integer
// arithmetic (both sides scaled by r^r).
struct Lemma2Result {
    BigInt lhs;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    bool ok = false;
};
Lemma2Result lemma2_check(const IntersectionMatrix& m);

// For a chain (i_1..i_r), a permutation of 1..r, returns the per-bracket
// selection vector sel where sel[i-1] = j means bracket i contributes the
// factor x[i][j], and sel[i-1] = 0 means bracket i contributes the factor 1.
// The chain maps bracket i_k to x[i_k][i_{k+1}] for k < r and bracket i_r to 1.
std::vector<int> injection_map(const std::vector<int>& chain);

struct InequalityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// (1 - s(1-p)/r) / (1 - ((1-p)/r + 2p/(r-1)))^s <= exp(-s^2/(20 r^2)),
// guarded to the regime s in {2..r-1}, p in (0,1), p r < 1/100.
InequalityResult lemma3_check(int r, double p, int s);

// prod_v ratio(s(v)) * perm_sum(m) <= 20^r r^{2r} e^{-r+1}, with the
// overlap multiset and matrix required to satisfy the double-counting
// identity sum_{i<j} m[i][j] = sum_v C(s(v), 2).
InequalityResult lemma4_check(int r, double p, const std::vector<int>& s_values,
                              const IntersectionMatrix& m);

// 1 + 1/(r-1) > exp(1/r + 1/(2r^2)), decided in log space so the shrinking
// margin (about 1/(3r^3)) survives r up to 10^6.
struct CorollaryResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double log_margin = 0.0;  // ln(lhs) - ln(rhs)
    bool ok = false;
};
CorollaryResult corollary_inequality_check(long long r);

// Smallest n with 100 r^3 ln n <= n (the admissibility constraint on r).
long long minimal_admissible_n(int r);

struct SweepRow {
    std::string lemma;
    std::string params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool ok = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    bool all_ok = true;
    void append(const SweepReport& other);
};

SweepReport lemma2_sweep(std::uint64_t seed = 2024, int samples_per_r = 100);
SweepReport injection_sweep(int max_r = 5);
SweepReport lemma3_sweep(int r_lo = 4, int r_hi = 30);
SweepReport lemma4_sweep(std::uint64_t seed = 2024, int samples_per_r = 50);
SweepReport corollary_sweep(long long r_max = 1000000);
SweepReport run_all_sweeps();

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

}  // namespace panchroma::lemmas
