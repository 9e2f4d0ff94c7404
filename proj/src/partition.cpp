#include "panchroma/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "panchroma/rng.hpp"

namespace panchroma {

double compute_p(long long n, int r) {
    if (n < 3)
        throw std::domain_error("compute_p requires n >= 3");
    if (r < 2)
        throw std::domain_error("compute_p requires r >= 2");
    const double nd = static_cast<double>(n);
    const double rm1 = static_cast<double>(r - 1);
    return (rm1 / r) * rm1 * rm1 * std::log(nd / std::log(nd)) / nd;
}

void require_valid(const PartitionParams& params) {
    if (params.r < 2)
        throw std::domain_error("partition params require r >= 2");
    if (!(params.p > 0.0) || !(params.p < 1.0))
        throw std::domain_error("partition parameter p must lie in (0,1)");
}

PartitionParams params_from_formula(long long n, int r) {
    PartitionParams params{r, compute_p(n, r), PProvenance::formula};
    require_valid(params);
    return params;
}

PartitionParams params_override(int r, double p) {
    PartitionParams params{r, p, PProvenance::override_value};
    require_valid(params);
    return params;
}

std::string interval_name(IntervalCode code) {
    if (code < 0)
        throw std::domain_error("negative interval code");
    return (is_big_interval(code) ? "Delta" : "delta") + std::to_string(interval_number(code));
}

IntervalCode parse_interval_name(const std::string& name, int r) {
    bool big = false;
    std::size_t prefix = 0;
    if (name.rfind("Delta", 0) == 0) {
        big = true;
        prefix = 5;
    } else if (name.rfind("delta", 0) == 0) {
        prefix = 5;
    } else {
        throw std::domain_error("unknown interval name: " + name);
    }
    int index = 0;
    try {
        index = std::stoi(name.substr(prefix));
    } catch (const std::exception&) {
        throw std::domain_error("unknown interval name: " + name);
    }
    if (index < 1 || (big && index > r) || (!big && index > r - 1))
        throw std::domain_error("interval index out of range: " + name);
    return big ? big_interval_code(index) : small_interval_code(index);
}

namespace {

// Combined length of one Delta-plus-delta block, (1-p)/r + p/(r-1), computed
// as a single quotient so that block boundaries land on the same doubles the
// closed-form interval endpoints produce (e.g. r=2, p=0.2 gives exactly 0.6).
double block_length(int r, double p) {
    return (static_cast<double>(r) - 1.0 + p) / (static_cast<double>(r) * (r - 1));
}

}  // namespace

IntervalLayout interval_layout(const PartitionParams& params) {
    require_valid(params);
    const int r = params.r;
    const double p = params.p;
    const double big = (1.0 - p) / r;
    const double block = block_length(r, p);

    // Shared boundary array: interval j is [b[j], b[j+1]), so consecutive
    // endpoints agree exactly and total length telescopes to 1.
    std::vector<double> b(static_cast<std::size_t>(2 * r));
    for (int k = 0; k < r; ++k) {
        b[static_cast<std::size_t>(2 * k)] = k * block;
        if (k < r - 1)
            b[static_cast<std::size_t>(2 * k + 1)] = k * block + big;
    }
    b[static_cast<std::size_t>(2 * r - 1)] = 1.0;

    IntervalLayout layout;
    layout.r = r;
    layout.p = p;
    layout.big_length = big;
    layout.small_length = p / (r - 1);
    layout.intervals.reserve(static_cast<std::size_t>(2 * r - 1));
    for (int code = 0; code < 2 * r - 1; ++code)
        layout.intervals.push_back(Interval{code, b[static_cast<std::size_t>(code)],
                                            b[static_cast<std::size_t>(code + 1)]});
    return layout;
}

IntervalCode locate(double sigma, const PartitionParams& params) {
    require_valid(params);
    if (!(sigma >= 0.0) || !(sigma < 1.0))
        throw std::domain_error("sigma must lie in [0,1)");
    const int r = params.r;
    const double block = block_length(r, params.p);
    int k = static_cast<int>(std::floor(sigma / block));
    if (k > r - 1)
        k = r - 1;
    // Guard against division rounding across a block boundary.
    if (k > 0 && sigma < k * block)
        --k;
    else if (k < r - 1 && sigma >= (k + 1) * block)
        ++k;
    if (k == r - 1)
        return big_interval_code(r);
    const double mid = k * block + (1.0 - params.p) / r;  // Delta/delta split in block k
    return sigma < mid ? big_interval_code(k + 1) : small_interval_code(k + 1);
}

WeightAssignment assign_weights(const Hypergraph& h, std::uint64_t seed) {
    WeightAssignment w;
    w.sigma.resize(static_cast<std::size_t>(h.num_vertices));
    Rng rng(seed);
    for (auto& s : w.sigma)
        s = rng.uniform01();
    return w;
}

}  // namespace panchroma
