#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace panchroma {

// n-uniform hypergraph with dense vertex ids [0, num_vertices).
// Edges are addressed by their position in `edges`; duplicates are allowed
// (expected-count arguments sum over the edge list). Values are immutable
// after construction by convention: nothing in this library mutates a
// Hypergraph it did not just build.
struct Hypergraph {
    int n = 0;             // edge uniformity
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;

    int num_edges() const { return static_cast<int>(edges.size()); }
};

struct ValidationResult {
    bool ok = true;
    std::string violation; // empty iff ok

    explicit operator bool() const { return ok; }
};

// Checks the Hypergraph invariants and names the first violation
// (with the offending edge index) if any.
ValidationResult validate(const Hypergraph& h);

// Throwing wrapper for call sites that require a valid hypergraph.
void require_valid(const Hypergraph& h);

// Each edge drawn independently and uniformly among all n-subsets of the
// vertex set (partial Fisher-Yates), vertices within an edge sorted
// ascending. Deterministic given seed. Rejects n > num_vertices.
Hypergraph random_uniform(int n, int num_vertices, int num_edges, std::uint64_t seed);

// Per-edge degrees: number of *other* list positions whose edge shares at
// least one vertex. Duplicate edges count separately.
struct EdgeDegreeProfile {
    std::vector<int> degree; // one per edge
    int max_degree = 0;      // D(H); 0 for the empty edge list
};

EdgeDegreeProfile edge_degrees(const Hypergraph& h);

// Canonical .hg text format:
//   hg <n> <num_vertices> <num_edges>\n
// then one line per edge, n space-separated vertex ids, newline-terminated.
// write(read(t)) == t for canonical text and read(write(h)) == h for valid h.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_string(const std::string& text);
Hypergraph read_hg_file(const std::string& path);
void write_hg(std::ostream& out, const Hypergraph& h);
std::string write_hg_string(const Hypergraph& h);

// vertex -> list of incident edge indices (ascending)
std::vector<std::vector<int>> incidence_lists(const Hypergraph& h);

// |edges[a] cap edges[b]|
int edge_intersection_size(const Hypergraph& h, int a, int b);

bool structurally_equal(const Hypergraph& a, const Hypergraph& b);

} // namespace panchroma
