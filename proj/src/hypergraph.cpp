#include "panchroma/hypergraph.hpp"
#include "panchroma/rng.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace panchroma {

ValidationResult validate(const Hypergraph& h) {
    if (h.n <= 0)
        return {false, "uniformity n must be positive"};
    if (h.num_vertices < 0)
        return {false, "num_vertices must be nonnegative"};
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if (static_cast<int>(e.size()) != h.n)
            return {false, "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                               " vertices, expected " + std::to_string(h.n)};
        for (int v : e) {
            if (v < 0 || v >= h.num_vertices)
                return {false, "vertex id out of range in edge " + std::to_string(i)};
        }
        std::vector<int> sorted(e);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {false, "duplicate vertex in edge " + std::to_string(i)};
    }
    return {};
}

void require_valid(const Hypergraph& h) {
    auto res = validate(h);
    if (!res.ok)
        throw std::invalid_argument("invalid hypergraph: " + res.violation);
}

Hypergraph random_uniform(int n, int num_vertices, int num_edges, std::uint64_t seed) {
    if (n <= 0)
        throw std::invalid_argument("uniformity n must be positive");
    if (n > num_vertices)
        throw std::invalid_argument("n exceeds num_vertices: no n-subset exists");
    if (num_edges < 0)
        throw std::invalid_argument("num_edges must be nonnegative");

    Hypergraph h;
    h.n = n;
    h.num_vertices = num_vertices;
    h.edges.reserve(static_cast<std::size_t>(num_edges));

    Rng rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(num_vertices));
    for (int e = 0; e < num_edges; ++e) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int k = 0; k < n; ++k) {
            const auto j = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vertices - k)));
            std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<int> edge(pool.begin(), pool.begin() + n);
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(std::move(edge));
    }
    return h;
}

std::vector<std::vector<int>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(h.num_vertices));
    for (int e = 0; e < h.num_edges(); ++e)
        for (int v : h.edges[static_cast<std::size_t>(e)])
            inc[static_cast<std::size_t>(v)].push_back(e);
    return inc;
}

EdgeDegreeProfile edge_degrees(const Hypergraph& h) {
    const auto inc = incidence_lists(h);
    EdgeDegreeProfile prof;
    prof.degree.assign(static_cast<std::size_t>(h.num_edges()), 0);
    std::vector<int> last_seen(static_cast<std::size_t>(h.num_edges()), -1);
    for (int e = 0; e < h.num_edges(); ++e) {
        int deg = 0;
        for (int v : h.edges[static_cast<std::size_t>(e)]) {
            for (int other : inc[static_cast<std::size_t>(v)]) {
                if (other != e && last_seen[static_cast<std::size_t>(other)] != e) {
                    last_seen[static_cast<std::size_t>(other)] = e;
                    ++deg;
                }
            }
        }
        prof.degree[static_cast<std::size_t>(e)] = deg;
        prof.max_degree = std::max(prof.max_degree, deg);
    }
    return prof;
}

int edge_intersection_size(const Hypergraph& h, int a, int b) {
    const auto& ea = h.edges[static_cast<std::size_t>(a)];
    std::set<int> sa(ea.begin(), ea.end());
    int count = 0;
    for (int v : h.edges[static_cast<std::size_t>(b)])
        count += sa.count(v) ? 1 : 0;
    return count;
}

bool structurally_equal(const Hypergraph& a, const Hypergraph& b) {
    return a.n == b.n && a.num_vertices == b.num_vertices && a.edges == b.edges;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("hg parse error at line " + std::to_string(line) + ": " + what);
}

} // namespace

Hypergraph read_hg(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        parse_fail(1, "missing header");
    std::istringstream header(line);
    std::string magic;
    Hypergraph h;
    int num_edges = 0;
    if (!(header >> magic >> h.n >> h.num_vertices >> num_edges) || magic != "hg")
        parse_fail(1, "expected 'hg <n> <num_vertices> <num_edges>'");
    std::string trailing;
    if (header >> trailing)
        parse_fail(1, "trailing tokens after header");
    if (num_edges < 0)
        parse_fail(1, "negative edge count");

    h.edges.reserve(static_cast<std::size_t>(num_edges));
    for (int e = 0; e < num_edges; ++e) {
        if (!std::getline(in, line))
            parse_fail(e + 2, "unexpected end of input, expected edge " + std::to_string(e));
        std::istringstream edge_line(line);
        std::vector<int> edge;
        int v;
        while (edge_line >> v)
            edge.push_back(v);
        if (!edge_line.eof())
            parse_fail(e + 2, "non-integer token in edge " + std::to_string(e));
        if (static_cast<int>(edge.size()) != h.n)
            parse_fail(e + 2, "edge " + std::to_string(e) + " has " + std::to_string(edge.size()) +
                                  " vertices, expected " + std::to_string(h.n));
        h.edges.push_back(std::move(edge));
    }
    auto res = validate(h);
    if (!res.ok)
        throw std::runtime_error("hg validation failed: " + res.violation);
    return h;
}

Hypergraph read_hg_string(const std::string& text) {
    std::istringstream in(text);
    return read_hg(in);
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
    out << "hg " << h.n << ' ' << h.num_vertices << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t k = 0; k < e.size(); ++k)
            out << (k ? " " : "") << e[k];
        out << '\n';
    }
}

std::string write_hg_string(const Hypergraph& h) {
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

} // namespace panchroma
