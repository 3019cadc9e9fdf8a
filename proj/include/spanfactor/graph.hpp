#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spanfactor {

inline constexpr int kMaxVertices = 64;

// Vertex subset as a bitmask, bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Simple undirected graph on 1..64 vertices, one 64-bit adjacency row per
/// vertex. Values are cheap to copy and immutable by convention: every
/// operation in this library is a pure function returning a fresh Graph.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    std::uint64_t row(int v) const { return rows_[static_cast<unsigned>(v)]; }
    bool adjacent(int u, int v) const { return (rows_[static_cast<unsigned>(u)] >> v) & 1u; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    int min_degree() const;
    int isolated_count() const;
    bool is_connected() const;
    int component_count() const;
    VertexSet component_of(int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

// Constructors for the basic families.
Graph complete_graph(int n);
Graph empty_graph(int n);
// Canonical t-regular graph on n vertices: i ~ i±1..i±⌊t/2⌋ (mod n), plus the
// diameter i ~ i+n/2 when t is odd. Throws if n·t is odd.
Graph circulant_graph(int n, int t);

Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
// Induced subgraph on the complement of s; surviving vertices keep their
// relative order. Throws if s covers all vertices.
Graph delete_vertices(const Graph& g, VertexSet s);

struct GraphStats {
    int edge_count;
    int min_degree;
    int isolated_count;
    bool is_connected;
    int component_count;
};
GraphStats stats(const Graph& g);

// Exact vertex connectivity; n−1 for complete graphs. Subset enumeration for
// n ≤ 16, unit-capacity vertex-split max-flow for larger orders.
int vertex_connectivity(const Graph& g);

// graph6 short form (n ≤ 62): byte n+63, then the column-major upper-triangle
// bits packed 6 per byte, each value offset by 63.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

// Adjacency-preserving bijection test by degree-class refinement plus
// backtracking. Exact; intended for n ≲ 12.
bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace spanfactor
