#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drs/errors.hpp"

namespace drs {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Normalizes ids into a VertexSet (sorts, drops duplicates).
VertexSet make_vertex_set(std::vector<int> ids);

// Membership test on a sorted VertexSet.
bool vertex_set_contains(const VertexSet& s, int v);

// Throws Error unless s is sorted, duplicate-free and within [0, n).
void validate_vertex_set(const VertexSet& s, int n);

// Smallest m with 2^m >= x (x >= 1).
int ceil_log2(std::int64_t x);

// Undirected edge with endpoints ordered u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1.
//
// Edges are kept lexicographically sorted; the position of an edge in
// edges() is its edge id, which is also the id of the corresponding
// line-graph vertex. Structure is immutable after construction; labels
// may be set afterwards and must stay unique.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Position of {u,v} in edges(), or -1 if absent.
    int edge_id(int u, int v) const;

    // Explicit label if set, otherwise the decimal id.
    std::string label(int v) const;
    bool has_explicit_label(int v) const;
    void set_label(int v, const std::string& name);

    // Vertex whose effective label equals name, or -1.
    int vertex_by_label(const std::string& name) const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_;   // concatenated ascending neighbor lists
    std::vector<int> offs_;  // n+1 offsets into adj_
    std::vector<std::string> labels_;  // empty string = default label
};

// Reads the graph file format:
//   # comment (anywhere)
//   g <n> <m>
//   <u> <v>          (m lines, 0 <= u < v < n)
//   l <v> <label>    (optional)
// Errors carry 1-based line numbers.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

// Writes the format read by parse_graph; only explicit labels are emitted,
// so parse(write(g)) == g.
void write_graph(const Graph& g, std::ostream& out);

// All-pairs hop distances of a connected graph, row-major.
struct DistanceMatrix {
    int n = 0;
    std::vector<std::int32_t> d;

    std::int32_t operator()(int u, int v) const {
        return d[static_cast<std::size_t>(u) * n + v];
    }
};

// BFS from every vertex; throws Error naming two unreachable vertices when
// the graph is disconnected.
DistanceMatrix bfs_all_pairs(const Graph& g);

int max_degree(const Graph& g);

// Bijection between root-graph edges and line-graph vertices.
class LineGraphMap {
public:
    LineGraphMap() = default;
    explicit LineGraphMap(std::vector<Edge> sorted_edges);

    int size() const { return static_cast<int>(edges_.size()); }
    Edge root_edge(int line_vertex) const;

    // Line vertex of root edge {u,v}, or -1.
    int line_vertex(int u, int v) const;

private:
    std::vector<Edge> edges_;
};

// Line graph: one vertex per edge of g, vertices adjacent iff the root
// edges share an endpoint. Vertex i of the result corresponds to edge i of
// g and is labeled "<label(u)>_<label(v)>" with u < v.
std::pair<Graph, LineGraphMap> line_graph(const Graph& g);

// Blocks (as sorted vertex sets, ordered lexicographically) and cut
// vertices of a connected graph.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

// Edge ids of a deterministic spanning tree: a star at the lowest-id
// degree-3 vertex whenever the graph has 4 vertices and at least 5 edges
// (so the tree is never a 4-path there), otherwise the BFS tree rooted at
// vertex 0 with neighbors explored in ascending id order.
VertexSet spanning_tree_upper(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace drs
