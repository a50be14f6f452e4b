#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "drs/graph.hpp"
#include "drs/solvers.hpp"

namespace drs {

// Exact-cover-by-triples instance over three disjoint n-element universes.
struct ThreeDmInstance {
    int n = 0;
    std::vector<std::array<int, 3>> triples;  // (a, b, c), 0-based, distinct
};

// Reads:
//   3dm <n> <t>
//   <a> <b> <c>   (t lines, 0-based indices < n)
// with # comments allowed anywhere. Errors carry 1-based line numbers.
ThreeDmInstance parse_3dm(std::istream& in);
ThreeDmInstance parse_3dm_file(const std::string& path);

// Vertex roles of the reduction graph. One side of the bipartition holds
// the triple selectors s_j, the class selectors sA..sD and the mate bits
// d'_i; the other holds the element vertices, the selector mates s'_j,
// s'A..s'D and the bits d_i.
enum class ReductionRole : std::uint8_t {
    element_a,       // a_i in copy c
    element_b,       // b_i in copy c
    element_c,       // c_i in copy c
    triple,          // s_j, global j < tau
    triple_mate,     // s'_j
    sel_a,
    sel_b,
    sel_c,
    sel_d,
    sel_a_mate,
    sel_b_mate,
    sel_c_mate,
    sel_d_mate,
    bit,             // d_i, i < lambda
    bit_mate,        // d'_i
};

struct RoleTag {
    ReductionRole role;
    int index = 0;
    int copy = 0;
};

// Bipartite graph produced from a 3DM instance, with N stacked copies of
// the element/triple part. Whenever the base instance has a perfect
// matching, its line graph has a DRS of size K =
// n*N + ceil(log2(tau)) + 4 (one matched selector pair per copy plus the
// four class pairs and the bit pairs).
struct ReductionGraph {
    Graph graph;
    std::vector<RoleTag> roles;  // per vertex
    int base_n = 0;              // n of the instance
    int replication = 1;         // N
    int tau = 0;                 // N * |triples|
    int lambda = 0;              // ceil(log2(tau))
    int k_threshold = 0;         // base_n * N + lambda + 4
    long long n_prime = 0;       // base_n * N, recorded only

    int vertex_of(ReductionRole role, int index = 0, int copy = 0) const;
};

ReductionGraph build_reduction(const ThreeDmInstance& inst, int replication = 1);

// K for the given instance and replication, without building the graph.
int k_threshold(const ThreeDmInstance& inst, int replication = 1);

// Certificate DRS of L(rg.graph) derived from a perfect matching of the
// base instance (triple indices into inst.triples): the matched selector
// pairs in every copy, the four class selector pairs, and the bit pairs.
// Returns line vertex ids; the result has exactly k_threshold entries.
VertexSet drs_from_matching(const ReductionGraph& rg,
                            const std::vector<int>& matching);

// Distance class of an edge {u,v} of rg.graph: its distance in the line
// graph from the vertex corresponding to the edge {sD, s'D} (0..3).
int edge_distance_class(const ReductionGraph& rg, int u, int v);

// Lexicographically least perfect matching (sorted triple indices), or
// nullopt. Backtracking over triples in increasing index order; each
// placement attempt counts against the work limit.
std::optional<std::vector<int>> solve_3dm_exhaustive(
    const ThreeDmInstance& inst, const SolveOptions& opts = {});

}  // namespace drs
