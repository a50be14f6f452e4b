#pragma once

#include "drs/graph.hpp"

namespace drs {

// Leaf / branch-vertex census of a tree.
//
// A major vertex has degree >= 3. A leaf u is a terminal of the major m
// when m is strictly closer to u than every other major; in a tree that is
// always the first major on the walk from u inward, so each leaf of a
// non-path tree has exactly one terminal major. An exterior major owns at
// least one terminal leaf; a strong exterior major additionally has a leaf
// neighbor.
struct TreeStats {
    int n = 0;
    VertexSet leaves;
    VertexSet majors;
    VertexSet exterior_majors;
    VertexSet strong_exterior_majors;
    std::vector<int> terminal_of;  // per vertex: nearest major for a leaf, else -1
    int sigma = 0;                 // |leaves|
    int ex = 0;                    // |exterior_majors|
    int ex_prime = 0;              // |strong_exterior_majors|
};

// Single pass over a tree with n >= 2; O(n).
TreeStats tree_stats(const Graph& t);

// Minimum DRS size of the line graph of the host tree: sigma - ex'.
// Requires host n >= 3.
int psi_line_tree_formula(const TreeStats& stats);

// Minimum DRS of L(t), returned as edge ids of t (equal to line vertex
// ids): all leaf-incident edges minus, for each strong exterior major, the
// edge to its smallest-id leaf neighbor. O(n), no distance matrix.
VertexSet construct_min_drs_line_tree(const Graph& t);

// ceil(log2(1 + max_degree)): lower bound on the minimum DRS size of L(g).
// Requires g connected, n >= 3.
int lower_bound_line(const Graph& g);

// The spanning_tree_upper edge set as line vertices of L(g): a DRS of L(g)
// of size |V(g)| - 1, verified against L(g) before returning.
VertexSet upper_bound_drs_line(const Graph& g);

// Metric dimension of the host tree: 1 for paths, else sigma - ex.
int mu_tree_formula(const TreeStats& stats);

// Exact DRS test on L(t) without building L(t) or any distance matrix,
// via the block structure of line graphs of trees: the blocks of L(t) are
// the edge sets E_u of the non-leaf vertices u (cliques), the cut vertices
// are the edges with both endpoints non-leaf, and S is a DRS iff inside
// every block the chosen-or-cut vertices number >= |E_u| - 1 (all of E_u
// when |E_u| = 2). edge_ids index edges of t. Requires host n >= 3. O(n).
bool is_drs_of_line_tree(const Graph& t, const VertexSet& edge_ids);

}  // namespace drs
