#include "drs/tree_line.hpp"

#include <algorithm>

#include "drs/resolving.hpp"

namespace drs {

TreeStats tree_stats(const Graph& t) {
    if (!is_tree(t)) throw Error("tree_stats requires a tree");
    const int n = t.vertex_count();
    if (n < 2) throw Error("tree_stats requires at least 2 vertices");

    TreeStats st;
    st.n = n;
    st.terminal_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 1) st.leaves.push_back(v);
        if (t.degree(v) >= 3) st.majors.push_back(v);
    }

    // Walk each leaf inward along its pendant path to the first major.
    // Pendant paths of a non-path tree are vertex-disjoint, so this is O(n).
    for (int leaf : st.leaves) {
        int prev = leaf;
        int cur = t.neighbors(leaf)[0];
        while (t.degree(cur) == 2) {
            int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                                   : t.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        if (t.degree(cur) >= 3) st.terminal_of[leaf] = cur;
    }

    std::vector<char> exterior(n, 0), strong(n, 0);
    for (int leaf : st.leaves)
        if (st.terminal_of[leaf] >= 0) exterior[st.terminal_of[leaf]] = 1;
    for (int m : st.majors)
        for (int w : t.neighbors(m))
            if (t.degree(w) == 1) strong[m] = 1;
    for (int m : st.majors) {
        if (exterior[m]) st.exterior_majors.push_back(m);
        if (strong[m]) st.strong_exterior_majors.push_back(m);
    }
    st.sigma = static_cast<int>(st.leaves.size());
    st.ex = static_cast<int>(st.exterior_majors.size());
    st.ex_prime = static_cast<int>(st.strong_exterior_majors.size());
    return st;
}

int psi_line_tree_formula(const TreeStats& stats) {
    if (stats.n < 3)
        throw Error("line-graph DRS formula requires a host tree with n >= 3");
    return stats.sigma - stats.ex_prime;
}

VertexSet construct_min_drs_line_tree(const Graph& t) {
    if (!is_tree(t)) throw Error("construction requires a tree");
    if (t.vertex_count() < 3)
        throw Error("construction requires a host tree with n >= 3");

    const int m = t.edge_count();
    std::vector<char> take(m, 0);
    for (int id = 0; id < m; ++id) {
        const Edge& e = t.edges()[id];
        if (t.degree(e.u) == 1 || t.degree(e.v) == 1) take[id] = 1;
    }
    // Per strong exterior major, release the edge to its smallest leaf.
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.degree(v) < 3) continue;
        int smallest_leaf = -1;
        for (int w : t.neighbors(v)) {
            if (t.degree(w) == 1) {
                smallest_leaf = w;
                break;  // neighbors ascend, first leaf is smallest
            }
        }
        if (smallest_leaf >= 0) take[t.edge_id(v, smallest_leaf)] = 0;
    }
    VertexSet s;
    for (int id = 0; id < m; ++id)
        if (take[id]) s.push_back(id);
    return s;
}

int lower_bound_line(const Graph& g) {
    if (g.vertex_count() < 3)
        throw Error("line-graph bounds require n >= 3");
    if (!g.connected()) throw Error("line-graph bounds require a connected graph");
    return ceil_log2(1 + max_degree(g));
}

VertexSet upper_bound_drs_line(const Graph& g) {
    if (g.vertex_count() < 3)
        throw Error("line-graph bounds require n >= 3");
    VertexSet tree_ids = spanning_tree_upper(g);

    auto [lg, map] = line_graph(g);
    VertexSet witness;
    witness.reserve(tree_ids.size());
    for (int id : tree_ids) {
        const Edge e = map.root_edge(id);
        witness.push_back(map.line_vertex(e.u, e.v));
    }
    std::sort(witness.begin(), witness.end());
    if (!is_drs_fast(bfs_all_pairs(lg), witness))
        throw std::logic_error("spanning-tree witness failed verification");
    return witness;
}

int mu_tree_formula(const TreeStats& stats) {
    if (stats.majors.empty()) return 1;  // the tree is a path
    return stats.sigma - stats.ex;
}

bool is_drs_of_line_tree(const Graph& t, const VertexSet& edge_ids) {
    if (!is_tree(t)) throw Error("line-tree DRS test requires a tree");
    const int n = t.vertex_count();
    if (n < 3) throw Error("line-tree DRS test requires a host tree with n >= 3");
    validate_vertex_set(edge_ids, t.edge_count());

    std::vector<char> in_s(t.edge_count(), 0);
    for (int id : edge_ids) in_s[id] = 1;

    // counted[u] = |(S ∪ cut vertices of L(t)) ∩ E_u| for non-leaf u.
    std::vector<int> counted(n, 0);
    for (int id = 0; id < t.edge_count(); ++id) {
        const Edge& e = t.edges()[id];
        const bool cut = t.degree(e.u) >= 2 && t.degree(e.v) >= 2;
        if (t.degree(e.u) >= 2 && (in_s[id] || cut)) ++counted[e.u];
        if (t.degree(e.v) >= 2 && (in_s[id] || cut)) ++counted[e.v];
    }
    for (int u = 0; u < n; ++u) {
        const int q = t.degree(u);
        if (q < 2) continue;
        if (q == 2 ? counted[u] != 2 : counted[u] < q - 1) return false;
    }
    return true;
}

}  // namespace drs
