#include "drs/families.hpp"

#include <algorithm>
#include <string>

namespace drs {

namespace {

std::vector<Edge> random_tree_edges(SplitMix64& rng, int n) {
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    if (n == 2) {
        edges.push_back({0, 1});
        return edges;
    }
    std::vector<int> seq(n - 2);
    for (int& a : seq) a = static_cast<int>(rng.below(n));

    // Canonical linear-time decode of the sequence into a labeled tree.
    std::vector<int> degree(n, 1);
    for (int a : seq) ++degree[a];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges.push_back({std::min(leaf, a), std::max(leaf, a)});
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return edges;
}

}  // namespace

Graph gen_basic(BasicFamily family, int n) {
    const int min_n = family == BasicFamily::cycle ? 3 : 2;
    if (n < min_n) throw Error("family requires n >= " + std::to_string(min_n));
    std::vector<Edge> edges;
    switch (family) {
        case BasicFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case BasicFamily::cycle:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, n - 1});
            break;
        case BasicFamily::star:
            for (int i = 1; i < n; ++i) edges.push_back({0, i});
            break;
        case BasicFamily::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
            break;
    }
    return Graph(n, std::move(edges));
}

Graph gen_ak(int k) {
    if (k < 2) throw Error("binary-coded family requires k >= 2");
    const AkLayout lay(k);
    std::vector<Edge> edges;
    std::vector<std::string> labels(lay.vertex_count());
    labels[lay.hub()] = "u";
    for (int j = 1; j <= k; ++j) {
        edges.push_back({lay.hub(), lay.spoke(j)});
        labels[lay.spoke(j)] = "v" + std::to_string(j);
    }
    for (int i = 0; i < lay.m; ++i) {
        for (int j = 1; j <= k; ++j)
            if (lay.spoke_tag_edge(i, j))
                edges.push_back({lay.spoke(j), lay.tag(i)});
        edges.push_back({lay.tag(i), lay.tag_mate(i)});
        labels[lay.tag(i)] = "w" + std::to_string(i);
        labels[lay.tag_mate(i)] = "w'" + std::to_string(i);
    }
    return Graph(lay.vertex_count(), std::move(edges), std::move(labels));
}

Graph gen_tk(int k) {
    if (k < 1) throw Error("triangle family requires k >= 1");
    const int n = 2 * k + 1;
    std::vector<Edge> edges;
    std::vector<std::string> labels(n);
    labels[0] = "u";
    for (int i = 1; i <= k; ++i) {
        const int x = 2 * i - 1, y = 2 * i;
        edges.push_back({0, x});
        edges.push_back({0, y});
        edges.push_back({x, y});
        labels[x] = "x" + std::to_string(i);
        labels[y] = "y" + std::to_string(i);
    }
    return Graph(n, std::move(edges), std::move(labels));
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw Error("random tree requires n >= 2");
    SplitMix64 rng(seed);
    return Graph(n, random_tree_edges(rng, n));
}

Graph gen_random_connected(int n, int extra, std::uint64_t seed) {
    if (n < 2) throw Error("random connected graph requires n >= 2");
    const long long max_extra =
        static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (extra < 0 || extra > max_extra)
        throw Error("extra edge count out of range [0, " +
                    std::to_string(max_extra) + "]");

    SplitMix64 rng(seed);
    std::vector<Edge> edges = random_tree_edges(rng, n);

    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : edges) used[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    std::vector<Edge> candidates;
    candidates.reserve(static_cast<std::size_t>(max_extra));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used[static_cast<std::size_t>(u) * n + v])
                candidates.push_back({u, v});

    // Partial Fisher-Yates: the first `extra` slots become the sample.
    for (int i = 0; i < extra; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.below(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
        edges.push_back(candidates[i]);
    }
    return Graph(n, std::move(edges));
}

namespace {

// True when some spoke v_j is adjacent to both tags w_i and w_i'.
bool tags_share_spoke(const AkLayout& lay, int i, int i2) {
    for (int j = 1; j <= lay.k; ++j)
        if (lay.spoke_tag_edge(i, j) && lay.spoke_tag_edge(i2, j)) return true;
    return false;
}

}  // namespace

int ak_predicted_distance(int k, Edge e1, Edge e2) {
    if (k < 2) throw Error("binary-coded family requires k >= 2");
    const AkLayout lay(k);
    auto norm = [](Edge e) {
        if (e.u > e.v) std::swap(e.u, e.v);
        return e;
    };
    e1 = norm(e1);
    e2 = norm(e2);

    auto is_tag_pair = [&](const Edge& e, int& i) {
        for (int t = 0; t < lay.m; ++t)
            if (e.u == lay.tag(t) && e.v == lay.tag_mate(t)) {
                i = t;
                return true;
            }
        return false;
    };
    auto is_spoke_tag = [&](const Edge& e, int& i, int& j) {
        if (e.u >= 1 && e.u <= k && e.v >= lay.tag(0) && e.v <= lay.tag(lay.m - 1)) {
            j = e.u;
            i = e.v - lay.tag(0);
            if (!lay.spoke_tag_edge(i, j))
                throw Error("descriptor is not an edge of the family");
            return true;
        }
        return false;
    };
    auto is_hub_spoke = [&](const Edge& e, int& j) {
        if (e.u == lay.hub() && e.v >= 1 && e.v <= k) {
            j = e.v;
            return true;
        }
        return false;
    };

    int i = -1;
    if (!is_tag_pair(e1, i))
        throw Error("first descriptor must be a tag pair {w_i, w'_i}");

    int i2 = -1, j = -1;
    if (is_tag_pair(e2, i2)) {
        if (i == i2) return 0;
        if (tags_share_spoke(lay, i, i2)) return 3;
        return 5;
    }
    if (is_spoke_tag(e2, i2, j)) {
        if (i == i2) return 1;
        if (lay.spoke_tag_edge(i, j)) return 2;
        if (tags_share_spoke(lay, i, i2)) return 3;
        return 4;
    }
    if (is_hub_spoke(e2, j)) {
        return lay.spoke_tag_edge(i, j) ? 2 : 3;
    }
    throw Error("second descriptor not of a supported form");
}

}  // namespace drs
