#include "drs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace drs {

namespace {

std::string edge_str(int u, int v) {
    return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

void check_label_token(const std::string& name) {
    if (name.empty()) throw Error("label must be non-empty");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw Error("label '" + name + "' contains whitespace");
    }
}

}  // namespace

VertexSet make_vertex_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool vertex_set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

void validate_vertex_set(const VertexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw Error("vertex id " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw Error("vertex set must be sorted and duplicate-free");
    }
}

int ceil_log2(std::int64_t x) {
    if (x < 1) throw Error("ceil_log2 requires a positive argument");
    int m = 0;
    while ((std::int64_t{1} << m) < x) ++m;
    return m;
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n, std::move(edges), {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n) {
    if (n < 1) throw Error("graph needs at least one vertex");
    for (Edge& e : edges) {
        if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw Error("edge endpoint out of range: " + edge_str(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw Error("duplicate edge " + edge_str(dup->u, dup->v));
    edges_ = std::move(edges);

    offs_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++offs_[e.u + 1];
        ++offs_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) offs_[v + 1] += offs_[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(offs_.begin(), offs_.end() - 1);
    // Scanning sorted edges fills every neighbor list in ascending order.
    for (const Edge& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }

    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n_)
            throw Error("label vector size mismatch");
        labels_ = std::move(labels);
        std::unordered_set<std::string> seen;
        seen.reserve(labels_.size());
        for (int v = 0; v < n_; ++v) {
            if (!labels_[v].empty()) check_label_token(labels_[v]);
            if (!seen.insert(label(v)).second)
                throw Error("duplicate label '" + label(v) + "'");
        }
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex id " + std::to_string(v) + " out of range");
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offs_[v],
            static_cast<std::size_t>(offs_[v + 1] - offs_[v])};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return offs_[v + 1] - offs_[v];
}

bool Graph::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int Graph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

bool Graph::has_explicit_label(int v) const {
    check_vertex(v);
    return !labels_.empty() && !labels_[v].empty();
}

void Graph::set_label(int v, const std::string& name) {
    check_vertex(v);
    check_label_token(name);
    for (int u = 0; u < n_; ++u) {
        if (u != v && label(u) == name)
            throw Error("duplicate label '" + name + "'");
    }
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = name;
}

int Graph::vertex_by_label(const std::string& name) const {
    for (int v = 0; v < n_; ++v) {
        if (!labels_.empty() && !labels_[v].empty()) {
            if (labels_[v] == name) return v;
        } else if (name == std::to_string(v)) {
            return v;
        }
    }
    return -1;
}

bool Graph::connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size()) == n_;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_ != b.edges_) return false;
    for (int v = 0; v < a.n_; ++v) {
        if (a.label(v) != b.label(v)) return false;
    }
    return true;
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

void reject_trailing(std::istringstream& ls, int lineno) {
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens on line");
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "g") throw ParseError(lineno, "expected header 'g <n> <m>'");
        if (!(ls >> n >> m))
            throw ParseError(lineno, "malformed header: expected 'g <n> <m>'");
        reject_trailing(ls, lineno);
        break;
    }
    if (n == -1) throw ParseError(lineno + 1, "missing header 'g <n> <m>'");
    if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
    if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<long long> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError(lineno, "malformed edge line: expected '<u> <v>'");
        reject_trailing(ls, lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range in edge " +
                                         edge_str(static_cast<int>(u),
                                                  static_cast<int>(v)));
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            throw ParseError(lineno, "edge endpoints must satisfy u < v");
        if (!seen.insert(u * n + v).second)
            throw ParseError(lineno, "duplicate edge " +
                                         edge_str(static_cast<int>(u),
                                                  static_cast<int>(v)));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (static_cast<long long>(edges.size()) < m)
        throw ParseError(lineno + 1,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(edges.size()));

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    bool any_label = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "l") throw ParseError(lineno, "expected label line 'l <v> <label>'");
        long long v;
        std::string name;
        if (!(ls >> v >> name)) throw ParseError(lineno, "malformed label line");
        reject_trailing(ls, lineno);
        if (v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range in label line");
        if (!labels[static_cast<std::size_t>(v)].empty())
            throw ParseError(lineno, "vertex " + std::to_string(v) + " labeled twice");
        labels[static_cast<std::size_t>(v)] = name;
        any_label = true;
    }
    try {
        if (any_label)
            return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.has_explicit_label(v)) out << "l " << v << ' ' << g.label(v) << '\n';
    }
}

DistanceMatrix bfs_all_pairs(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    for (int src = 0; src < n; ++src) {
        std::int32_t* row = dm.d.data() + static_cast<std::size_t>(src) * n;
        queue.clear();
        queue.push_back(src);
        row[src] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (static_cast<int>(queue.size()) != n) {
            int missing = 0;
            while (row[missing] >= 0) ++missing;
            throw Error("graph is disconnected: no path between vertices " +
                        std::to_string(src) + " and " + std::to_string(missing));
        }
    }
    return dm;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

LineGraphMap::LineGraphMap(std::vector<Edge> sorted_edges)
    : edges_(std::move(sorted_edges)) {}

Edge LineGraphMap::root_edge(int line_vertex) const {
    if (line_vertex < 0 || line_vertex >= size())
        throw Error("line vertex id " + std::to_string(line_vertex) + " out of range");
    return edges_[line_vertex];
}

int LineGraphMap::line_vertex(int u, int v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::pair<Graph, LineGraphMap> line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) throw Error("line graph of an edgeless graph is undefined here");

    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int id = 0; id < m; ++id) {
        const Edge& e = g.edges()[id];
        incident[e.u].push_back(id);
        incident[e.v].push_back(id);
    }
    std::vector<Edge> line_edges;
    for (const auto& ids : incident) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                line_edges.push_back({ids[i], ids[j]});
    }
    std::vector<std::string> labels(m);
    for (int id = 0; id < m; ++id) {
        const Edge& e = g.edges()[id];
        labels[id] = g.label(e.u) + "_" + g.label(e.v);
    }
    return {Graph(m, std::move(line_edges), std::move(labels)),
            LineGraphMap(g.edges())};
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    const int n = g.vertex_count();
    if (!g.connected())
        throw Error("blocks_and_cut_vertices requires a connected graph");
    BlockDecomposition out;
    if (n == 1) return out;

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> estack;  // edges as pushed (from, to), not normalized
    struct Frame {
        int v;
        int parent;
        std::size_t idx;
    };
    std::vector<Frame> stack;
    int timer = 0;
    int root_children = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.idx < nbrs.size()) {
            int w = nbrs[f.idx++];
            if (disc[w] == -1) {
                estack.push_back({f.v, w});
                if (f.v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0});
            } else if (w != f.parent && disc[w] < disc[f.v]) {
                estack.push_back({f.v, w});
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent < 0) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                // (parent, v) closes a block; pop its edges.
                std::vector<int> verts;
                while (!estack.empty()) {
                    Edge e = estack.back();
                    estack.pop_back();
                    verts.push_back(e.u);
                    verts.push_back(e.v);
                    if (e.u == parent && e.v == v) break;
                }
                out.blocks.push_back(make_vertex_set(std::move(verts)));
                if (parent != 0) is_cut[parent] = 1;
            }
        }
    }
    if (root_children > 1) is_cut[0] = 1;

    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

VertexSet spanning_tree_upper(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw Error("spanning tree requires at least 2 vertices");
    if (!g.connected()) throw Error("spanning tree requires a connected graph");

    VertexSet ids;
    if (n == 4 && g.edge_count() >= 5) {
        // Contains K4 minus at most one edge: take the star at the lowest-id
        // degree-3 vertex so the tree cannot be a 4-path.
        int center = -1;
        for (int v = 0; v < n && center < 0; ++v)
            if (g.degree(v) == 3) center = v;
        for (int w : g.neighbors(center)) ids.push_back(g.edge_id(center, w));
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ids.push_back(g.edge_id(u, w));
                queue.push_back(w);
            }
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && g.connected();
}

}  // namespace drs
