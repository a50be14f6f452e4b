#include "drs/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace drs {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ThreeDmInstance parse_3dm(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, t = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "3dm") throw ParseError(lineno, "expected header '3dm <n> <t>'");
        if (!(ls >> n >> t))
            throw ParseError(lineno, "malformed header: expected '3dm <n> <t>'");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens on line");
        break;
    }
    if (n == -1) throw ParseError(lineno + 1, "missing header '3dm <n> <t>'");
    if (n < 1) throw ParseError(lineno, "universe size must be at least 1");
    if (t < 1) throw ParseError(lineno, "triple count must be at least 1");

    ThreeDmInstance inst;
    inst.n = static_cast<int>(n);
    std::set<std::array<int, 3>> seen;
    while (static_cast<long long>(inst.triples.size()) < t &&
           std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        long long a, b, c;
        if (!(ls >> a >> b >> c))
            throw ParseError(lineno, "malformed triple line: expected '<a> <b> <c>'");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens on line");
        if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
            throw ParseError(lineno, "triple index out of range [0, " +
                                         std::to_string(n - 1) + "]");
        std::array<int, 3> triple{static_cast<int>(a), static_cast<int>(b),
                                  static_cast<int>(c)};
        if (!seen.insert(triple).second)
            throw ParseError(lineno, "duplicate triple");
        inst.triples.push_back(triple);
    }
    if (static_cast<long long>(inst.triples.size()) < t)
        throw ParseError(lineno + 1,
                         "expected " + std::to_string(t) + " triple lines, found " +
                             std::to_string(inst.triples.size()));
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank_or_comment(line))
            throw ParseError(lineno, "unexpected content after triples");
    }
    return inst;
}

ThreeDmInstance parse_3dm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_3dm(in);
}

int k_threshold(const ThreeDmInstance& inst, int replication) {
    if (inst.n < 1 || inst.triples.empty()) throw Error("empty instance");
    if (replication < 1) throw Error("replication must be at least 1");
    const std::int64_t tau =
        static_cast<std::int64_t>(replication) * inst.triples.size();
    return inst.n * replication + ceil_log2(tau) + 4;
}

int ReductionGraph::vertex_of(ReductionRole role, int index, int copy) const {
    const int n = base_n, big_n = replication;
    auto bad = [&]() -> int { throw Error("role lookup out of range"); };
    auto need = [&](bool ok) {
        if (!ok) bad();
    };
    // One side: s_j, sA..sD, d'_i. Other side: elements, s'_j, s'A..s'D, d_i.
    const int i_side = tau + 4 + lambda;
    switch (role) {
        case ReductionRole::triple:
            need(index >= 0 && index < tau && copy == 0);
            return index;
        case ReductionRole::sel_a:
            return tau;
        case ReductionRole::sel_b:
            return tau + 1;
        case ReductionRole::sel_c:
            return tau + 2;
        case ReductionRole::sel_d:
            return tau + 3;
        case ReductionRole::bit_mate:
            need(index >= 0 && index < lambda && copy == 0);
            return tau + 4 + index;
        case ReductionRole::element_a:
            need(index >= 0 && index < n && copy >= 0 && copy < big_n);
            return i_side + copy * n + index;
        case ReductionRole::element_b:
            need(index >= 0 && index < n && copy >= 0 && copy < big_n);
            return i_side + big_n * n + copy * n + index;
        case ReductionRole::element_c:
            need(index >= 0 && index < n && copy >= 0 && copy < big_n);
            return i_side + 2 * big_n * n + copy * n + index;
        case ReductionRole::triple_mate:
            need(index >= 0 && index < tau && copy == 0);
            return i_side + 3 * big_n * n + index;
        case ReductionRole::sel_a_mate:
            return i_side + 3 * big_n * n + tau;
        case ReductionRole::sel_b_mate:
            return i_side + 3 * big_n * n + tau + 1;
        case ReductionRole::sel_c_mate:
            return i_side + 3 * big_n * n + tau + 2;
        case ReductionRole::sel_d_mate:
            return i_side + 3 * big_n * n + tau + 3;
        case ReductionRole::bit:
            need(index >= 0 && index < lambda && copy == 0);
            return i_side + 3 * big_n * n + tau + 4 + index;
    }
    return bad();
}

ReductionGraph build_reduction(const ThreeDmInstance& inst, int replication) {
    if (inst.n < 1) throw Error("instance universe must be nonempty");
    if (inst.triples.empty()) throw Error("instance must have at least one triple");
    if (replication < 1) throw Error("replication must be at least 1");
    for (const auto& tr : inst.triples)
        for (int x : tr)
            if (x < 0 || x >= inst.n) throw Error("triple index out of range");

    const int n = inst.n;
    const int t = static_cast<int>(inst.triples.size());
    const int big_n = replication;

    ReductionGraph rg{Graph(1, {}), {}, n, big_n, big_n * t, 0, 0,
                      static_cast<long long>(n) * big_n};
    rg.lambda = ceil_log2(rg.tau);
    rg.k_threshold = n * big_n + rg.lambda + 4;

    const int total = (rg.tau + 4 + rg.lambda) +  // selector side
                      (3 * big_n * n + rg.tau + 4 + rg.lambda);
    rg.roles.resize(total);
    std::vector<std::string> labels(total);

    auto put = [&](ReductionRole role, int index, int copy, std::string name) {
        const int v = rg.vertex_of(role, index, copy);
        rg.roles[v] = {role, index, copy};
        labels[v] = std::move(name);
    };
    auto copy_suffix = [](int copy) {
        return copy == 0 ? std::string() : "@" + std::to_string(copy);
    };

    for (int j = 0; j < rg.tau; ++j) {
        put(ReductionRole::triple, j, 0, "s" + std::to_string(j));
        put(ReductionRole::triple_mate, j, 0, "s'" + std::to_string(j));
    }
    put(ReductionRole::sel_a, 0, 0, "sA");
    put(ReductionRole::sel_b, 0, 0, "sB");
    put(ReductionRole::sel_c, 0, 0, "sC");
    put(ReductionRole::sel_d, 0, 0, "sD");
    put(ReductionRole::sel_a_mate, 0, 0, "s'A");
    put(ReductionRole::sel_b_mate, 0, 0, "s'B");
    put(ReductionRole::sel_c_mate, 0, 0, "s'C");
    put(ReductionRole::sel_d_mate, 0, 0, "s'D");
    for (int i = 0; i < rg.lambda; ++i) {
        put(ReductionRole::bit, i, 0, "d" + std::to_string(i));
        put(ReductionRole::bit_mate, i, 0, "d'" + std::to_string(i));
    }
    for (int c = 0; c < big_n; ++c) {
        for (int i = 0; i < n; ++i) {
            put(ReductionRole::element_a, i, c,
                "a" + std::to_string(i + 1) + copy_suffix(c));
            put(ReductionRole::element_b, i, c,
                "b" + std::to_string(i + 1) + copy_suffix(c));
            put(ReductionRole::element_c, i, c,
                "c" + std::to_string(i + 1) + copy_suffix(c));
        }
    }

    std::vector<Edge> edges;
    auto link = [&](int u, int v) {
        edges.push_back({std::min(u, v), std::max(u, v)});
    };
    const int sa = rg.vertex_of(ReductionRole::sel_a);
    const int sb = rg.vertex_of(ReductionRole::sel_b);
    const int sc = rg.vertex_of(ReductionRole::sel_c);
    const int sd = rg.vertex_of(ReductionRole::sel_d);

    for (int c = 0; c < big_n; ++c) {
        for (int i = 0; i < n; ++i) {
            const int a = rg.vertex_of(ReductionRole::element_a, i, c);
            const int b = rg.vertex_of(ReductionRole::element_b, i, c);
            const int cc = rg.vertex_of(ReductionRole::element_c, i, c);
            link(sa, a);  // class selectors reach their own class...
            link(sb, b);
            link(sc, cc);
            link(sd, a);  // ...while sD reaches every element
            link(sd, b);
            link(sd, cc);
        }
    }
    for (int j = 0; j < rg.tau; ++j) {
        const int copy = j / t;
        const auto& tr = inst.triples[j % t];
        const int sj = rg.vertex_of(ReductionRole::triple, j);
        link(sj, rg.vertex_of(ReductionRole::element_a, tr[0], copy));
        link(sj, rg.vertex_of(ReductionRole::element_b, tr[1], copy));
        link(sj, rg.vertex_of(ReductionRole::element_c, tr[2], copy));
        link(sj, rg.vertex_of(ReductionRole::triple_mate, j));
        for (int i = 0; i < rg.lambda; ++i)
            if ((j >> i) & 1)
                link(rg.vertex_of(ReductionRole::bit, i), sj);
    }
    for (int i = 0; i < rg.lambda; ++i) {
        link(rg.vertex_of(ReductionRole::bit, i), sd);
        link(rg.vertex_of(ReductionRole::bit, i),
             rg.vertex_of(ReductionRole::bit_mate, i));
    }
    link(sa, rg.vertex_of(ReductionRole::sel_a_mate));
    link(sb, rg.vertex_of(ReductionRole::sel_b_mate));
    link(sc, rg.vertex_of(ReductionRole::sel_c_mate));
    link(sd, rg.vertex_of(ReductionRole::sel_d_mate));

    rg.graph = Graph(total, std::move(edges), std::move(labels));
    return rg;
}

VertexSet drs_from_matching(const ReductionGraph& rg,
                            const std::vector<int>& matching) {
    const int n = rg.base_n;
    const int t = rg.tau / rg.replication;
    if (static_cast<int>(matching.size()) != n)
        throw Error("matching must contain exactly n triples");
    std::vector<char> cover_a(n, 0), cover_b(n, 0), cover_c(n, 0);
    // Matching indices refer to the base instance, i.e. the copy-0 selector
    // block; validate the cover from the selector adjacency itself.
    for (int j : matching) {
        if (j < 0 || j >= t) throw Error("matching triple index out of range");
        const int sj = rg.vertex_of(ReductionRole::triple, j);
        for (int w : rg.graph.neighbors(sj)) {
            const RoleTag& tag = rg.roles[w];
            if (tag.copy != 0) continue;
            if (tag.role == ReductionRole::element_a) {
                if (cover_a[tag.index]++) throw Error("matching covers an element twice");
            } else if (tag.role == ReductionRole::element_b) {
                if (cover_b[tag.index]++) throw Error("matching covers an element twice");
            } else if (tag.role == ReductionRole::element_c) {
                if (cover_c[tag.index]++) throw Error("matching covers an element twice");
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (!cover_a[i] || !cover_b[i] || !cover_c[i])
            throw Error("matching does not cover every element");

    VertexSet r;
    auto add_pair = [&](int u, int v) {
        const int id = rg.graph.edge_id(u, v);
        if (id < 0) throw std::logic_error("selector pair edge missing");
        r.push_back(id);
    };
    // Pairs from a single copy leave the other copies' element edges
    // unresolved, so the matching is mirrored into every selector block.
    for (int c = 0; c < rg.replication; ++c)
        for (int j : matching)
            add_pair(rg.vertex_of(ReductionRole::triple, c * t + j),
                     rg.vertex_of(ReductionRole::triple_mate, c * t + j));
    add_pair(rg.vertex_of(ReductionRole::sel_a),
             rg.vertex_of(ReductionRole::sel_a_mate));
    add_pair(rg.vertex_of(ReductionRole::sel_b),
             rg.vertex_of(ReductionRole::sel_b_mate));
    add_pair(rg.vertex_of(ReductionRole::sel_c),
             rg.vertex_of(ReductionRole::sel_c_mate));
    add_pair(rg.vertex_of(ReductionRole::sel_d),
             rg.vertex_of(ReductionRole::sel_d_mate));
    for (int i = 0; i < rg.lambda; ++i)
        add_pair(rg.vertex_of(ReductionRole::bit, i),
                 rg.vertex_of(ReductionRole::bit_mate, i));
    return make_vertex_set(std::move(r));
}

int edge_distance_class(const ReductionGraph& rg, int u, int v) {
    if (rg.graph.edge_id(u, v) < 0)
        throw Error("edge not present in the reduction graph");
    ReductionRole a = rg.roles[u].role, b = rg.roles[v].role;
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    auto is_element = [](ReductionRole r) {
        return r == ReductionRole::element_a || r == ReductionRole::element_b ||
               r == ReductionRole::element_c;
    };
    // Class 0: the anchor pair itself.
    if (a == ReductionRole::sel_d && b == ReductionRole::sel_d_mate) return 0;
    // Class 1: edges at sD.
    if ((is_element(a) && b == ReductionRole::sel_d) ||
        (a == ReductionRole::sel_d && b == ReductionRole::bit))
        return 1;
    // Class 3: the remaining mate pairs.
    if ((a == ReductionRole::triple && b == ReductionRole::triple_mate) ||
        (a == ReductionRole::sel_a && b == ReductionRole::sel_a_mate) ||
        (a == ReductionRole::sel_b && b == ReductionRole::sel_b_mate) ||
        (a == ReductionRole::sel_c && b == ReductionRole::sel_c_mate))
        return 3;
    // Class 2: everything else (element-class, element-triple, bit edges).
    if ((is_element(a) &&
         (b == ReductionRole::triple || b == ReductionRole::sel_a ||
          b == ReductionRole::sel_b || b == ReductionRole::sel_c)) ||
        (a == ReductionRole::triple && b == ReductionRole::bit) ||
        (a == ReductionRole::bit && b == ReductionRole::bit_mate))
        return 2;
    throw std::logic_error("edge fits no distance class");
}

std::optional<std::vector<int>> solve_3dm_exhaustive(const ThreeDmInstance& inst,
                                                     const SolveOptions& opts) {
    const int n = inst.n;
    const int t = static_cast<int>(inst.triples.size());
    if (n < 1 || t < 1) throw Error("empty instance");
    if (n > 63) throw Error("exhaustive matching limited to n <= 63");

    const std::uint64_t full = (1ull << n) - 1;
    std::uint64_t work = 0;
    std::vector<int> chosen;
    chosen.reserve(n);

    // Depth-first over triples in increasing index order; the first complete
    // matching found is the lexicographically least one.
    std::uint64_t ma = 0, mb = 0, mc = 0;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == n)
            return ma == full && mb == full && mc == full;
        for (int j = start; j < t; ++j) {
            if (++work > opts.work_limit)
                throw WorkLimitError(opts.work_limit, n);
            const auto& tr = inst.triples[j];
            const std::uint64_t ba = 1ull << tr[0], bb = 1ull << tr[1],
                                bc = 1ull << tr[2];
            if ((ma & ba) || (mb & bb) || (mc & bc)) continue;
            ma |= ba;
            mb |= bb;
            mc |= bc;
            chosen.push_back(j);
            if (self(self, j + 1)) return true;
            chosen.pop_back();
            ma &= ~ba;
            mb &= ~bb;
            mc &= ~bc;
        }
        return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
}

}  // namespace drs
