#include "drs/resolving.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace drs {

namespace {

void check_vertex(const DistanceMatrix& dm, int v) {
    if (v < 0 || v >= dm.n)
        throw Error("vertex id " + std::to_string(v) + " out of range");
}

std::uint64_t row_hash(const std::int32_t* row, int w) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the entries
    for (int i = 0; i < w; ++i) {
        h ^= static_cast<std::uint32_t>(row[i]);
        h *= 1099511628211ull;
    }
    return h;
}

// Pairwise distinctness of n rows of width w, rows produced by fill(x, out).
template <typename Fill>
bool rows_distinct(int n, int w, Fill fill) {
    std::vector<std::int32_t> rows(static_cast<std::size_t>(n) * w);
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(static_cast<std::size_t>(n) * 2);
    for (int x = 0; x < n; ++x) {
        std::int32_t* row = rows.data() + static_cast<std::size_t>(x) * w;
        fill(x, row);
        auto& bucket = buckets[row_hash(row, w)];
        for (int y : bucket) {
            const std::int32_t* other = rows.data() + static_cast<std::size_t>(y) * w;
            if (std::equal(row, row + w, other)) return false;
        }
        bucket.push_back(x);
    }
    return true;
}

}  // namespace

bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v) {
    check_vertex(dm, x);
    check_vertex(dm, y);
    check_vertex(dm, u);
    check_vertex(dm, v);
    return dm(u, x) - dm(u, y) != dm(v, x) - dm(v, y);
}

bool is_resolving_set(const DistanceMatrix& dm, const VertexSet& s) {
    validate_vertex_set(s, dm.n);
    if (s.empty()) throw Error("resolving-set test requires a nonempty set");
    const int w = static_cast<int>(s.size());
    return rows_distinct(dm.n, w, [&](int x, std::int32_t* row) {
        for (int i = 0; i < w; ++i) row[i] = dm(x, s[i]);
    });
}

bool is_drs_naive(const DistanceMatrix& dm, const VertexSet& s) {
    validate_vertex_set(s, dm.n);
    const int n = dm.n;
    if (n == 1) return true;
    if (s.size() < 2) return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool resolved = false;
            for (std::size_t i = 0; i < s.size() && !resolved; ++i)
                for (std::size_t j = i + 1; j < s.size() && !resolved; ++j)
                    resolved = doubly_resolves(dm, s[i], s[j], u, v);
            if (!resolved) return false;
        }
    }
    return true;
}

FVector f_vector(const DistanceMatrix& dm, const VertexSet& s, int x) {
    validate_vertex_set(s, dm.n);
    check_vertex(dm, x);
    if (s.size() < 2) throw Error("F-vector requires |S| >= 2");
    FVector f;
    f.anchor = s[0];
    f.deltas.resize(s.size() - 1);
    const std::int32_t base = dm(x, f.anchor);
    for (std::size_t j = 1; j < s.size(); ++j)
        f.deltas[j - 1] = dm(x, s[j]) - base;
    return f;
}

bool is_drs_fast(const DistanceMatrix& dm, const VertexSet& s) {
    validate_vertex_set(s, dm.n);
    const int n = dm.n;
    if (n == 1) return true;
    if (s.size() < 2) return false;
    const int w = static_cast<int>(s.size()) - 1;
    const int anchor = s[0];
    return rows_distinct(n, w, [&](int x, std::int32_t* row) {
        const std::int32_t base = dm(x, anchor);
        for (int i = 0; i < w; ++i) row[i] = dm(x, s[i + 1]) - base;
    });
}

bool is_d_drs(const DistanceMatrix& dm, const VertexSet& s, const VertexSet& d) {
    validate_vertex_set(s, dm.n);
    validate_vertex_set(d, dm.n);
    if (!std::includes(s.begin(), s.end(), d.begin(), d.end())) return false;
    return is_drs_fast(dm, s);
}

bool is_doubly_distance_resolving_on(const DistanceMatrix& dm, const VertexSet& s,
                                     int x) {
    validate_vertex_set(s, dm.n);
    check_vertex(dm, x);
    VertexSet t = s;
    if (!vertex_set_contains(t, x))
        t.insert(std::upper_bound(t.begin(), t.end(), x), x);
    const int n = dm.n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (dm(u, x) == dm(v, x)) continue;
            bool resolved = false;
            for (std::size_t i = 0; i < t.size() && !resolved; ++i)
                for (std::size_t j = i + 1; j < t.size() && !resolved; ++j)
                    resolved = doubly_resolves(dm, t[i], t[j], u, v);
            if (!resolved) return false;
        }
    }
    return true;
}

}  // namespace drs
