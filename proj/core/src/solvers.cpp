#include "drs/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <thread>

namespace drs {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::duration<double> since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0);
}

class WorkBudget {
public:
    explicit WorkBudget(std::uint64_t limit) : limit_(limit) {}
    bool consume() {
        return used_.fetch_add(1, std::memory_order_relaxed) < limit_;
    }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

enum class Scan { clean, hit, out_of_budget, superseded };

// Lexicographic scan of all k-subsets of {0..pool-1} whose first element is
// fixed; pred decides acceptance, stop() aborts a scan that can no longer
// produce the global minimum.
template <typename Pred, typename Stop>
Scan scan_with_first(int pool, int k, int first, WorkBudget& budget, Pred& pred,
                     Stop stop, std::vector<int>& hit_out) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = first + i;
    for (;;) {
        if (stop()) return Scan::superseded;
        if (!budget.consume()) return Scan::out_of_budget;
        if (pred(combo)) {
            hit_out = combo;
            return Scan::hit;
        }
        int i = k - 1;
        while (i >= 1 && combo[i] == pool - k + i) --i;
        if (i < 1) return Scan::clean;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
}

// First k-subset (in lexicographic order) accepted by pred. Work is split
// over the fixed first element; every chunk before the winning one is fully
// scanned, so the result is independent of the thread count.
template <typename Pred>
std::optional<std::vector<int>> find_first_subset(int pool, int k, int threads,
                                                  WorkBudget& budget, Pred pred,
                                                  bool& out_of_budget) {
    out_of_budget = false;
    if (k == 0) {
        if (!budget.consume()) {
            out_of_budget = true;
            return std::nullopt;
        }
        std::vector<int> empty;
        if (pred(empty)) return empty;
        return std::nullopt;
    }
    if (k > pool) return std::nullopt;

    const int first_count = pool - k + 1;
    int t = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                         : threads;
    t = std::clamp(t, 1, first_count);

    if (t == 1) {
        std::vector<int> hit;
        auto never = [] { return false; };
        for (int f = 0; f < first_count; ++f) {
            switch (scan_with_first(pool, k, f, budget, pred, never, hit)) {
                case Scan::hit:
                    return hit;
                case Scan::out_of_budget:
                    out_of_budget = true;
                    return std::nullopt;
                default:
                    break;
            }
        }
        return std::nullopt;
    }

    std::atomic<int> next_f{0};
    std::atomic<int> best_f{INT_MAX};
    std::vector<std::vector<int>> hits(first_count);
    std::vector<Scan> status(first_count, Scan::clean);
    std::vector<std::exception_ptr> errors(t);

    auto worker = [&](int tid) {
        try {
            for (;;) {
                int f = next_f.fetch_add(1, std::memory_order_relaxed);
                if (f >= first_count) return;
                if (best_f.load(std::memory_order_acquire) < f) {
                    status[f] = Scan::superseded;
                    continue;
                }
                std::vector<int> hit;
                auto stop = [&] {
                    return best_f.load(std::memory_order_relaxed) < f;
                };
                Scan r = scan_with_first(pool, k, f, budget, pred, stop, hit);
                status[f] = r;
                if (r == Scan::hit) {
                    hits[f] = std::move(hit);
                    int cur = best_f.load(std::memory_order_relaxed);
                    while (f < cur && !best_f.compare_exchange_weak(
                                          cur, f, std::memory_order_acq_rel)) {
                    }
                }
            }
        } catch (...) {
            errors[tid] = std::current_exception();
        }
    };

    std::vector<std::thread> pool_threads;
    pool_threads.reserve(t);
    for (int i = 0; i < t; ++i) pool_threads.emplace_back(worker, i);
    for (auto& th : pool_threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (int f = 0; f < first_count; ++f) {
        switch (status[f]) {
            case Scan::hit:
                return hits[f];
            case Scan::clean:
            case Scan::superseded:
                continue;
            case Scan::out_of_budget:
                out_of_budget = true;
                return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::exhaustive:
            return "exhaustive";
        case SolveMethod::decomposition:
            return "decomposition";
        case SolveMethod::tree_formula:
            return "tree_formula";
        case SolveMethod::clique_formula:
            return "clique_formula";
    }
    return "unknown";
}

SolveResult min_drs_exhaustive(const DistanceMatrix& dm,
                               std::optional<int> lower_hint,
                               const SolveOptions& opts) {
    const auto t0 = Clock::now();
    const int n = dm.n;
    if (n < 2) throw Error("minimum DRS search requires at least 2 vertices");
    WorkBudget budget(opts.work_limit);
    const int start = std::max(2, lower_hint.value_or(2));
    for (int k = start; k <= n; ++k) {
        bool oob = false;
        auto pred = [&dm](const std::vector<int>& combo) {
            return is_drs_fast(dm, combo);
        };
        auto hit = find_first_subset(n, k, opts.threads, budget, pred, oob);
        if (oob) throw WorkLimitError(opts.work_limit, k);
        if (hit)
            return {k, std::move(*hit), SolveMethod::exhaustive, since(t0)};
    }
    // The full vertex set is a DRS of every connected graph with n >= 2.
    throw std::logic_error("exhaustive DRS search fell through");
}

SolveResult min_d_drs_exhaustive(const DistanceMatrix& dm, const VertexSet& d,
                                 const SolveOptions& opts) {
    const auto t0 = Clock::now();
    const int n = dm.n;
    if (n < 2)
        throw Error("pinned-subset DRS search requires at least 2 vertices");
    validate_vertex_set(d, n);

    VertexSet pool_ids;
    pool_ids.reserve(n - d.size());
    for (int v = 0; v < n; ++v)
        if (!vertex_set_contains(d, v)) pool_ids.push_back(v);

    WorkBudget budget(opts.work_limit);
    auto assemble = [&](const std::vector<int>& combo) {
        VertexSet s;
        s.reserve(d.size() + combo.size());
        std::vector<int> picked;
        picked.reserve(combo.size());
        for (int idx : combo) picked.push_back(pool_ids[idx]);
        std::merge(d.begin(), d.end(), picked.begin(), picked.end(),
                   std::back_inserter(s));
        return s;
    };

    const int dsz = static_cast<int>(d.size());
    for (int size = std::max(2, dsz); size <= n; ++size) {
        const int k = size - dsz;
        bool oob = false;
        auto pred = [&](const std::vector<int>& combo) {
            return is_drs_fast(dm, assemble(combo));
        };
        auto hit =
            find_first_subset(static_cast<int>(pool_ids.size()), k, opts.threads,
                              budget, pred, oob);
        if (oob) throw WorkLimitError(opts.work_limit, size);
        if (hit)
            return {k, assemble(*hit), SolveMethod::exhaustive, since(t0)};
    }
    throw std::logic_error("pinned-subset DRS search fell through");
}

int psi_d_clique(int n, int d) {
    if (n < 2 || d < 0 || d > n)
        throw Error("psi_d_clique arguments out of range");
    if (n == 2 || d == n) return n - d;
    return n - 1 - d;
}

SolveResult min_drs_decomposed(const Graph& g, const SolveOptions& opts) {
    const auto t0 = Clock::now();
    const int n = g.vertex_count();
    if (n < 2) throw Error("minimum DRS search requires at least 2 vertices");

    BlockDecomposition bd = blocks_and_cut_vertices(g);
    if (bd.blocks.size() <= 1) {
        return min_drs_exhaustive(bfs_all_pairs(g), std::nullopt, opts);
    }

    VertexSet witness;
    int psi = 0;
    for (const VertexSet& blk : bd.blocks) {
        const int q = static_cast<int>(blk.size());
        std::vector<Edge> block_edges;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (g.has_edge(blk[i], blk[j])) block_edges.push_back({i, j});
        const bool clique =
            static_cast<int>(block_edges.size()) == q * (q - 1) / 2;
        Graph sub(q, std::move(block_edges));

        VertexSet pinned_local;  // cut vertices of g inside this block
        for (int i = 0; i < q; ++i)
            if (vertex_set_contains(bd.cut_vertices, blk[i]))
                pinned_local.push_back(i);

        VertexSet s_local;
        int psi_i = 0;
        if (clique) {
            psi_i = psi_d_clique(q, static_cast<int>(pinned_local.size()));
            const std::size_t target = pinned_local.size() + psi_i;
            s_local = pinned_local;
            for (int i = 0; i < q && s_local.size() < target; ++i)
                if (!vertex_set_contains(pinned_local, i)) s_local.push_back(i);
            std::sort(s_local.begin(), s_local.end());
        } else {
            SolveResult r = min_d_drs_exhaustive(bfs_all_pairs(sub),
                                                 pinned_local, opts);
            psi_i = r.psi;
            s_local = std::move(r.witness);
        }
        psi += psi_i;
        for (int i : s_local)
            if (!vertex_set_contains(pinned_local, i)) witness.push_back(blk[i]);
    }
    std::sort(witness.begin(), witness.end());

    if (static_cast<int>(witness.size()) != psi)
        throw std::logic_error("decomposed witness size disagrees with psi");
    if (!is_drs_fast(bfs_all_pairs(g), witness))
        throw std::logic_error(
            "decomposed witness failed full-graph verification");
    return {psi, std::move(witness), SolveMethod::decomposition, since(t0)};
}

SolveResult metric_dimension_exhaustive(const DistanceMatrix& dm,
                                        const SolveOptions& opts) {
    const auto t0 = Clock::now();
    const int n = dm.n;
    if (n < 2)
        throw Error("metric dimension search requires at least 2 vertices");
    WorkBudget budget(opts.work_limit);
    for (int k = 1; k <= n; ++k) {
        bool oob = false;
        auto pred = [&dm](const std::vector<int>& combo) {
            return is_resolving_set(dm, combo);
        };
        auto hit = find_first_subset(n, k, opts.threads, budget, pred, oob);
        if (oob) throw WorkLimitError(opts.work_limit, k);
        if (hit)
            return {k, std::move(*hit), SolveMethod::exhaustive, since(t0)};
    }
    throw std::logic_error("metric dimension search fell through");
}

}  // namespace drs
