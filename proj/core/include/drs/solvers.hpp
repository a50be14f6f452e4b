#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "drs/graph.hpp"
#include "drs/resolving.hpp"

namespace drs {

inline constexpr std::uint64_t kDefaultWorkLimit = 1'000'000'000ull;

enum class SolveMethod { exhaustive, decomposition, tree_formula, clique_formula };

const char* to_string(SolveMethod m);

struct SolveOptions {
    // Budget of subset checks shared across all cardinalities of one call;
    // exceeding it throws WorkLimitError, never returns a wrong answer.
    std::uint64_t work_limit = kDefaultWorkLimit;
    // 0 = all hardware threads, 1 = strictly sequential.
    int threads = 0;
};

struct SolveResult {
    int psi = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::exhaustive;
    std::chrono::duration<double> elapsed{0};
};

// Minimum DRS by exhaustive search: cardinalities in increasing order,
// subsets of one cardinality in lexicographic order; the witness is the
// lexicographically least minimum DRS regardless of thread count.
// lower_hint, when given, must be a valid lower bound on psi.
SolveResult min_drs_exhaustive(const DistanceMatrix& dm,
                               std::optional<int> lower_hint = std::nullopt,
                               const SolveOptions& opts = {});

// Minimum |S| - |D| over DRSs S containing D; witness is the full S,
// psi = |S| - |D|. Same enumeration contract over the free part S \ D.
SolveResult min_d_drs_exhaustive(const DistanceMatrix& dm, const VertexSet& d,
                                 const SolveOptions& opts = {});

// Closed form on the complete graph K_n with |D| = d pinned vertices:
// n - d when n == 2 or d == n, otherwise n - 1 - d.
int psi_d_clique(int n, int d);

// Block-decomposition solver: sums pinned-subset results over the blocks
// (closed form on clique blocks, exhaustive otherwise) and assembles the
// union witness. Falls back to plain exhaustive search when the graph is
// 2-connected. The witness is re-verified on the full graph; a failure
// there is an internal bug and throws std::logic_error.
SolveResult min_drs_decomposed(const Graph& g, const SolveOptions& opts = {});

// Smallest resolving set (metric dimension), same enumeration contract.
SolveResult metric_dimension_exhaustive(const DistanceMatrix& dm,
                                        const SolveOptions& opts = {});

}  // namespace drs
