#pragma once

#include <vector>

#include "drs/graph.hpp"

namespace drs {

// Distance-difference vector of a vertex x against an anchored set S:
// deltas[j-1] = d(x, u_j) - d(x, u_1) where u_1 < ... < u_m enumerate S.
struct FVector {
    int anchor = -1;
    std::vector<int> deltas;
    friend bool operator==(const FVector&, const FVector&) = default;
};

// True iff {x,y} doubly resolves {u,v}: d(u,x)-d(u,y) != d(v,x)-d(v,y).
bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v);

// True iff the distance vectors to S are pairwise distinct over all vertices.
bool is_resolving_set(const DistanceMatrix& dm, const VertexSet& s);

// Definition-chasing DRS check over all vertex pairs and all pairs from S.
// Quadratic; kept as the independent oracle for is_drs_fast.
bool is_drs_naive(const DistanceMatrix& dm, const VertexSet& s);

// Requires |S| >= 2.
FVector f_vector(const DistanceMatrix& dm, const VertexSet& s, int x);

// DRS check via pairwise-distinct F-vectors, O(n*|S|) expected (call-local
// hash set). Agrees with is_drs_naive on every input.
bool is_drs_fast(const DistanceMatrix& dm, const VertexSet& s);

// True iff d is contained in s and s is a DRS.
bool is_d_drs(const DistanceMatrix& dm, const VertexSet& s, const VertexSet& d);

// True iff every pair {u,v} with d(u,x) != d(v,x) is doubly resolved by some
// pair from s ∪ {x}.
bool is_doubly_distance_resolving_on(const DistanceMatrix& dm, const VertexSet& s,
                                     int x);

}  // namespace drs
