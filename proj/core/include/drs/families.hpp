#pragma once

#include <cstdint>
#include <utility>

#include "drs/graph.hpp"

namespace drs {

// splitmix64: the fixed PRNG behind every seeded generator, so identical
// (parameters, seed) always reproduce identical graphs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

enum class BasicFamily { path, cycle, star, complete };

// path/star/complete need n >= 2, cycle n >= 3. Star center is vertex 0.
Graph gen_basic(BasicFamily family, int n);

// Vertex id layout of the binary-coded family A_k (k >= 2): a hub u joined
// to spokes v_1..v_k; tag w_i joined to spoke v_j exactly when bit i of j
// is 0; each tag w_i carries a pendant mate w'_i. m = ceil(log2(1+k)).
struct AkLayout {
    int k = 0;
    int m = 0;

    explicit AkLayout(int k_) : k(k_), m(ceil_log2(1 + std::int64_t{k_})) {}

    int vertex_count() const { return 1 + k + 2 * m; }
    int hub() const { return 0; }
    int spoke(int j) const { return j; }              // 1-based j
    int tag(int i) const { return k + 1 + i; }        // 0-based i
    int tag_mate(int i) const { return k + 1 + m + i; }
    bool spoke_tag_edge(int i, int j) const { return ((j >> i) & 1) == 0; }
};

// A_k with labels u, v1..vk, w0.., w'0... Its line graph has minimum DRS
// size exactly ceil(log2(1+k)), matching the degree lower bound.
Graph gen_ak(int k);

// T_k (k >= 1): hub u plus k triangles u-x_i-y_i; labels u, x1, y1, ...
// Its line graph has minimum DRS size exactly 2k = |V| - 1, matching the
// spanning-tree upper bound.
Graph gen_tk(int k);

// Uniform random labeled tree (decoded from a random sequence), n >= 2.
Graph gen_random_tree(int n, std::uint64_t seed);

// Random tree plus `extra` distinct non-tree edges, 0 <= extra <= C(n,2)-(n-1).
Graph gen_random_connected(int n, int extra, std::uint64_t seed);

// Closed-form distance in the line graph of A_k between edge e1, which must
// be a tag pair {w_i, w'_i}, and e2 of one of the forms {w_i', w'_i'},
// {v_j, w_i'}, or {u, v_j}. Errors on any other descriptor.
int ak_predicted_distance(int k, Edge e1, Edge e2);

}  // namespace drs
