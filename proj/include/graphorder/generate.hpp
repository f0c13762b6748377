#pragma once

#include <cstdint>

#include "graphorder/edge_list.hpp"

namespace graphorder {

// R-MAT recursive-quadrant generator. a/b/c are the probabilities of the
// (src-low, dst-low), (src-low, dst-high) and (src-high, dst-low) quadrants;
// d = 1 - a - b - c. a = b = c = 0.25 yields a uniform (no-skew) graph.
struct RmatParams {
    std::uint32_t scale = 10;      // V = 2^scale
    std::uint64_t edge_factor = 16; // E = V * edge_factor
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    std::uint64_t seed = 1;
    bool weighted = false; // uniform integer weights in [1, 64]

    void validate() const; // throws ParameterError
};

// Deterministic per (params, seed): every edge is drawn from its own seeded
// substream, so output is byte-identical for any thread count.
EdgeList rmat_generate(const RmatParams& p);

} // namespace graphorder
