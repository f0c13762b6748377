#include "graphorder/generate.hpp"

#include "graphorder/error.hpp"
#include "graphorder/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace graphorder {

void RmatParams::validate() const {
    if (scale < 1) throw ParameterError("rmat scale must be >= 1");
    if (scale > 31) throw ParameterError("rmat scale must be <= 31");
    if (a < 0 || b < 0 || c < 0) throw ParameterError("rmat probabilities must be non-negative");
    if (a + b + c > 1.0) throw ParameterError("rmat probabilities must satisfy a + b + c <= 1");
}

EdgeList rmat_generate(const RmatParams& p) {
    p.validate();
    const std::uint64_t v = std::uint64_t{1} << p.scale;
    const std::uint64_t e = v * p.edge_factor;

    EdgeList el;
    el.num_vertices = static_cast<VertexId>(v);
    el.weighted = p.weighted;
    el.edges.resize(e);
    if (p.weighted) el.weights.resize(e);

    const double ab = p.a + p.b;
    const double abc = p.a + p.b + p.c;

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(e); ++i) {
        // One substream per edge: output does not depend on thread count.
        SplitMix64 rng(mix_seed(p.seed, static_cast<std::uint64_t>(i)));
        std::uint64_t src = 0;
        std::uint64_t dst = 0;
        for (std::uint32_t level = 0; level < p.scale; ++level) {
            const double u = rng.next_double();
            std::uint64_t src_bit;
            std::uint64_t dst_bit;
            if (u < p.a) {
                src_bit = 0;
                dst_bit = 0;
            } else if (u < ab) {
                src_bit = 0;
                dst_bit = 1;
            } else if (u < abc) {
                src_bit = 1;
                dst_bit = 0;
            } else {
                src_bit = 1;
                dst_bit = 1;
            }
            src = (src << 1) | src_bit;
            dst = (dst << 1) | dst_bit;
        }
        el.edges[static_cast<std::size_t>(i)] = {static_cast<VertexId>(src),
                                                 static_cast<VertexId>(dst)};
        if (p.weighted)
            el.weights[static_cast<std::size_t>(i)] =
                static_cast<double>(1 + rng.next_below(64));
    }
    return el;
}

} // namespace graphorder
