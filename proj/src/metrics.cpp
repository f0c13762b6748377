#include "graphorder/metrics.hpp"

#include <algorithm>
#include <cstdlib>

#include "graphorder/error.hpp"

namespace graphorder {

SkewStats skew_stats(const DegreeVector& d) {
    const VertexId n = d.num_vertices();
    if (n == 0) throw ParameterError("skew stats require at least one vertex");

    std::uint64_t total = 0;
    std::uint64_t hot = 0;
    std::uint64_t hot_mass = 0;
    for (std::uint64_t deg : d.values) {
        total += deg;
        if (degree_ge(deg, d.avg)) {
            ++hot;
            hot_mass += deg;
        }
    }

    SkewStats s;
    s.hot_count = hot;
    s.hot_fraction_pct = 100.0 * static_cast<double>(hot) / static_cast<double>(n);
    s.edge_coverage_pct = total == 0
                              ? 100.0 // all (zero) edges trivially covered
                              : 100.0 * static_cast<double>(hot_mass) / static_cast<double>(total);
    return s;
}

FootprintReport hot_per_block(const Permutation& order, const DegreeVector& d,
                              std::uint32_t vertices_per_block) {
    if (vertices_per_block < 1) throw ParameterError("vertices_per_block must be >= 1");
    const VertexId n = d.num_vertices();
    if (order.size() != n) throw InvariantViolation("permutation size does not match degrees");

    FootprintReport r;
    std::uint64_t block_hot = 0;
    std::uint64_t hot_sum = 0;
    for (VertexId pos = 0; pos < n; ++pos) {
        const VertexId old_v = order.to_old(pos);
        if (degree_ge(d.values[old_v], d.avg)) {
            ++r.hot_count;
            ++block_hot;
        }
        if ((pos + 1) % vertices_per_block == 0 || pos + 1 == n) {
            if (block_hot > 0) {
                ++r.blocks_with_hot;
                hot_sum += block_hot;
            }
            block_hot = 0;
        }
    }
    if (r.blocks_with_hot == 0) {
        r.empty = true;
        r.avg_hot_per_block = 0;
    } else {
        r.avg_hot_per_block = static_cast<double>(hot_sum) / static_cast<double>(r.blocks_with_hot);
    }
    return r;
}

std::uint64_t hot_footprint_bytes(const DegreeVector& d, std::uint32_t bytes_per_property) {
    std::uint64_t hot = 0;
    for (std::uint64_t deg : d.values)
        if (degree_ge(deg, d.avg)) ++hot;
    return hot * bytes_per_property;
}

DegreeRangeHistogram degree_range_histogram(const DegreeVector& d) {
    DegreeRangeHistogram h;
    const Rational thresholds[5] = {d.avg.scaled(2), d.avg.scaled(4), d.avg.scaled(8),
                                    d.avg.scaled(16), d.avg.scaled(32)};
    for (std::uint64_t deg : d.values) {
        if (!degree_ge(deg, d.avg)) continue;
        ++h.hot_count;
        std::size_t bucket = 5;
        for (std::size_t i = 0; i < 5; ++i) {
            if (degree_lt(deg, thresholds[i])) {
                bucket = i;
                break;
            }
        }
        ++h.counts[bucket];
    }
    for (std::size_t i = 0; i < 6; ++i) {
        h.vertex_pct[i] = h.hot_count == 0
                              ? 0
                              : 100.0 * static_cast<double>(h.counts[i]) /
                                    static_cast<double>(h.hot_count);
        h.footprint_bytes[i] = h.counts[i] * 8;
    }
    return h;
}

double neighbor_preservation(const Permutation& p, std::uint64_t window) {
    if (window < 1) throw ParameterError("window must be >= 1");
    const VertexId n = p.size();
    std::uint64_t total = 0;
    std::uint64_t kept = 0;
    for (VertexId u = 0; u < n; ++u) {
        const std::uint64_t nu = p.to_new(u);
        const VertexId hi = static_cast<VertexId>(
            std::min<std::uint64_t>(n, static_cast<std::uint64_t>(u) + window));
        for (VertexId v = u + 1; v < hi; ++v) {
            ++total;
            const std::uint64_t nv = p.to_new(v);
            const std::uint64_t dist = nu > nv ? nu - nv : nv - nu;
            if (dist < window) ++kept;
        }
    }
    if (total == 0) return 1.0;
    return static_cast<double>(kept) / static_cast<double>(total);
}

} // namespace graphorder
