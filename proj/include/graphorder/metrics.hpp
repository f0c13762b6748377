#pragma once

#include <array>
#include <cstdint>

#include "graphorder/csr.hpp"
#include "graphorder/permutation.hpp"

namespace graphorder {

struct SkewStats {
    double hot_fraction_pct = 0;  // vertices with degree >= avg, % of V
    double edge_coverage_pct = 0; // degree mass on hot vertices, % of total
    std::uint64_t hot_count = 0;
};

struct FootprintReport {
    std::uint64_t hot_count = 0;
    std::uint64_t blocks_with_hot = 0;
    double avg_hot_per_block = 0; // over blocks containing >= 1 hot vertex
    bool empty = false;           // no hot vertices at all
};

// Hot vertices per degree-range bucket:
// [D,2D) [2D,4D) [4D,8D) [8D,16D) [16D,32D) [32D,inf).
struct DegreeRangeHistogram {
    std::array<std::uint64_t, 6> counts{};
    std::array<double, 6> vertex_pct{};      // relative to hot count
    std::array<std::uint64_t, 6> footprint_bytes{}; // at 8 bytes per vertex
    std::uint64_t hot_count = 0;
};

SkewStats skew_stats(const DegreeVector& d);

// Lays vertices in new-id order into blocks of vertices_per_block and
// averages hot counts over blocks that contain at least one hot vertex.
FootprintReport hot_per_block(const Permutation& order, const DegreeVector& d,
                              std::uint32_t vertices_per_block = 8);

std::uint64_t hot_footprint_bytes(const DegreeVector& d, std::uint32_t bytes_per_property);

DegreeRangeHistogram degree_range_histogram(const DegreeVector& d);

// Fraction of vertex pairs closer than `window` in original ID space that
// stay closer than `window` after relabeling. 1.0 when no such pair exists.
double neighbor_preservation(const Permutation& p, std::uint64_t window = 8);

} // namespace graphorder
