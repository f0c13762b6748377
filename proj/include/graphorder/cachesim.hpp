#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphorder/csr.hpp"
#include "graphorder/permutation.hpp"

namespace graphorder {

struct CacheLevelConfig {
    std::uint64_t capacity_bytes = 0;
    std::uint32_t associativity = 1;
};

struct CacheConfig {
    static constexpr std::uint64_t kBlockBytes = 64;

    std::vector<CacheLevelConfig> levels; // smallest first
    bool inclusive = false;               // evictions back-invalidate lower levels

    void validate() const; // throws ParameterError

    // Scaled-down 3-level shape: 32KB/8, 256KB/8, 2MB/16.
    static CacheConfig default_hierarchy();
    // "l1=32768:8,l2=262144:8,l3=2097152:16"
    static CacheConfig parse(const std::string& text);
};

enum class AccessKind : std::uint8_t { read = 0, write = 1 };

struct ArrayInfo {
    std::string name;
    std::uint32_t element_bytes = 8;
    std::uint64_t num_elements = 0;
};

struct Access {
    std::uint64_t index = 0;  // element index within the array
    std::uint32_t array_id = 0;
    AccessKind kind = AccessKind::read;
};

// Arrays are mapped to disjoint 64-byte-aligned address regions in array-id
// order; an element that straddles a block boundary touches every block it
// overlaps.
struct AccessTrace {
    std::vector<ArrayInfo> arrays;
    std::vector<Access> accesses;

    std::uint32_t element_bytes(const Access& a) const { return arrays[a.array_id].element_bytes; }
    std::vector<std::uint64_t> array_bases() const;
};

struct LevelStats {
    std::uint64_t accesses = 0;
    std::uint64_t misses = 0;
};

struct CacheStats {
    std::vector<LevelStats> levels;
    std::uint64_t trace_accesses = 0; // level-0 accesses

    // Misses per kilo accesses: per-level misses normalized by the total
    // trace accesses. A proxy for hardware MPKI, not comparable in absolute
    // terms (no instruction counts here).
    double mpka(std::size_t level) const {
        if (trace_accesses == 0) return 0;
        return 1000.0 * static_cast<double>(levels[level].misses) /
               static_cast<double>(trace_accesses);
    }
};

// One pull iteration of PR over the in-CSR: per vertex, one vertex-array
// read, then per in-edge an edge-array read and a property read at the
// source, then one property write at the destination (when it has in-edges).
AccessTrace trace_pull_iteration(const CsrGraph& in_csr, std::uint32_t property_bytes);

// Set-associative LRU per level; a miss at level k forwards to level k+1.
CacheStats simulate(const AccessTrace& trace, const CacheConfig& cfg);

struct OrderingStats {
    std::string name;
    CacheStats stats;
};

// Traces one PR pull iteration of the graph under each permutation and
// simulates each trace under cfg.
std::vector<OrderingStats> compare_orderings(const CsrGraph& in_csr,
                                             const std::vector<std::pair<std::string, Permutation>>& orderings,
                                             const CacheConfig& cfg,
                                             std::uint32_t property_bytes);

} // namespace graphorder
