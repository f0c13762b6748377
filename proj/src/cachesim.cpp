#include "graphorder/cachesim.hpp"

#include <charconv>

#include "graphorder/error.hpp"

namespace graphorder {

void CacheConfig::validate() const {
    if (levels.empty()) throw ParameterError("cache config needs at least one level");
    std::uint64_t prev = 0;
    for (const CacheLevelConfig& l : levels) {
        if (l.associativity < 1) throw ParameterError("cache associativity must be >= 1");
        if (l.capacity_bytes < prev)
            throw ParameterError("cache capacities must be non-decreasing by level");
        if (l.capacity_bytes == 0 || l.capacity_bytes % (kBlockBytes * l.associativity) != 0)
            throw ParameterError("cache capacity must be a multiple of block size * associativity");
        prev = l.capacity_bytes;
    }
}

CacheConfig CacheConfig::default_hierarchy() {
    CacheConfig cfg;
    cfg.levels = {{32 * 1024, 8}, {256 * 1024, 8}, {2 * 1024 * 1024, 16}};
    return cfg;
}

CacheConfig CacheConfig::parse(const std::string& text) {
    CacheConfig cfg;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        const std::size_t eq = item.find('=');
        const std::size_t colon = item.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos)
            throw ParameterError("bad cache level spec (want name=capacity:assoc): " + item);
        CacheLevelConfig level;
        const char* cap_begin = item.data() + eq + 1;
        const char* cap_end = item.data() + colon;
        auto r1 = std::from_chars(cap_begin, cap_end, level.capacity_bytes);
        auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(),
                                  level.associativity);
        if (r1.ec != std::errc{} || r1.ptr != cap_end || r2.ec != std::errc{} ||
            r2.ptr != item.data() + item.size())
            throw ParameterError("bad cache level spec (want name=capacity:assoc): " + item);
        cfg.levels.push_back(level);
    }
    cfg.validate();
    return cfg;
}

std::vector<std::uint64_t> AccessTrace::array_bases() const {
    std::vector<std::uint64_t> bases(arrays.size());
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        bases[i] = next;
        const std::uint64_t bytes = arrays[i].num_elements * arrays[i].element_bytes;
        next += (bytes + CacheConfig::kBlockBytes - 1) / CacheConfig::kBlockBytes *
                CacheConfig::kBlockBytes;
        next += CacheConfig::kBlockBytes; // guard block between regions
    }
    return bases;
}

AccessTrace trace_pull_iteration(const CsrGraph& in_csr, std::uint32_t property_bytes) {
    if (in_csr.direction != Direction::in_edges)
        throw ParameterError("pull trace requires an in-edge CSR");
    if (property_bytes != 4 && property_bytes != 8 && property_bytes != 12 &&
        property_bytes != 16 && property_bytes != 20)
        throw ParameterError("property size must be one of 4, 8, 12, 16, 20 bytes");
    const VertexId n = in_csr.num_vertices();
    const EdgeIndex m = in_csr.num_edges();

    AccessTrace trace;
    trace.arrays = {
        {"vertex_offsets", 8, static_cast<std::uint64_t>(n) + 1},
        {"edge_targets", 4, m},
        {"prop_src", property_bytes, n},  // previous-iteration values, read at sources
        {"prop_dst", property_bytes, n},  // current-iteration values, written at v
    };
    trace.accesses.reserve(static_cast<std::size_t>(n) * 2 + static_cast<std::size_t>(m) * 2);

    for (VertexId v = 0; v < n; ++v) {
        trace.accesses.push_back({v, 0, AccessKind::read});
        const EdgeIndex begin = in_csr.offsets[v];
        const EdgeIndex end = in_csr.offsets[v + 1];
        for (EdgeIndex e = begin; e < end; ++e) {
            trace.accesses.push_back({e, 1, AccessKind::read});
            trace.accesses.push_back({in_csr.targets[e], 2, AccessKind::read});
        }
        if (end > begin) trace.accesses.push_back({v, 3, AccessKind::write});
    }
    return trace;
}

namespace {

struct Way {
    std::uint64_t block = ~std::uint64_t{0};
    std::uint64_t last_used = 0;
    bool valid = false;
};

class Level {
public:
    Level(const CacheLevelConfig& cfg)
        : num_sets_(cfg.capacity_bytes / (CacheConfig::kBlockBytes * cfg.associativity)),
          assoc_(cfg.associativity),
          ways_(num_sets_ * cfg.associativity) {}

    // Returns hit; on miss installs the block, reporting any eviction.
    bool access(std::uint64_t block, std::uint64_t now, bool* evicted, std::uint64_t* victim) {
        Way* set = &ways_[(block % num_sets_) * assoc_];
        *evicted = false;
        Way* lru = set;
        for (std::uint32_t w = 0; w < assoc_; ++w) {
            if (set[w].valid && set[w].block == block) {
                set[w].last_used = now;
                return true;
            }
            if (!set[w].valid) {
                if (lru->valid) lru = &set[w]; // prefer an empty way
            } else if (!lru->valid) {
                // keep existing empty choice
            } else if (set[w].last_used < lru->last_used) {
                lru = &set[w];
            }
        }
        if (lru->valid) {
            *evicted = true;
            *victim = lru->block;
        }
        lru->valid = true;
        lru->block = block;
        lru->last_used = now;
        return false;
    }

    void invalidate(std::uint64_t block) {
        Way* set = &ways_[(block % num_sets_) * assoc_];
        for (std::uint32_t w = 0; w < assoc_; ++w)
            if (set[w].valid && set[w].block == block) set[w].valid = false;
    }

private:
    std::uint64_t num_sets_;
    std::uint32_t assoc_;
    std::vector<Way> ways_;
};

} // namespace

CacheStats simulate(const AccessTrace& trace, const CacheConfig& cfg) {
    cfg.validate();
    std::vector<Level> levels(cfg.levels.begin(), cfg.levels.end());
    CacheStats stats;
    stats.levels.resize(levels.size());

    const std::vector<std::uint64_t> bases = trace.array_bases();
    std::uint64_t now = 0;

    for (const Access& a : trace.accesses) {
        const std::uint64_t elem_bytes = trace.arrays[a.array_id].element_bytes;
        const std::uint64_t addr = bases[a.array_id] + a.index * elem_bytes;
        const std::uint64_t first_block = addr / CacheConfig::kBlockBytes;
        const std::uint64_t last_block = (addr + elem_bytes - 1) / CacheConfig::kBlockBytes;
        for (std::uint64_t block = first_block; block <= last_block; ++block) {
            ++now;
            ++stats.trace_accesses;
            for (std::size_t k = 0; k < levels.size(); ++k) {
                ++stats.levels[k].accesses;
                bool evicted = false;
                std::uint64_t victim = 0;
                const bool hit = levels[k].access(block, now, &evicted, &victim);
                if (cfg.inclusive && evicted)
                    for (std::size_t lower = 0; lower < k; ++lower)
                        levels[lower].invalidate(victim);
                if (hit) break;
                ++stats.levels[k].misses;
            }
        }
    }
    return stats;
}

std::vector<OrderingStats> compare_orderings(
    const CsrGraph& in_csr, const std::vector<std::pair<std::string, Permutation>>& orderings,
    const CacheConfig& cfg, std::uint32_t property_bytes) {
    std::vector<OrderingStats> out;
    out.reserve(orderings.size());
    for (const auto& [name, perm] : orderings) {
        const CsrGraph reordered = apply_permutation(in_csr, perm);
        const AccessTrace trace = trace_pull_iteration(reordered, property_bytes);
        out.push_back({name, simulate(trace, cfg)});
    }
    return out;
}

} // namespace graphorder
