#include "graphorder/reorder.hpp"

#include <algorithm>
#include <charconv>

#include "graphorder/error.hpp"
#include "graphorder/rng.hpp"

namespace graphorder {

GroupSpec GroupSpec::make(std::vector<DegreeRange> ranges) {
    if (ranges.empty()) throw ParameterError("group spec needs at least one range");
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        const DegreeRange& r = ranges[k];
        if (r.hi && !(r.lo < *r.hi))
            throw ParameterError("group range must satisfy lo < hi");
        if (!r.hi && k != 0)
            throw ParameterError("only the hottest group may be unbounded");
        if (k + 1 < ranges.size()) {
            if (!ranges[k + 1].hi || !(*ranges[k + 1].hi == r.lo))
                throw ParameterError("group ranges must be contiguous (next.hi == cur.lo)");
        }
    }
    GroupSpec spec;
    spec.ascending_lo_.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
        spec.ascending_lo_.push_back(ranges[ranges.size() - 1 - i].lo);
    spec.ranges_ = std::move(ranges);
    return spec;
}

std::optional<std::size_t> GroupSpec::group_of(std::uint64_t degree) const {
    if (degree_lt(degree, ascending_lo_.front())) return std::nullopt;
    const auto& top = ranges_.front();
    if (top.hi && !degree_lt(degree, *top.hi)) return std::nullopt;
    // Last ascending boundary <= degree.
    auto it = std::upper_bound(ascending_lo_.begin(), ascending_lo_.end(), degree,
                               [](std::uint64_t deg, Rational lo) { return degree_lt(deg, lo); });
    const std::size_t asc = static_cast<std::size_t>(it - ascending_lo_.begin()) - 1;
    return ranges_.size() - 1 - asc;
}

Permutation group_reorder(const DegreeVector& d, const GroupSpec& spec) {
    const VertexId n = d.num_vertices();
    const std::size_t k = spec.num_groups();

    std::vector<std::size_t> group(n);
    std::vector<VertexId> count(k, 0);
    for (VertexId v = 0; v < n; ++v) {
        auto g = spec.group_of(d.values[v]);
        if (!g)
            throw ParameterError("degree " + std::to_string(d.values[v]) +
                                 " not covered by any group range");
        group[v] = *g;
        ++count[*g];
    }

    std::vector<VertexId> base(k, 0);
    VertexId next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        base[i] = next;
        next += count[i];
    }

    std::vector<VertexId> old_to_new(n);
    for (VertexId v = 0; v < n; ++v) old_to_new[v] = base[group[v]]++;
    return Permutation::from_old_to_new(std::move(old_to_new));
}

GroupSpec dbg_spec(Rational avg_degree) {
    if (avg_degree.is_zero()) throw ParameterError("dbg spec requires positive average degree");
    std::vector<DegreeRange> ranges;
    ranges.push_back({avg_degree.scaled(32), std::nullopt});
    for (std::uint64_t f = 32; f >= 2; f /= 2)
        ranges.push_back({avg_degree.scaled(f / 2), avg_degree.scaled(f)});
    ranges.push_back({avg_degree.halved(), avg_degree});
    ranges.push_back({Rational{0, 1}, avg_degree.halved()});
    return GroupSpec::make(std::move(ranges));
}

GroupSpec sort_spec(std::uint64_t max_degree) {
    std::vector<DegreeRange> ranges;
    ranges.reserve(max_degree + 1);
    for (std::uint64_t deg = max_degree;; --deg) {
        ranges.push_back({Rational::from_integer(deg), Rational::from_integer(deg + 1)});
        if (deg == 0) break;
    }
    return GroupSpec::make(std::move(ranges));
}

GroupSpec hubsort_spec(Rational avg_degree, std::uint64_t max_degree) {
    // Integer degrees are hot iff >= ceil(avg); the cold bound is snapped to
    // that integer so unit-width hot groups stay on the integer grid.
    const std::uint64_t hot_lo = avg_degree.ceil();
    std::vector<DegreeRange> ranges;
    if (hot_lo > max_degree) {
        // No hot vertex exists; a single order-preserving group.
        ranges.push_back({Rational{0, 1}, Rational::from_integer(max_degree + 1)});
        return GroupSpec::make(std::move(ranges));
    }
    for (std::uint64_t deg = max_degree; deg >= hot_lo && deg > 0; --deg)
        ranges.push_back({Rational::from_integer(deg), Rational::from_integer(deg + 1)});
    if (hot_lo == 0)
        ranges.push_back({Rational{0, 1}, Rational{1, 1}});
    else
        ranges.push_back({Rational{0, 1}, Rational::from_integer(hot_lo)});
    return GroupSpec::make(std::move(ranges));
}

GroupSpec hubcluster_spec(Rational avg_degree) {
    if (avg_degree.is_zero()) {
        // Every vertex is hot (degree 0 >= 0); single group keeps order.
        return GroupSpec::make({{Rational{0, 1}, std::nullopt}});
    }
    std::vector<DegreeRange> ranges;
    ranges.push_back({avg_degree, std::nullopt});
    ranges.push_back({Rational{0, 1}, avg_degree});
    return GroupSpec::make(std::move(ranges));
}

GroupSpec geometric_spec(std::uint64_t threshold, std::uint64_t max_degree) {
    if (threshold == 0 || threshold >= std::max<std::uint64_t>(max_degree, 1))
        throw ParameterError("geometric spec requires 0 < threshold < max degree");
    std::vector<std::uint64_t> bounds; // ascending group lower bounds above the cold group
    for (std::uint64_t lo = threshold; lo <= max_degree; lo *= 2) {
        bounds.push_back(lo);
        if (lo > max_degree / 2) break; // next doubling would overflow past max
    }
    std::vector<DegreeRange> ranges;
    ranges.push_back({Rational::from_integer(bounds.back()), std::nullopt});
    for (std::size_t i = bounds.size() - 1; i > 0; --i)
        ranges.push_back({Rational::from_integer(bounds[i - 1]), Rational::from_integer(bounds[i])});
    ranges.push_back({Rational{0, 1}, Rational::from_integer(threshold)});
    return GroupSpec::make(std::move(ranges));
}

Permutation random_vertex(VertexId num_vertices, std::uint64_t seed) {
    std::vector<VertexId> new_to_old(num_vertices);
    for (VertexId v = 0; v < num_vertices; ++v) new_to_old[v] = v;
    SplitMix64 rng(mix_seed(seed, 0x5276)); // distinct stream per technique
    for (VertexId i = num_vertices; i > 1; --i) {
        const auto j = static_cast<VertexId>(rng.next_below(i));
        std::swap(new_to_old[i - 1], new_to_old[j]);
    }
    return Permutation::from_new_to_old(std::move(new_to_old));
}

Permutation random_block(VertexId num_vertices, std::uint32_t vertices_per_block,
                         std::uint32_t n_blocks, std::uint64_t seed) {
    if (vertices_per_block < 1) throw ParameterError("vertices_per_block must be >= 1");
    if (n_blocks < 1) throw ParameterError("n_blocks must be >= 1");
    const std::uint64_t chunk = static_cast<std::uint64_t>(vertices_per_block) * n_blocks;
    const std::uint64_t num_chunks = (num_vertices + chunk - 1) / chunk;

    std::vector<std::uint64_t> order(num_chunks);
    for (std::uint64_t c = 0; c < num_chunks; ++c) order[c] = c;
    SplitMix64 rng(mix_seed(seed, 0x524342));
    for (std::uint64_t i = num_chunks; i > 1; --i)
        std::swap(order[i - 1], order[rng.next_below(i)]);

    std::vector<VertexId> new_to_old;
    new_to_old.reserve(num_vertices);
    for (std::uint64_t c = 0; c < num_chunks; ++c) {
        const std::uint64_t begin = order[c] * chunk;
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, num_vertices);
        for (std::uint64_t v = begin; v < end; ++v) new_to_old.push_back(static_cast<VertexId>(v));
    }
    return Permutation::from_new_to_old(std::move(new_to_old));
}

Technique parse_technique(const std::string& name, std::uint32_t* rcb_n) {
    if (name == "none") return Technique::none;
    if (name == "dbg") return Technique::dbg;
    if (name == "sort") return Technique::sort;
    if (name == "hubsort") return Technique::hubsort;
    if (name == "hubcluster") return Technique::hubcluster;
    if (name == "rv") return Technique::rv;
    if (name == "rcb") return Technique::rcb;
    if (name.rfind("rcb-", 0) == 0) {
        std::uint32_t n = 0;
        const char* begin = name.data() + 4;
        auto [ptr, ec] = std::from_chars(begin, name.data() + name.size(), n);
        if (ec == std::errc{} && ptr == name.data() + name.size() && n >= 1) {
            if (rcb_n) *rcb_n = n;
            return Technique::rcb;
        }
    }
    throw ParameterError("unknown technique: " + name);
}

std::string technique_name(const TechniqueConfig& cfg) {
    switch (cfg.technique) {
        case Technique::none: return "none";
        case Technique::dbg: return "dbg";
        case Technique::sort: return "sort";
        case Technique::hubsort: return "hubsort";
        case Technique::hubcluster: return "hubcluster";
        case Technique::rv: return "rv";
        case Technique::rcb: return "rcb-" + std::to_string(cfg.rcb_n_blocks);
    }
    return "?";
}

Permutation make_permutation(const TechniqueConfig& cfg, const DegreeVector& d) {
    const VertexId n = d.num_vertices();
    switch (cfg.technique) {
        case Technique::none:
            return Permutation::identity(n);
        case Technique::dbg:
            return group_reorder(d, dbg_spec(d.avg));
        case Technique::sort:
            return group_reorder(d, sort_spec(d.max()));
        case Technique::hubsort:
            return group_reorder(d, hubsort_spec(d.avg, d.max()));
        case Technique::hubcluster:
            return group_reorder(d, hubcluster_spec(d.avg));
        case Technique::rv:
            return random_vertex(n, cfg.seed);
        case Technique::rcb:
            return random_block(n, cfg.vertices_per_block, cfg.rcb_n_blocks, cfg.seed);
    }
    throw ParameterError("unknown technique");
}

} // namespace graphorder
