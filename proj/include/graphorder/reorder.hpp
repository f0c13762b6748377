#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphorder/csr.hpp"
#include "graphorder/permutation.hpp"
#include "graphorder/rational.hpp"

namespace graphorder {

// Half-open degree range [lo, hi); hi absent means unbounded. Bounds are
// exact rationals so thresholds derived from the average degree need no
// rounding.
struct DegreeRange {
    Rational lo;
    std::optional<Rational> hi;

    bool contains(std::uint64_t degree) const {
        return degree_ge(degree, lo) && (!hi || degree_lt(degree, *hi));
    }
};

// Ordered list of disjoint, contiguous degree ranges, hottest first. Every
// degree-driven technique below is expressed as a GroupSpec fed to
// group_reorder.
class GroupSpec {
public:
    // Validates: K >= 1, lo < hi per range, contiguity (next.hi == cur.lo),
    // only the hottest range may be unbounded. Throws ParameterError.
    static GroupSpec make(std::vector<DegreeRange> ranges);

    const std::vector<DegreeRange>& ranges() const { return ranges_; }
    std::size_t num_groups() const { return ranges_.size(); }

    // Group index of a degree, hottest = 0; nullopt when uncovered.
    std::optional<std::size_t> group_of(std::uint64_t degree) const;

private:
    std::vector<DegreeRange> ranges_;
    std::vector<Rational> ascending_lo_; // ranges_[K-1-i].lo, for binary search
};

// Stable grouping pass: histogram group sizes, prefix-sum group bases, then
// scatter preserving original order within each group. O(V log K).
// Uncovered degree -> ParameterError naming the degree.
Permutation group_reorder(const DegreeVector& d, const GroupSpec& spec);

// Eight geometric ranges around the average degree D:
// [32D,inf) [16D,32D) [8D,16D) [4D,8D) [2D,4D) [D,2D) [D/2,D) [0,D/2).
GroupSpec dbg_spec(Rational avg_degree);

// One unit-width group per degree, descending: full stable sort by degree.
GroupSpec sort_spec(std::uint64_t max_degree);

// Hot vertices (degree >= avg) in descending unit-width groups, then one
// cold group keeping original order.
GroupSpec hubsort_spec(Rational avg_degree, std::uint64_t max_degree);

// Two groups: hot block then cold block, both order-preserving.
GroupSpec hubcluster_spec(Rational avg_degree);

// Generalized geometric builder: [0, C), then [2^n C, 2^{n+1} C) for
// n = 0 .. floor(log2(M / C)), hottest first.
GroupSpec geometric_spec(std::uint64_t threshold, std::uint64_t max_degree);

// Uniform random bijection (seeded Fisher-Yates).
Permutation random_vertex(VertexId num_vertices, std::uint64_t seed);

// Random reordering at the granularity of n_blocks cache blocks: chunks of
// n_blocks * vertices_per_block consecutive vertices are shuffled as units;
// the final ragged chunk participates as-is.
Permutation random_block(VertexId num_vertices, std::uint32_t vertices_per_block,
                         std::uint32_t n_blocks, std::uint64_t seed);

// Named techniques as the CLI and bench harness expose them.
enum class Technique { none, dbg, sort, hubsort, hubcluster, rv, rcb };

struct TechniqueConfig {
    Technique technique = Technique::none;
    std::uint32_t rcb_n_blocks = 1;
    std::uint32_t vertices_per_block = 8; // 64-byte block / 8-byte property
    std::uint64_t seed = 1;
};

Technique parse_technique(const std::string& name, std::uint32_t* rcb_n = nullptr);
std::string technique_name(const TechniqueConfig& cfg);

// Dispatch: builds the permutation for a technique from a degree vector
// (ignored by rv/rcb/none).
Permutation make_permutation(const TechniqueConfig& cfg, const DegreeVector& d);

} // namespace graphorder
