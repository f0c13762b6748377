#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graphorder/edge_list.hpp"
#include "graphorder/permutation.hpp"
#include "graphorder/rational.hpp"

namespace graphorder {

enum class Direction : std::uint8_t {
    in_edges = 0,  // targets under v are the sources of edges pointing to v (pull)
    out_edges = 1, // targets under v are the destinations of edges leaving v (push)
};

enum class DegreeKind { in, out, sum };

struct DegreeVector {
    DegreeKind kind = DegreeKind::out;
    std::vector<std::uint64_t> values;
    Rational avg; // sum(values) / V, exact

    VertexId num_vertices() const { return static_cast<VertexId>(values.size()); }
    std::uint64_t max() const;
};

// Compressed sparse row adjacency. Neighbor lists are kept sorted ascending
// after construction and after relabeling; ties between parallel edges keep
// their weights paired with them.
struct CsrGraph {
    Direction direction = Direction::out_edges;
    std::vector<EdgeIndex> offsets;  // V+1, offsets[0] = 0, non-decreasing
    std::vector<VertexId> targets;   // E
    std::vector<double> weights;     // empty, or size E
    bool weighted = false;

    VertexId num_vertices() const { return static_cast<VertexId>(offsets.size() - 1); }
    EdgeIndex num_edges() const { return offsets.empty() ? 0 : offsets.back(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
    std::span<const double> neighbor_weights(VertexId v) const {
        return {weights.data() + offsets[v], weights.data() + offsets[v + 1]};
    }
    std::uint64_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }

    friend bool operator==(const CsrGraph&, const CsrGraph&) = default;
};

// Counting-sort construction, O(V + E).
CsrGraph build_csr(const EdgeList& el, Direction direction);

// Flips direction; transpose(transpose(g)) == g element-wise.
CsrGraph transpose(const CsrGraph& g);

DegreeVector degrees(const CsrGraph& g, DegreeKind kind);

// Relabels vertices: adjacency of v lands at old_to_new[v], every target is
// rewritten, neighbor lists are re-sorted, weights follow their edges.
CsrGraph apply_permutation(const CsrGraph& g, const Permutation& p);

// Convenience pair for kernels that need both directions.
struct CsrPair {
    CsrGraph in_csr;
    CsrGraph out_csr;

    static CsrPair from_edge_list(const EdgeList& el);
    static CsrPair from_csr(const CsrGraph& g);

    VertexId num_vertices() const { return in_csr.num_vertices(); }
    EdgeIndex num_edges() const { return in_csr.num_edges(); }

    CsrPair permuted(const Permutation& p) const;
};

// Binary format, little-endian, bit-exact:
//   8-byte magic "CSRGRAF1", u8 direction, u8 weighted flag, u64 V, u64 E,
//   (V+1) u64 offsets, E u64 targets, then E f64 weights when weighted.
void serialize_csr(const CsrGraph& g, std::ostream& out);
CsrGraph deserialize_csr(std::istream& in);
void save_csr(const CsrGraph& g, const std::string& path);
CsrGraph load_csr(const std::string& path);

// Mapping file: V u64 entries, old -> new, little-endian.
void save_mapping(const Permutation& p, const std::string& path);
Permutation load_mapping(const std::string& path);

} // namespace graphorder
