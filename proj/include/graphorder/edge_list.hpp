#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace graphorder {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

struct Edge {
    VertexId src = 0;
    VertexId dst = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Raw directed edge set as parsed or generated. Self-loops and duplicate
// edges are kept; num_vertices is 1 + max id unless a header declared more
// (isolated trailing vertices are only representable via the header).
struct EdgeList {
    VertexId num_vertices = 0;
    std::vector<Edge> edges;
    bool weighted = false;
    std::vector<double> weights; // size == edges.size() when weighted

    EdgeIndex num_edges() const { return edges.size(); }
};

// Text format, SNAP-compatible: one "src dst" (or "src dst weight") per
// line, '#' and '%' start comment lines. A comment of the form
// "# vertices: N" overrides the inferred vertex count.
EdgeList parse_edge_list(std::istream& in, bool weighted);
EdgeList parse_edge_list_file(const std::string& path, bool weighted);

void write_edge_list(std::ostream& out, const EdgeList& el);

} // namespace graphorder
