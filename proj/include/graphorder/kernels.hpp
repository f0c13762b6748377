#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphorder/csr.hpp"
#include "graphorder/permutation.hpp"

namespace graphorder {

struct PropertyArray {
    std::string name;
    std::vector<double> values; // length V; unreachable/undefined = +inf
};

struct KernelResult {
    std::vector<PropertyArray> properties;
    std::uint64_t iterations = 0;
    std::vector<double> per_iteration_seconds;

    const PropertyArray& primary() const { return properties.front(); }
};

struct PagerankOptions {
    double damping = 0.85;
    double tolerance = 1e-8; // L1 delta between iterations
    std::uint64_t max_iters = 100;
};

// Pull-based PR over in-edges; dangling mass is redistributed uniformly.
// Per-vertex accumulation runs in ascending neighbor order, so results are
// identical for any thread count.
KernelResult pagerank(const CsrPair& g, const PagerankOptions& opts = {});

struct PagerankDeltaOptions {
    double damping = 0.85;
    double delta_threshold = 0.01; // active iff |delta| > threshold * rank
    double tolerance = 1e-8;
    std::uint64_t max_iters = 100;
};

// Push-based PR-Delta over out-edges; with delta_threshold = 0 it performs
// the same update as pagerank and converges to the same ranks.
KernelResult pagerank_delta(const CsrPair& g, const PagerankDeltaOptions& opts = {});

// Frontier-based Bellman-Ford; requires positive weights on the out-CSR.
// Unreachable vertices report +inf.
KernelResult sssp_bellman_ford(const CsrPair& g, VertexId root);

// Single-root Brandes pass: forward BFS counts shortest paths, backward pass
// accumulates dependency scores.
KernelResult bc(const CsrPair& g, VertexId root);

// k simultaneous BFS waves tracked in bit-vectors; estimate of v is the last
// level at which a new wave reaches v. Sources drawn without replacement by
// seed; never-reached vertices report +inf.
KernelResult radii(const CsrPair& g, std::uint32_t sample_k, std::uint64_t seed);
KernelResult radii_from_sources(const CsrPair& g, const std::vector<VertexId>& sources);

std::vector<VertexId> sample_vertices(VertexId num_vertices, std::uint32_t k, std::uint64_t seed);

VertexId remap_root(VertexId root, const Permutation& p);

enum class Kernel { pr, prd, sssp, bc, radii };

Kernel parse_kernel(const std::string& name);
std::string kernel_name(Kernel k);
bool kernel_is_root_dependent(Kernel k);
// Degree kind each kernel's reordering uses by default: out for bc/pr/radii,
// in for sssp/prd.
DegreeKind kernel_degree_kind(Kernel k);

} // namespace graphorder
