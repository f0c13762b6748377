#include "graphorder/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "graphorder/error.hpp"
#include "graphorder/rng.hpp"

namespace graphorder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

KernelResult pagerank(const CsrPair& g, const PagerankOptions& opts) {
    if (opts.max_iters == 0) throw ParameterError("pagerank requires max_iters >= 1");
    const VertexId n = g.num_vertices();
    KernelResult result;
    result.properties.push_back({"rank", std::vector<double>(n, n ? 1.0 / n : 0.0)});
    if (n == 0) {
        result.iterations = 1;
        result.per_iteration_seconds.push_back(0);
        return result;
    }

    const CsrGraph& in_csr = g.in_csr;
    std::vector<double>& rank = result.properties[0].values;
    std::vector<double> next(n);
    std::vector<double> contrib(n);

    for (std::uint64_t iter = 0; iter < opts.max_iters; ++iter) {
        const auto t0 = Clock::now();
        double dangling = 0;
        for (VertexId u = 0; u < n; ++u) {
            const std::uint64_t out_deg = g.out_csr.degree(u);
            if (out_deg == 0) {
                contrib[u] = 0;
                dangling += rank[u];
            } else {
                contrib[u] = rank[u] / static_cast<double>(out_deg);
            }
        }
        const double base = (1.0 - opts.damping) / n + opts.damping * dangling / n;

#pragma omp parallel for schedule(dynamic, 1024)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            double sum = 0; // ascending neighbor order: thread-count independent
            for (VertexId u : in_csr.neighbors(static_cast<VertexId>(v))) sum += contrib[u];
            next[static_cast<std::size_t>(v)] = base + opts.damping * sum;
        }

        double delta = 0;
        for (VertexId v = 0; v < n; ++v) delta += std::abs(next[v] - rank[v]);
        rank.swap(next);
        ++result.iterations;
        result.per_iteration_seconds.push_back(seconds_since(t0));
        if (delta < opts.tolerance) break;
    }
    return result;
}

KernelResult pagerank_delta(const CsrPair& g, const PagerankDeltaOptions& opts) {
    if (opts.max_iters == 0) throw ParameterError("pagerank-delta requires max_iters >= 1");
    const VertexId n = g.num_vertices();
    KernelResult result;
    result.properties.push_back({"rank", std::vector<double>(n, n ? 1.0 / n : 0.0)});
    if (n == 0) {
        result.iterations = 1;
        result.per_iteration_seconds.push_back(0);
        return result;
    }

    const CsrGraph& out_csr = g.out_csr;
    std::vector<double>& rank = result.properties[0].values;
    std::vector<double> delta(n, 1.0 / n); // first iteration pushes the initial mass
    std::vector<double> accum(n, 0.0);
    std::vector<char> active(n, 1);

    for (std::uint64_t iter = 0; iter < opts.max_iters; ++iter) {
        const auto t0 = Clock::now();
        std::fill(accum.begin(), accum.end(), 0.0);
        double dangling = 0;
        bool any_active = false;
        for (VertexId u = 0; u < n; ++u) {
            if (!active[u]) continue;
            any_active = true;
            const std::uint64_t out_deg = out_csr.degree(u);
            if (out_deg == 0) {
                dangling += delta[u];
                continue;
            }
            const double push = delta[u] / static_cast<double>(out_deg);
            for (VertexId v : out_csr.neighbors(u)) accum[v] += push;
        }
        if (!any_active) break;

        const double dangling_share = dangling / n;
        double l1 = 0;
        if (iter == 0) {
            for (VertexId v = 0; v < n; ++v) {
                const double fresh = (1.0 - opts.damping) / n +
                                     opts.damping * (accum[v] + dangling_share);
                delta[v] = fresh - rank[v];
                rank[v] = fresh;
                l1 += std::abs(delta[v]);
                active[v] = std::abs(delta[v]) > opts.delta_threshold * rank[v] ? 1 : 0;
            }
        } else {
            for (VertexId v = 0; v < n; ++v) {
                delta[v] = opts.damping * (accum[v] + dangling_share);
                rank[v] += delta[v];
                l1 += std::abs(delta[v]);
                active[v] = std::abs(delta[v]) > opts.delta_threshold * rank[v] ? 1 : 0;
            }
        }
        ++result.iterations;
        result.per_iteration_seconds.push_back(seconds_since(t0));
        if (l1 < opts.tolerance) break;
    }
    if (result.iterations == 0) {
        result.iterations = 1;
        result.per_iteration_seconds.push_back(0);
    }
    return result;
}

KernelResult sssp_bellman_ford(const CsrPair& g, VertexId root) {
    const VertexId n = g.num_vertices();
    if (root >= n) throw ParameterError("sssp root out of range");
    if (!g.out_csr.weighted) throw ParameterError("sssp requires a weighted graph");

    KernelResult result;
    result.properties.push_back({"distance", std::vector<double>(n, kInf)});
    std::vector<double>& dist = result.properties[0].values;
    dist[root] = 0;

    std::vector<VertexId> frontier{root};
    std::vector<VertexId> next;
    std::vector<char> queued(n, 0);

    while (!frontier.empty()) {
        const auto t0 = Clock::now();
        next.clear();
        for (VertexId u : frontier) {
            const auto nbrs = g.out_csr.neighbors(u);
            const auto wts = g.out_csr.neighbor_weights(u);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const VertexId v = nbrs[i];
                const double cand = dist[u] + wts[i];
                if (cand < dist[v]) {
                    dist[v] = cand;
                    if (!queued[v]) {
                        queued[v] = 1;
                        next.push_back(v);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (VertexId v : next) queued[v] = 0;
        frontier.swap(next);
        ++result.iterations;
        result.per_iteration_seconds.push_back(seconds_since(t0));
    }
    return result;
}

KernelResult bc(const CsrPair& g, VertexId root) {
    const VertexId n = g.num_vertices();
    if (root >= n) throw ParameterError("bc root out of range");

    KernelResult result;
    result.properties.push_back({"centrality", std::vector<double>(n, 0.0)});
    std::vector<double>& centrality = result.properties[0].values;

    std::vector<std::int64_t> depth(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<VertexId>> levels;

    depth[root] = 0;
    sigma[root] = 1;
    levels.push_back({root});

    // Forward: level-synchronous BFS over out-edges counting shortest paths.
    while (true) {
        const auto t0 = Clock::now();
        const std::vector<VertexId>& cur = levels.back();
        std::vector<VertexId> nxt;
        for (VertexId u : cur) {
            for (VertexId v : g.out_csr.neighbors(u)) {
                if (depth[v] == -1) {
                    depth[v] = depth[u] + 1;
                    nxt.push_back(v);
                }
                if (depth[v] == depth[u] + 1) sigma[v] += sigma[u];
            }
        }
        ++result.iterations;
        result.per_iteration_seconds.push_back(seconds_since(t0));
        if (nxt.empty()) break;
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        levels.push_back(std::move(nxt));
    }

    // Backward: dependency accumulation in reverse BFS order.
    std::vector<double> delta(n, 0.0);
    for (std::size_t li = levels.size(); li-- > 0;) {
        for (VertexId u : levels[li]) {
            double acc = 0;
            for (VertexId v : g.out_csr.neighbors(u))
                if (depth[v] == depth[u] + 1) acc += sigma[u] / sigma[v] * (1.0 + delta[v]);
            delta[u] += acc;
        }
    }
    for (VertexId v = 0; v < n; ++v) centrality[v] = delta[v];
    centrality[root] = 0;
    return result;
}

std::vector<VertexId> sample_vertices(VertexId num_vertices, std::uint32_t k, std::uint64_t seed) {
    k = static_cast<std::uint32_t>(std::min<std::uint64_t>(k, num_vertices));
    std::vector<VertexId> pool(num_vertices);
    for (VertexId v = 0; v < num_vertices; ++v) pool[v] = v;
    SplitMix64 rng(mix_seed(seed, 0x5261)); // sampling stream
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<VertexId>(rng.next_below(num_vertices - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

KernelResult radii_from_sources(const CsrPair& g, const std::vector<VertexId>& sources) {
    const VertexId n = g.num_vertices();
    for (VertexId s : sources)
        if (s >= n) throw ParameterError("radii source out of range");

    KernelResult result;
    result.properties.push_back({"radius", std::vector<double>(n, kInf)});
    std::vector<double>& radius = result.properties[0].values;
    if (n == 0 || sources.empty()) {
        result.iterations = 1;
        result.per_iteration_seconds.push_back(0);
        return result;
    }

    const std::size_t words = (sources.size() + 63) / 64;
    std::vector<std::uint64_t> visited(static_cast<std::size_t>(n) * words, 0);
    std::vector<std::uint64_t> next(visited.size(), 0);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        visited[static_cast<std::size_t>(sources[i]) * words + i / 64] |= std::uint64_t{1} << (i % 64);
        radius[sources[i]] = 0;
    }

    std::uint64_t level = 0;
    bool changed = true;
    while (changed) {
        const auto t0 = Clock::now();
        ++level;
        changed = false;
        bool changed_local = false;
#pragma omp parallel for schedule(dynamic, 1024) reduction(|| : changed_local)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            const std::size_t row = static_cast<std::size_t>(v) * words;
            bool grew = false;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t acc = visited[row + w];
                for (VertexId u : g.in_csr.neighbors(static_cast<VertexId>(v)))
                    acc |= visited[static_cast<std::size_t>(u) * words + w];
                next[row + w] = acc;
                grew = grew || acc != visited[row + w];
            }
            if (grew) {
                radius[static_cast<std::size_t>(v)] = static_cast<double>(level);
                changed_local = true;
            }
        }
        changed = changed_local;
        visited.swap(next);
        ++result.iterations;
        result.per_iteration_seconds.push_back(seconds_since(t0));
    }
    return result;
}

KernelResult radii(const CsrPair& g, std::uint32_t sample_k, std::uint64_t seed) {
    if (sample_k < 1) throw ParameterError("radii requires sample_k >= 1");
    return radii_from_sources(g, sample_vertices(g.num_vertices(), sample_k, seed));
}

VertexId remap_root(VertexId root, const Permutation& p) {
    if (root >= p.size()) throw ParameterError("root out of range");
    return p.to_new(root);
}

Kernel parse_kernel(const std::string& name) {
    if (name == "pr") return Kernel::pr;
    if (name == "prd") return Kernel::prd;
    if (name == "sssp") return Kernel::sssp;
    if (name == "bc") return Kernel::bc;
    if (name == "radii") return Kernel::radii;
    throw ParameterError("unknown kernel: " + name);
}

std::string kernel_name(Kernel k) {
    switch (k) {
        case Kernel::pr: return "pr";
        case Kernel::prd: return "prd";
        case Kernel::sssp: return "sssp";
        case Kernel::bc: return "bc";
        case Kernel::radii: return "radii";
    }
    return "?";
}

bool kernel_is_root_dependent(Kernel k) {
    return k == Kernel::sssp || k == Kernel::bc;
}

DegreeKind kernel_degree_kind(Kernel k) {
    switch (k) {
        case Kernel::bc:
        case Kernel::pr:
        case Kernel::radii: return DegreeKind::out;
        case Kernel::sssp:
        case Kernel::prd: return DegreeKind::in;
    }
    return DegreeKind::out;
}

} // namespace graphorder
