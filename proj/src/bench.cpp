#include "graphorder/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "graphorder/error.hpp"
#include "graphorder/rng.hpp"

namespace graphorder {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double round4(double v) {
    // Same 4-significant-digit rounding the CSV text carries.
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return std::strtod(buf, nullptr);
}

std::vector<VertexId> pick_roots(const CsrPair& g, std::uint32_t roots, std::uint64_t seed) {
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.out_csr.degree(v) > 0) candidates.push_back(v);
    if (candidates.empty()) throw ParameterError("graph has no vertex with out-degree >= 1");
    SplitMix64 rng(mix_seed(seed, 0x726f6f74)); // root stream
    const std::uint32_t k =
        static_cast<std::uint32_t>(std::min<std::size_t>(roots, candidates.size()));
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.next_below(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(k);
    return candidates;
}

KernelResult run_kernel(const CsrPair& g, Kernel kernel, VertexId root,
                        const std::vector<VertexId>& radii_sources, const BenchOptions& opts) {
    switch (kernel) {
        case Kernel::pr: return pagerank(g, opts.pr);
        case Kernel::prd: return pagerank_delta(g, opts.prd);
        case Kernel::sssp: return sssp_bellman_ford(g, root);
        case Kernel::bc: return bc(g, root);
        case Kernel::radii: return radii_from_sources(g, radii_sources);
    }
    throw ParameterError("unknown kernel");
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ParameterError("unknown report format: " + name);
}

BenchMeasurement bench_one(const CsrPair& g, const std::string& dataset,
                           const TechniqueConfig& technique, Kernel kernel,
                           const BenchOptions& opts) {
    if (opts.runs < 2) throw ParameterError("bench requires at least 2 runs");

    BenchMeasurement m;
    m.row.dataset = dataset;
    m.row.technique = technique_name(technique);
    m.row.kernel = kernel_name(kernel);

    // Roots and radii sources are drawn on the baseline ids, then remapped,
    // so every technique computes the same logical result.
    std::vector<VertexId> roots;
    if (kernel_is_root_dependent(kernel)) roots = pick_roots(g, opts.roots, opts.seed);
    std::vector<VertexId> radii_sources;
    if (kernel == Kernel::radii)
        radii_sources = sample_vertices(g.num_vertices(), opts.radii_sample_k, opts.seed);

    // Reordering cost covers both permutation construction and CSR rebuild.
    const CsrPair* graph = &g;
    CsrPair reordered;
    Permutation perm = Permutation::identity(g.num_vertices());
    if (technique.technique != Technique::none) {
        const DegreeKind kind =
            opts.degree_kind ? *opts.degree_kind : kernel_degree_kind(kernel);
        const auto t0 = Clock::now();
        const DegreeVector d = degrees(g.in_csr, kind);
        perm = make_permutation(technique, d);
        reordered = g.permuted(perm);
        m.row.reorder_s = seconds_since(t0);
        graph = &reordered;
        for (VertexId& r : roots) r = remap_root(r, perm);
        for (VertexId& s : radii_sources) s = remap_root(s, perm);
    }

    for (std::uint32_t run = 0; run < opts.runs; ++run) {
        double elapsed = 0;
        std::vector<KernelResult> results;
        if (kernel_is_root_dependent(kernel)) {
            for (VertexId root : roots) {
                const auto t0 = Clock::now();
                KernelResult r = run_kernel(*graph, kernel, root, radii_sources, opts);
                elapsed += seconds_since(t0);
                if (run == 0) results.push_back(std::move(r));
            }
        } else {
            const auto t0 = Clock::now();
            KernelResult r = run_kernel(*graph, kernel, 0, radii_sources, opts);
            elapsed = seconds_since(t0);
            if (run == 0) results.push_back(std::move(r));
        }
        if (run == 0)
            m.results = std::move(results); // warm-up run: keep outputs, drop timing
        else
            m.row.run_seconds.push_back(elapsed);
    }

    double sum = 0;
    for (double t : m.row.run_seconds) sum += t;
    m.row.mean_s = sum / static_cast<double>(m.row.run_seconds.size());
    double var = 0;
    for (double t : m.row.run_seconds) var += (t - m.row.mean_s) * (t - m.row.mean_s);
    var /= static_cast<double>(m.row.run_seconds.size());
    m.row.cov = m.row.mean_s > 0 ? std::sqrt(var) / m.row.mean_s : 0;
    return m;
}

BenchReport bench(const CsrPair& g, const std::string& dataset,
                  const std::vector<TechniqueConfig>& techniques, Kernel kernel,
                  const BenchOptions& opts) {
    BenchReport report;
    BenchMeasurement baseline = bench_one(g, dataset, TechniqueConfig{}, kernel, opts);
    baseline.row.speedup_ex = 1.0;
    baseline.row.speedup_inc = 1.0;
    report.rows.push_back(baseline.row);

    for (const TechniqueConfig& t : techniques) {
        if (t.technique == Technique::none) continue; // baseline row already present
        BenchMeasurement m = bench_one(g, dataset, t, kernel, opts);
        m.row.speedup_ex = baseline.row.mean_s / m.row.mean_s;
        m.row.speedup_inc = baseline.row.mean_s / (m.row.mean_s + m.row.reorder_s);
        report.rows.push_back(m.row);
    }
    return report;
}

std::optional<std::uint64_t> amortization_iterations(double reorder_time,
                                                     double baseline_iter_time,
                                                     double reordered_iter_time) {
    const double saving = baseline_iter_time - reordered_iter_time;
    if (!(saving > 0)) return std::nullopt;
    if (reorder_time <= 0) return 0;
    auto n = static_cast<std::uint64_t>(std::ceil(reorder_time / saving));
    // Pin down the exact minimum under the same float arithmetic the
    // definition uses (n * saving >= reorder_time).
    while (n > 0 && static_cast<double>(n - 1) * saving >= reorder_time) --n;
    while (static_cast<double>(n) * saving < reorder_time) ++n;
    return n;
}

double net_speedup(std::uint64_t traversals, double reorder_time, double baseline_traversal,
                   double reordered_traversal) {
    const double t = static_cast<double>(traversals);
    return t * baseline_traversal / (reorder_time + t * reordered_traversal);
}

SweepRow traversal_sweep(const CsrPair& g, const std::string& dataset,
                         const TechniqueConfig& technique, Kernel kernel,
                         const std::vector<std::uint64_t>& traversal_counts,
                         const BenchOptions& opts) {
    BenchMeasurement baseline = bench_one(g, dataset, TechniqueConfig{}, kernel, opts);
    BenchMeasurement treated = bench_one(g, dataset, technique, kernel, opts);
    const double per_traversal_div =
        kernel_is_root_dependent(kernel) ? static_cast<double>(opts.roots) : 1.0;

    SweepRow row;
    row.dataset = dataset;
    row.technique = technique_name(technique);
    row.reorder_s = treated.row.reorder_s;
    row.baseline_traversal_s = baseline.row.mean_s / per_traversal_div;
    row.reordered_traversal_s = treated.row.mean_s / per_traversal_div;
    for (std::uint64_t t : traversal_counts)
        row.points.push_back(
            {t, net_speedup(t, row.reorder_s, row.baseline_traversal_s,
                            row.reordered_traversal_s)});
    return row;
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::string out = "dataset,technique,kernel,reorder_s,mean_s,cov,speedup_ex,speedup_inc\n";
        for (const BenchRow& r : report.rows) {
            out += r.dataset + ',' + r.technique + ',' + r.kernel + ',' + fmt4(r.reorder_s) +
                   ',' + fmt4(r.mean_s) + ',' + fmt4(r.cov) + ',' + fmt4(r.speedup_ex) + ',' +
                   fmt4(r.speedup_inc) + '\n';
        }
        return out;
    }

    nlohmann::json j;
    j["schema"] = "v1";
    j["rows"] = nlohmann::json::array();
    for (const BenchRow& r : report.rows) {
        j["rows"].push_back({{"dataset", r.dataset},
                             {"technique", r.technique},
                             {"kernel", r.kernel},
                             {"reorder_s", round4(r.reorder_s)},
                             {"mean_s", round4(r.mean_s)},
                             {"cov", round4(r.cov)},
                             {"speedup_ex", round4(r.speedup_ex)},
                             {"speedup_inc", round4(r.speedup_inc)}});
    }
    return j.dump(2) + "\n";
}

BenchReport parse_report_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"] != "v1")
        throw FormatError("unsupported report schema");
    BenchReport report;
    for (const auto& item : j["rows"]) {
        BenchRow r;
        r.dataset = item.at("dataset").get<std::string>();
        r.technique = item.at("technique").get<std::string>();
        r.kernel = item.at("kernel").get<std::string>();
        r.reorder_s = item.at("reorder_s").get<double>();
        r.mean_s = item.at("mean_s").get<double>();
        r.cov = item.at("cov").get<double>();
        r.speedup_ex = item.at("speedup_ex").get<double>();
        r.speedup_inc = item.at("speedup_inc").get<double>();
        report.rows.push_back(std::move(r));
    }
    return report;
}

} // namespace graphorder
