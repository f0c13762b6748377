#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphorder/csr.hpp"
#include "graphorder/kernels.hpp"
#include "graphorder/reorder.hpp"

namespace graphorder {

enum class ReportFormat { csv, json };
ReportFormat parse_format(const std::string& name);

struct BenchRow {
    std::string dataset;
    std::string technique;
    std::string kernel;
    double reorder_s = 0;         // permutation build + CSR rebuild
    double mean_s = 0;            // mean kernel time, first run discarded
    double cov = 0;               // coefficient of variation of kept runs
    double speedup_ex = 1.0;      // baseline_mean / mean
    double speedup_inc = 1.0;     // baseline_mean / (mean + reorder_s)
    std::vector<double> run_seconds; // kept runs (runs - 1 entries)
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

struct BenchOptions {
    std::uint32_t runs = 11;  // first run discarded as warm-up
    std::uint32_t roots = 8;  // root-dependent kernels aggregate over these
    std::uint64_t seed = 1;
    std::optional<DegreeKind> degree_kind; // default: kernel's own kind
    PagerankOptions pr;
    PagerankDeltaOptions prd;
    std::uint32_t radii_sample_k = 64;
};

// Per-technique measurement; kernel outputs are returned so callers can
// check that reordering did not change results.
struct BenchMeasurement {
    BenchRow row;
    std::vector<KernelResult> results; // one per root for sssp/bc, else one
};

BenchMeasurement bench_one(const CsrPair& g, const std::string& dataset,
                           const TechniqueConfig& technique, Kernel kernel,
                           const BenchOptions& opts);

// Baseline (technique none) first, then each requested technique, with
// speedups filled in against the baseline row.
BenchReport bench(const CsrPair& g, const std::string& dataset,
                  const std::vector<TechniqueConfig>& techniques, Kernel kernel,
                  const BenchOptions& opts);

// Smallest n with n * (baseline - reordered) >= reorder_time; nullopt when
// there is no per-iteration saving.
std::optional<std::uint64_t> amortization_iterations(double reorder_time,
                                                     double baseline_iter_time,
                                                     double reordered_iter_time);

// t * baseline / (reorder_time + t * reordered).
double net_speedup(std::uint64_t traversals, double reorder_time,
                   double baseline_traversal, double reordered_traversal);

struct SweepPoint {
    std::uint64_t traversals = 0;
    double net = 0;
};

struct SweepRow {
    std::string dataset;
    std::string technique;
    double reorder_s = 0;
    double baseline_traversal_s = 0;
    double reordered_traversal_s = 0;
    std::vector<SweepPoint> points;
};

SweepRow traversal_sweep(const CsrPair& g, const std::string& dataset,
                         const TechniqueConfig& technique, Kernel kernel,
                         const std::vector<std::uint64_t>& traversal_counts,
                         const BenchOptions& opts);

// CSV columns: dataset,technique,kernel,reorder_s,mean_s,cov,speedup_ex,speedup_inc.
// Floats carry 4 significant digits; JSON is schema-versioned "v1".
std::string emit_report(const BenchReport& report, ReportFormat format);
BenchReport parse_report_json(const std::string& text);

} // namespace graphorder
