// graphorder: skew-aware vertex reordering toolkit for power-law graphs.
//
// Subcommands: generate, ingest, reorder, stats, run, bench, sweep, cachesim.
// Exit codes: 0 ok, 2 parameter error, 3 format error, 4 invariant violation.

#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphorder/bench.hpp"
#include "graphorder/cachesim.hpp"
#include "graphorder/csr.hpp"
#include "graphorder/edge_list.hpp"
#include "graphorder/error.hpp"
#include "graphorder/generate.hpp"
#include "graphorder/kernels.hpp"
#include "graphorder/metrics.hpp"
#include "graphorder/reorder.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using namespace graphorder;

struct GlobalOptions {
    int threads = 0;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
};

void write_text_output(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw FormatError("cannot open for writing: " + g.out);
    f << text;
}

DegreeKind parse_degree_kind(const std::string& name) {
    if (name == "in") return DegreeKind::in;
    if (name == "out") return DegreeKind::out;
    if (name == "sum") return DegreeKind::sum;
    throw ParameterError("unknown degree kind: " + name);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

TechniqueConfig technique_from_name(const std::string& name, std::uint64_t seed,
                                    std::uint32_t rcb_n, std::uint32_t vertices_per_block) {
    TechniqueConfig cfg;
    cfg.seed = seed;
    cfg.rcb_n_blocks = rcb_n;
    cfg.vertices_per_block = vertices_per_block;
    cfg.technique = parse_technique(name, &cfg.rcb_n_blocks);
    return cfg;
}

std::string fmt4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
    RmatParams params;
    bool binary = false;
    std::string direction = "out";
};

int run_generate(const GlobalOptions& g, const GenerateArgs& args) {
    RmatParams p = args.params;
    p.seed = g.seed;
    const EdgeList el = rmat_generate(p);
    if (!args.binary) {
        std::ostringstream text;
        write_edge_list(text, el);
        write_text_output(g, text.str());
        return 0;
    }
    const Direction dir =
        args.direction == "in" ? Direction::in_edges : Direction::out_edges;
    const CsrGraph csr = build_csr(el, dir);
    if (g.out.empty()) {
        serialize_csr(csr, std::cout);
    } else {
        save_csr(csr, g.out);
    }
    return 0;
}

// ---- ingest ----------------------------------------------------------------

struct IngestArgs {
    std::string input;
    bool weighted = false;
    std::string direction = "out";
    std::uint64_t num_vertices = 0;
};

int run_ingest(const GlobalOptions& g, const IngestArgs& args) {
    EdgeList el = parse_edge_list_file(args.input, args.weighted);
    if (args.num_vertices > 0) {
        if (args.num_vertices < el.num_vertices)
            throw ParameterError("--num-vertices is below the highest vertex id");
        el.num_vertices = static_cast<VertexId>(args.num_vertices);
    }
    const Direction dir =
        args.direction == "in" ? Direction::in_edges : Direction::out_edges;
    if (g.out.empty()) throw ParameterError("ingest requires --out for the binary CSR");
    save_csr(build_csr(el, dir), g.out);
    return 0;
}

// ---- reorder ---------------------------------------------------------------

struct ReorderArgs {
    std::string input;
    std::string technique = "dbg";
    std::string degree = "out";
    std::uint32_t rcb_n = 1;
    std::uint32_t vertices_per_block = 8;
    std::string mapping_path;
};

int run_reorder(const GlobalOptions& g, const ReorderArgs& args) {
    const CsrGraph csr = load_csr(args.input);
    const TechniqueConfig cfg =
        technique_from_name(args.technique, g.seed, args.rcb_n, args.vertices_per_block);
    const DegreeVector d = degrees(csr, parse_degree_kind(args.degree));
    const Permutation perm = make_permutation(cfg, d);
    if (g.out.empty()) throw ParameterError("reorder requires --out for the binary CSR");
    save_csr(apply_permutation(csr, perm), g.out);
    if (!args.mapping_path.empty()) save_mapping(perm, args.mapping_path);
    return 0;
}

// ---- stats -----------------------------------------------------------------

struct StatsArgs {
    std::string input;
    bool all = false;
    bool skew = false;
    bool footprint = false;
    bool ranges = false;
    bool preservation = false;
    std::string degree = "in";
    std::string mapping_path;
    std::uint64_t window = 8;
    std::uint32_t vertices_per_block = 8;
};

int run_stats(const GlobalOptions& g, const StatsArgs& args_in) {
    StatsArgs args = args_in;
    if (!args.skew && !args.footprint && !args.ranges && !args.preservation) args.all = true;
    const CsrGraph csr = load_csr(args.input);
    const DegreeVector d = degrees(csr, parse_degree_kind(args.degree));
    const Permutation order = args.mapping_path.empty()
                                  ? Permutation::identity(csr.num_vertices())
                                  : load_mapping(args.mapping_path);

    std::vector<std::pair<std::string, std::string>> columns;
    if (args.all || args.skew) {
        const SkewStats s = skew_stats(d);
        columns.emplace_back("hot_pct", fmt4(s.hot_fraction_pct));
        columns.emplace_back("edge_cov_pct", fmt4(s.edge_coverage_pct));
    }
    if (args.all || args.footprint) {
        const FootprintReport r = hot_per_block(order, d, args.vertices_per_block);
        columns.emplace_back("avg_hot_per_block", fmt4(r.avg_hot_per_block));
        columns.emplace_back("hot_mb_8B",
                             fmt4(static_cast<double>(hot_footprint_bytes(d, 8)) / (1 << 20)));
        columns.emplace_back("hot_mb_16B",
                             fmt4(static_cast<double>(hot_footprint_bytes(d, 16)) / (1 << 20)));
    }
    if (args.all || args.ranges) {
        const DegreeRangeHistogram h = degree_range_histogram(d);
        for (std::size_t i = 0; i < 6; ++i)
            columns.emplace_back("bucket_" + std::to_string(i + 1), fmt4(h.vertex_pct[i]));
    }
    if (args.all || args.preservation)
        columns.emplace_back("preservation", fmt4(neighbor_preservation(order, args.window)));

    if (parse_format(g.format) == ReportFormat::csv) {
        std::string header;
        std::string row;
        for (const auto& [name, value] : columns) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += name;
            row += value;
        }
        write_text_output(g, header + "\n" + row + "\n");
    } else {
        nlohmann::json j;
        j["schema"] = "v1";
        for (const auto& [name, value] : columns) j[name] = std::strtod(value.c_str(), nullptr);
        write_text_output(g, j.dump(2) + "\n");
    }
    return 0;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
    std::string input;
    std::string kernel = "pr";
    std::uint64_t root = 0;
    std::string roots_file;
    std::uint64_t iters = 100;
    double tol = 1e-8;
    double damping = 0.85;
    double delta_threshold = 0.01;
    std::uint32_t sample_k = 64;
    std::string props_out;
};

std::vector<VertexId> read_roots_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open roots file: " + path);
    std::vector<VertexId> roots;
    std::uint64_t r = 0;
    while (f >> r) roots.push_back(static_cast<VertexId>(r));
    if (roots.empty()) throw FormatError("roots file is empty: " + path);
    return roots;
}

void write_f64_array(const std::string& path, const std::vector<double>& values) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open for writing: " + path);
    for (double v : values) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
        f.write(buf, 8);
    }
}

nlohmann::json kernel_result_json(const KernelResult& r, const std::string& kernel,
                                  const std::string& props_out) {
    nlohmann::json j;
    j["schema"] = "v1";
    j["kernel"] = kernel;
    j["iterations"] = r.iterations;
    j["per_iteration_s"] = r.per_iteration_seconds;
    j["properties"] = nlohmann::json::array();
    for (const PropertyArray& p : r.properties) {
        nlohmann::json pj;
        pj["name"] = p.name;
        if (props_out.empty()) {
            nlohmann::json values = nlohmann::json::array();
            for (double v : p.values) {
                if (std::isinf(v))
                    values.push_back("inf");
                else
                    values.push_back(v);
            }
            pj["values"] = std::move(values);
        } else {
            pj["values_file"] = props_out;
        }
        j["properties"].push_back(std::move(pj));
    }
    return j;
}

int run_run(const GlobalOptions& g, const RunArgs& args) {
    const CsrPair pair = CsrPair::from_csr(load_csr(args.input));
    const Kernel kernel = parse_kernel(args.kernel);

    std::vector<VertexId> roots;
    if (!args.roots_file.empty())
        roots = read_roots_file(args.roots_file);
    else
        roots.push_back(static_cast<VertexId>(args.root));

    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        KernelResult r;
        switch (kernel) {
            case Kernel::pr:
                r = pagerank(pair, {args.damping, args.tol, args.iters});
                break;
            case Kernel::prd:
                r = pagerank_delta(pair,
                                   {args.damping, args.delta_threshold, args.tol, args.iters});
                break;
            case Kernel::sssp:
                r = sssp_bellman_ford(pair, roots[i]);
                break;
            case Kernel::bc:
                r = bc(pair, roots[i]);
                break;
            case Kernel::radii:
                r = radii(pair, args.sample_k, g.seed);
                break;
        }
        std::string props_path = args.props_out;
        if (!props_path.empty() && roots.size() > 1)
            props_path += "." + std::to_string(i);
        if (!props_path.empty()) write_f64_array(props_path, r.primary().values);
        out.push_back(kernel_result_json(r, args.kernel, props_path));
        if (!kernel_is_root_dependent(kernel)) break; // one run covers all roots
    }

    write_text_output(g, (out.size() == 1 ? out[0] : out).dump(2) + "\n");
    return 0;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string input;
    std::string kernel = "pr";
    std::string techniques = "dbg";
    std::string dataset;
    std::uint32_t runs = 11;
    std::uint32_t roots = 8;
    std::string degree;
    std::uint64_t iters = 20;
    double tol = 1e-8;
};

BenchOptions bench_options(const GlobalOptions& g, std::uint32_t runs, std::uint32_t roots,
                           const std::string& degree, std::uint64_t iters, double tol) {
    BenchOptions opts;
    opts.runs = runs;
    opts.roots = roots;
    opts.seed = g.seed;
    if (!degree.empty()) opts.degree_kind = parse_degree_kind(degree);
    opts.pr.max_iters = iters;
    opts.pr.tolerance = tol;
    opts.prd.max_iters = iters;
    opts.prd.tolerance = tol;
    return opts;
}

int run_bench(const GlobalOptions& g, const BenchArgs& args) {
    const CsrPair pair = CsrPair::from_csr(load_csr(args.input));
    const std::string dataset = args.dataset.empty() ? args.input : args.dataset;
    std::vector<TechniqueConfig> techniques;
    for (const std::string& name : split_csv(args.techniques))
        techniques.push_back(technique_from_name(name, g.seed, 1, 8));
    const BenchOptions opts =
        bench_options(g, args.runs, args.roots, args.degree, args.iters, args.tol);
    const BenchReport report =
        bench(pair, dataset, techniques, parse_kernel(args.kernel), opts);
    write_text_output(g, emit_report(report, parse_format(g.format)));
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
    std::string input;
    std::string kernel = "sssp";
    std::string technique = "dbg";
    std::string dataset;
    std::string counts = "1,8,16,24,32";
    std::uint32_t runs = 4;
    std::uint32_t roots = 8;
    std::uint64_t iters = 20;
};

int run_sweep(const GlobalOptions& g, const SweepArgs& args) {
    const CsrPair pair = CsrPair::from_csr(load_csr(args.input));
    const std::string dataset = args.dataset.empty() ? args.input : args.dataset;
    std::vector<std::uint64_t> counts;
    for (const std::string& c : split_csv(args.counts))
        counts.push_back(std::stoull(c));
    const TechniqueConfig cfg = technique_from_name(args.technique, g.seed, 1, 8);
    const BenchOptions opts = bench_options(g, args.runs, args.roots, "", args.iters, 1e-8);
    const SweepRow row =
        traversal_sweep(pair, dataset, cfg, parse_kernel(args.kernel), counts, opts);

    if (parse_format(g.format) == ReportFormat::csv) {
        std::string text = "dataset,technique,traversals,net_speedup\n";
        for (const SweepPoint& pt : row.points)
            text += row.dataset + ',' + row.technique + ',' + std::to_string(pt.traversals) +
                    ',' + fmt4(pt.net) + '\n';
        write_text_output(g, text);
    } else {
        nlohmann::json j;
        j["schema"] = "v1";
        j["dataset"] = row.dataset;
        j["technique"] = row.technique;
        j["reorder_s"] = row.reorder_s;
        j["points"] = nlohmann::json::array();
        for (const SweepPoint& pt : row.points)
            j["points"].push_back({{"traversals", pt.traversals}, {"net_speedup", pt.net}});
        write_text_output(g, j.dump(2) + "\n");
    }
    return 0;
}

// ---- cachesim ----------------------------------------------------------------

struct CachesimArgs {
    std::string input;
    std::string kernel = "pr";
    std::string config = "l1=32768:8,l2=262144:8,l3=2097152:16";
    std::string orderings = "base,dbg,sort";
    std::uint32_t property_bytes = 8;
    bool inclusive = false;
    std::string degree;
};

int run_cachesim(const GlobalOptions& g, const CachesimArgs& args) {
    if (parse_kernel(args.kernel) != Kernel::pr)
        throw ParameterError("cachesim models the pr pull iteration only");
    CsrGraph csr = load_csr(args.input);
    if (csr.direction != Direction::in_edges) csr = transpose(csr);

    CacheConfig cfg = CacheConfig::parse(args.config);
    cfg.inclusive = args.inclusive;

    const DegreeKind kind =
        args.degree.empty() ? kernel_degree_kind(Kernel::pr) : parse_degree_kind(args.degree);
    const DegreeVector d = degrees(csr, kind);

    std::vector<std::pair<std::string, Permutation>> orderings;
    for (const std::string& name : split_csv(args.orderings)) {
        if (name == "base") {
            orderings.emplace_back("base", Permutation::identity(csr.num_vertices()));
        } else {
            const TechniqueConfig t = technique_from_name(name, g.seed, 1, 8);
            orderings.emplace_back(name, make_permutation(t, d));
        }
    }

    const auto results = compare_orderings(csr, orderings, cfg, args.property_bytes);
    if (parse_format(g.format) == ReportFormat::csv) {
        std::string text = "ordering,level,accesses,misses,mpka\n";
        for (const OrderingStats& r : results)
            for (std::size_t k = 0; k < r.stats.levels.size(); ++k)
                text += r.name + ",l" + std::to_string(k + 1) + ',' +
                        std::to_string(r.stats.levels[k].accesses) + ',' +
                        std::to_string(r.stats.levels[k].misses) + ',' + fmt4(r.stats.mpka(k)) +
                        '\n';
        write_text_output(g, text);
    } else {
        nlohmann::json j;
        j["schema"] = "v1";
        j["orderings"] = nlohmann::json::array();
        for (const OrderingStats& r : results) {
            nlohmann::json oj;
            oj["ordering"] = r.name;
            oj["levels"] = nlohmann::json::array();
            for (std::size_t k = 0; k < r.stats.levels.size(); ++k)
                oj["levels"].push_back({{"level", k + 1},
                                        {"accesses", r.stats.levels[k].accesses},
                                        {"misses", r.stats.levels[k].misses},
                                        {"mpka", r.stats.mpka(k)}});
            j["orderings"].push_back(std::move(oj));
        }
        write_text_output(g, j.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-aware vertex reordering toolkit for power-law graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--threads", global.threads, "worker thread count (0 = default)");
    app.add_option("--seed", global.seed, "seed for all randomized steps");
    app.add_option("--format", global.format, "report format: csv or json");
    app.add_option("--out", global.out, "output path (default: stdout)");

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "generate an R-MAT edge list");
    cmd_gen->add_option("--scale", gen.params.scale, "V = 2^scale")->required();
    cmd_gen->add_option("--edge-factor", gen.params.edge_factor, "E = V * edge_factor");
    cmd_gen->add_option("--a", gen.params.a, "quadrant probability a");
    cmd_gen->add_option("--b", gen.params.b, "quadrant probability b");
    cmd_gen->add_option("--c", gen.params.c, "quadrant probability c");
    cmd_gen->add_flag("--weighted", gen.params.weighted, "uniform integer weights in [1,64]");
    cmd_gen->add_flag("--binary", gen.binary, "emit binary CSR instead of text");
    cmd_gen->add_option("--direction", gen.direction, "binary CSR direction: in or out");

    IngestArgs ing;
    auto* cmd_ing = app.add_subcommand("ingest", "convert a text edge list to binary CSR");
    cmd_ing->add_option("input", ing.input, "edge list file")->required();
    cmd_ing->add_flag("--weighted", ing.weighted, "parse 'src dst weight' lines");
    cmd_ing->add_option("--direction", ing.direction, "CSR direction: in or out");
    cmd_ing->add_option("--num-vertices", ing.num_vertices, "override the vertex count");

    ReorderArgs reo;
    auto* cmd_reo = app.add_subcommand("reorder", "relabel vertices with a technique");
    cmd_reo->add_option("input", reo.input, "binary CSR file")->required();
    cmd_reo->add_option("--technique", reo.technique,
                        "dbg|sort|hubsort|hubcluster|rv|rcb[-n]");
    cmd_reo->add_option("--degree", reo.degree, "degree kind: in, out or sum");
    cmd_reo->add_option("--rcb-n", reo.rcb_n, "cache blocks per rcb chunk");
    cmd_reo->add_option("--vertices-per-block", reo.vertices_per_block,
                        "vertices per cache block (default 8)");
    cmd_reo->add_option("--emit-mapping", reo.mapping_path, "write old->new mapping file");

    StatsArgs sta;
    auto* cmd_sta = app.add_subcommand("stats", "skew, footprint and structure metrics");
    cmd_sta->add_option("input", sta.input, "binary CSR file")->required();
    cmd_sta->add_flag("--all", sta.all, "all metric groups (default)");
    cmd_sta->add_flag("--skew", sta.skew, "hot fraction and edge coverage");
    cmd_sta->add_flag("--footprint", sta.footprint, "hot vertices per block and bytes");
    cmd_sta->add_flag("--ranges", sta.ranges, "hot-degree range histogram");
    cmd_sta->add_flag("--preservation", sta.preservation, "neighbor preservation");
    cmd_sta->add_option("--degree", sta.degree, "degree kind: in, out or sum");
    cmd_sta->add_option("--mapping", sta.mapping_path, "mapping file for the layout");
    cmd_sta->add_option("--window", sta.window, "preservation window (default 8)");
    cmd_sta->add_option("--vertices-per-block", sta.vertices_per_block,
                        "vertices per cache block (default 8)");

    RunArgs run;
    auto* cmd_run = app.add_subcommand("run", "run a kernel and emit its result");
    cmd_run->add_option("input", run.input, "binary CSR file")->required();
    cmd_run->add_option("--kernel", run.kernel, "pr|prd|sssp|bc|radii")->required();
    cmd_run->add_option("--root", run.root, "root vertex for sssp/bc");
    cmd_run->add_option("--roots-file", run.roots_file, "file with one root per line");
    cmd_run->add_option("--iters", run.iters, "max iterations");
    cmd_run->add_option("--tol", run.tol, "convergence tolerance");
    cmd_run->add_option("--damping", run.damping, "pagerank damping factor");
    cmd_run->add_option("--delta-threshold", run.delta_threshold, "prd activation threshold");
    cmd_run->add_option("--sample-k", run.sample_k, "radii sample size");
    cmd_run->add_option("--props-out", run.props_out, "write properties as binary f64 array");

    BenchArgs ben;
    auto* cmd_ben = app.add_subcommand("bench", "timing harness with a baseline row");
    cmd_ben->add_option("input", ben.input, "binary CSR file")->required();
    cmd_ben->add_option("--kernel", ben.kernel, "pr|prd|sssp|bc|radii");
    cmd_ben->add_option("--techniques", ben.techniques, "comma list of techniques");
    cmd_ben->add_option("--dataset", ben.dataset, "dataset label (default: input path)");
    cmd_ben->add_option("--runs", ben.runs, "runs per row; first is discarded");
    cmd_ben->add_option("--roots", ben.roots, "roots aggregated per run (sssp/bc)");
    cmd_ben->add_option("--degree", ben.degree, "override reordering degree kind");
    cmd_ben->add_option("--iters", ben.iters, "max kernel iterations");
    cmd_ben->add_option("--tol", ben.tol, "kernel tolerance");

    SweepArgs swe;
    auto* cmd_swe = app.add_subcommand("sweep", "net speedup vs traversal count");
    cmd_swe->add_option("input", swe.input, "binary CSR file")->required();
    cmd_swe->add_option("--kernel", swe.kernel, "traversal kernel (default sssp)");
    cmd_swe->add_option("--technique", swe.technique, "reordering technique");
    cmd_swe->add_option("--dataset", swe.dataset, "dataset label");
    cmd_swe->add_option("--counts", swe.counts, "comma list of traversal counts");
    cmd_swe->add_option("--runs", swe.runs, "runs per measurement");
    cmd_swe->add_option("--roots", swe.roots, "roots per run");

    CachesimArgs sim;
    auto* cmd_sim = app.add_subcommand("cachesim", "simulated cache misses per ordering");
    cmd_sim->add_option("input", sim.input, "binary CSR file")->required();
    cmd_sim->add_option("--kernel", sim.kernel, "traced kernel (pr only)");
    cmd_sim->add_option("--config", sim.config, "levels, e.g. l1=32768:8,l2=262144:8");
    cmd_sim->add_option("--orderings", sim.orderings, "comma list, 'base' = as stored");
    cmd_sim->add_option("--property-bytes", sim.property_bytes, "property element size");
    cmd_sim->add_flag("--inclusive", sim.inclusive, "back-invalidate on eviction");
    cmd_sim->add_option("--degree", sim.degree, "override reordering degree kind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#if defined(_OPENMP)
    if (global.threads > 0) omp_set_num_threads(global.threads);
#endif

    try {
        if (cmd_gen->parsed()) return run_generate(global, gen);
        if (cmd_ing->parsed()) return run_ingest(global, ing);
        if (cmd_reo->parsed()) return run_reorder(global, reo);
        if (cmd_sta->parsed()) return run_stats(global, sta);
        if (cmd_run->parsed()) return run_run(global, run);
        if (cmd_ben->parsed()) return run_bench(global, ben);
        if (cmd_swe->parsed()) return run_sweep(global, swe);
        if (cmd_sim->parsed()) return run_cachesim(global, sim);
    } catch (const graphorder::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const graphorder::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const graphorder::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
