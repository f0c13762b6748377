#include <doctest.h>

#include <random>

#include "graphorder/cachesim.hpp"
#include "graphorder/error.hpp"
#include "oracles.hpp"

using namespace graphorder;

namespace {

// Single array of whole cache blocks: element index == block index.
AccessTrace block_trace(std::vector<std::uint64_t> blocks, std::uint64_t array_elems = 1024) {
    AccessTrace t;
    t.arrays = {{"data", 64, array_elems}};
    for (std::uint64_t b : blocks) t.accesses.push_back({b, 0, AccessKind::read});
    return t;
}

CacheConfig single_level(std::uint64_t capacity, std::uint32_t assoc) {
    CacheConfig cfg;
    cfg.levels = {{capacity, assoc}};
    return cfg;
}

AccessTrace random_trace(std::mt19937_64& rng, std::size_t len) {
    AccessTrace t;
    t.arrays = {{"a", 8, 512}, {"b", 4, 1024}, {"c", 12, 300}};
    for (std::size_t i = 0; i < len; ++i) {
        const auto array_id = static_cast<std::uint32_t>(rng() % t.arrays.size());
        t.accesses.push_back({rng() % t.arrays[array_id].num_elements, array_id,
                              (rng() & 1) ? AccessKind::write : AccessKind::read});
    }
    return t;
}

} // namespace

TEST_SUITE("cachesim") {

TEST_CASE("repeated address misses once") {
    const CacheStats s = simulate(block_trace({5, 5, 5, 5}), single_level(4096, 8));
    CHECK(s.levels[0].accesses == 4);
    CHECK(s.levels[0].misses == 1);
}

TEST_CASE("sequential scan through a one-block cache misses every block") {
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t i = 0; i < 100; ++i) blocks.push_back(i);
    const CacheStats s = simulate(block_trace(blocks), single_level(64, 1));
    CHECK(s.levels[0].misses == 100);
}

TEST_CASE("two-way two-set conflict pattern") {
    // Blocks 0, 2, 4 all map to set 0 of a 2-way cache: classic LRU thrash.
    const AccessTrace t = block_trace({0, 2, 4, 0, 2, 4});
    const CacheConfig cfg = single_level(256, 2);
    const CacheStats s = simulate(t, cfg);
    CHECK(s.levels[0].misses == 6);
    const CacheStats oracle = oracles::list_lru_simulate(t, cfg);
    CHECK(s.levels[0].misses == oracle.levels[0].misses);
}

TEST_CASE("matches the recency-list oracle on random traces") {
    std::mt19937_64 rng(127);
    for (int i = 0; i < 10; ++i) {
        const AccessTrace t = random_trace(rng, 10000);
        CacheConfig cfg;
        cfg.levels = {{1024, 2}, {4096, 4}, {16384, 8}};
        const CacheStats fast = simulate(t, cfg);
        const CacheStats slow = oracles::list_lru_simulate(t, cfg);
        REQUIRE(fast.levels.size() == slow.levels.size());
        for (std::size_t k = 0; k < fast.levels.size(); ++k) {
            CHECK(fast.levels[k].accesses == slow.levels[k].accesses);
            CHECK(fast.levels[k].misses == slow.levels[k].misses);
        }
    }
}

TEST_CASE("per-level conservation: next-level accesses equal this level's misses") {
    std::mt19937_64 rng(131);
    const AccessTrace t = random_trace(rng, 20000);
    CacheConfig cfg;
    cfg.levels = {{512, 2}, {2048, 4}, {8192, 8}};
    const CacheStats s = simulate(t, cfg);
    for (std::size_t k = 0; k + 1 < s.levels.size(); ++k)
        CHECK(s.levels[k + 1].accesses == s.levels[k].misses);
    CHECK(s.levels[0].accesses == s.trace_accesses);
}

TEST_CASE("fully-associative LRU misses never grow with capacity") {
    std::mt19937_64 rng(137);
    for (int i = 0; i < 8; ++i) {
        const AccessTrace t = random_trace(rng, 5000);
        std::uint64_t prev = ~std::uint64_t{0};
        for (std::uint64_t blocks : {4, 8, 16, 32, 64}) {
            const CacheStats s = simulate(
                t, single_level(blocks * 64, static_cast<std::uint32_t>(blocks)));
            CHECK(s.levels[0].misses <= prev);
            prev = s.levels[0].misses;
        }
    }
}

TEST_CASE("straddling elements touch both blocks") {
    AccessTrace t;
    t.arrays = {{"props", 12, 64}};
    // Element 5 spans bytes 60..71: blocks 0 and 1.
    t.accesses.push_back({5, 0, AccessKind::read});
    const CacheStats s = simulate(t, single_level(4096, 8));
    CHECK(s.trace_accesses == 2);
    CHECK(s.levels[0].misses == 2);
}

TEST_CASE("pull-iteration trace shape on the six-vertex fixture") {
    EdgeList el;
    el.num_vertices = 6;
    el.edges = {{0, 1}, {2, 1}, {3, 1}, {1, 3}, {4, 3}, {5, 3}, {1, 0}, {3, 5}};
    const CsrGraph g = build_csr(el, Direction::in_edges);
    const AccessTrace t = trace_pull_iteration(g, 8);

    // Vertex and edge arrays are each touched exactly once per element.
    std::uint64_t vertex_reads = 0;
    std::uint64_t edge_reads = 0;
    std::uint64_t prop_reads = 0;
    std::uint64_t prop_writes = 0;
    for (const Access& a : t.accesses) {
        if (a.array_id == 0) ++vertex_reads;
        if (a.array_id == 1) ++edge_reads;
        if (a.array_id == 2) ++prop_reads;
        if (a.array_id == 3) ++prop_writes;
    }
    CHECK(vertex_reads == 6);
    CHECK(edge_reads == 8);
    CHECK(prop_reads == 8);   // one per in-edge
    CHECK(prop_writes == 4);  // vertices with at least one in-edge

    // Processing vertex 1 (in-neighbors 0, 2, 3): property reads at 0, 2, 3
    // immediately before the write at 1.
    bool saw_write_1 = false;
    std::vector<std::uint64_t> reads_before_write1;
    for (const Access& a : t.accesses) {
        if (a.array_id == 3 && a.index == 1) {
            saw_write_1 = true;
            break;
        }
        if (a.array_id == 2) reads_before_write1.push_back(a.index);
    }
    REQUIRE(saw_write_1);
    REQUIRE(reads_before_write1.size() >= 3);
    const std::vector<std::uint64_t> tail(reads_before_write1.end() - 3,
                                          reads_before_write1.end());
    CHECK(tail == std::vector<std::uint64_t>{0, 2, 3});
}

TEST_CASE("pull-iteration trace rejects off-grid property sizes") {
    EdgeList el;
    el.num_vertices = 2;
    el.edges = {{0, 1}};
    const CsrGraph g = build_csr(el, Direction::in_edges);
    CHECK_THROWS_AS(trace_pull_iteration(g, 7), ParameterError);
    for (std::uint32_t bytes : {4u, 8u, 12u, 16u, 20u}) CHECK_NOTHROW(trace_pull_iteration(g, bytes));
}

TEST_CASE("pull-iteration trace of an empty graph is vertex reads only") {
    EdgeList el;
    el.num_vertices = 5;
    const AccessTrace t = trace_pull_iteration(build_csr(el, Direction::in_edges), 8);
    CHECK(t.accesses.size() == 5);
    for (const Access& a : t.accesses) {
        CHECK(a.array_id == 0);
        CHECK(a.kind == AccessKind::read);
    }
}

TEST_CASE("property reads equal edge count on random graphs") {
    std::mt19937_64 rng(139);
    for (int i = 0; i < 10; ++i) {
        const EdgeList el = oracles::random_edge_list(rng, 200);
        const AccessTrace t = trace_pull_iteration(build_csr(el, Direction::in_edges), 8);
        std::uint64_t prop_reads = 0;
        for (const Access& a : t.accesses)
            if (a.array_id == 2) ++prop_reads;
        CHECK(prop_reads == el.num_edges());
    }
}

TEST_CASE("compare_orderings with identical permutations is a no-op") {
    std::mt19937_64 rng(149);
    const EdgeList el = oracles::random_edge_list(rng, 300);
    const CsrGraph g = build_csr(el, Direction::in_edges);
    const auto stats = compare_orderings(
        g,
        {{"one", Permutation::identity(el.num_vertices)},
         {"two", Permutation::identity(el.num_vertices)}},
        CacheConfig::default_hierarchy(), 8);
    REQUIRE(stats.size() == 2);
    for (std::size_t k = 0; k < stats[0].stats.levels.size(); ++k) {
        CHECK(stats[0].stats.levels[k].accesses == stats[1].stats.levels[k].accesses);
        CHECK(stats[0].stats.levels[k].misses == stats[1].stats.levels[k].misses);
    }
}

TEST_CASE("config parsing and validation") {
    const CacheConfig cfg = CacheConfig::parse("l1=32768:8,l2=262144:8,l3=2097152:16");
    REQUIRE(cfg.levels.size() == 3);
    CHECK(cfg.levels[0].capacity_bytes == 32768);
    CHECK(cfg.levels[2].associativity == 16);

    CHECK_THROWS_AS(CacheConfig::parse("l1=100:8"), ParameterError);   // not block aligned
    CHECK_THROWS_AS(CacheConfig::parse("nonsense"), ParameterError);
    CHECK_THROWS_AS(CacheConfig::parse("l1=4096:8,l2=1024:8"), ParameterError); // shrinking

    CacheConfig bad;
    bad.levels = {{4096, 0}};
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    CHECK_THROWS_AS(simulate(block_trace({0}), bad), ParameterError);
}

TEST_CASE("inclusive mode back-invalidates lower levels") {
    // Block 0 lives in L1 set 0; blocks 1 and 3 thrash the single L2 set
    // until 0 is evicted there. With inclusion, that eviction knocks 0 out
    // of L1 too, so the final access misses everywhere.
    const AccessTrace t = block_trace({0, 1, 3, 0});
    CacheConfig incl;
    incl.levels = {{128, 1}, {128, 2}};
    incl.inclusive = true;
    const CacheStats with_incl = simulate(t, incl);
    CacheConfig non = incl;
    non.inclusive = false;
    const CacheStats without = simulate(t, non);
    CHECK(with_incl.levels[0].misses == 4);
    CHECK(without.levels[0].misses == 3);
}

} // TEST_SUITE
