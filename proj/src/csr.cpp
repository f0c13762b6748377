#include "graphorder/csr.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "graphorder/error.hpp"

namespace graphorder {

namespace {

constexpr char kMagic[8] = {'C', 'S', 'R', 'G', 'R', 'A', 'F', '1'};

// Sorts each neighbor slice ascending; parallel edges order by weight so the
// layout is canonical no matter how the graph was assembled.
void sort_neighbor_lists(CsrGraph& g) {
    const VertexId n = g.num_vertices();
    if (!g.weighted) {
        for (VertexId v = 0; v < n; ++v)
            std::sort(g.targets.begin() + static_cast<std::ptrdiff_t>(g.offsets[v]),
                      g.targets.begin() + static_cast<std::ptrdiff_t>(g.offsets[v + 1]));
        return;
    }
    std::vector<std::pair<VertexId, double>> scratch;
    for (VertexId v = 0; v < n; ++v) {
        const EdgeIndex begin = g.offsets[v];
        const EdgeIndex end = g.offsets[v + 1];
        scratch.clear();
        for (EdgeIndex e = begin; e < end; ++e) scratch.emplace_back(g.targets[e], g.weights[e]);
        std::sort(scratch.begin(), scratch.end());
        for (EdgeIndex e = begin; e < end; ++e) {
            g.targets[e] = scratch[e - begin].first;
            g.weights[e] = scratch[e - begin].second;
        }
    }
}

void validate_edge_list(const EdgeList& el) {
    for (const Edge& e : el.edges)
        if (e.src >= el.num_vertices || e.dst >= el.num_vertices)
            throw InvariantViolation("edge endpoint exceeds vertex count");
    if (el.weighted && el.weights.size() != el.edges.size())
        throw InvariantViolation("weight array length does not match edge count");
}

// Little-endian writer with its own coalescing buffer; per-value stream
// calls are too slow for hundred-million-edge graphs.
class LeWriter {
public:
    explicit LeWriter(std::ostream& out) : out_(out) { buf_.reserve(kFlushAt + 16); }
    ~LeWriter() { flush(); }

    void u8(std::uint8_t v) {
        buf_.push_back(static_cast<char>(v));
        maybe_flush();
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
        maybe_flush();
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void raw(const char* data, std::size_t n) {
        buf_.insert(buf_.end(), data, data + n);
        maybe_flush();
    }
    void flush() {
        if (!buf_.empty()) {
            out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
            buf_.clear();
        }
    }

private:
    static constexpr std::size_t kFlushAt = 1 << 20;
    void maybe_flush() {
        if (buf_.size() >= kFlushAt) flush();
    }
    std::ostream& out_;
    std::vector<char> buf_;
};

class LeReader {
public:
    explicit LeReader(std::istream& in) : in_(in) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(buf_[pos_++]);
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf_[pos_ + i])) << (8 * i);
        pos_ += 8;
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }

private:
    void need(std::size_t n) {
        if (pos_ + n <= size_) return;
        // Shift the unread tail down and refill.
        const std::size_t tail = size_ - pos_;
        std::memmove(buf_, buf_ + pos_, tail);
        pos_ = 0;
        size_ = tail;
        in_.read(buf_ + size_, static_cast<std::streamsize>(sizeof(buf_) - size_));
        size_ += static_cast<std::size_t>(in_.gcount());
        if (size_ < n) throw FormatError("truncated CSR stream");
    }

    std::istream& in_;
    char buf_[1 << 16];
    std::size_t pos_ = 0;
    std::size_t size_ = 0;
};

} // namespace

std::uint64_t DegreeVector::max() const {
    std::uint64_t m = 0;
    for (std::uint64_t v : values) m = std::max(m, v);
    return m;
}

CsrGraph build_csr(const EdgeList& el, Direction direction) {
    validate_edge_list(el);
    const VertexId n = el.num_vertices;
    const EdgeIndex m = el.num_edges();

    CsrGraph g;
    g.direction = direction;
    g.weighted = el.weighted;
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    g.targets.resize(m);
    if (el.weighted) g.weights.resize(m);

    // Counting sort keyed by the owning endpoint.
    const bool key_is_dst = direction == Direction::in_edges;
    for (const Edge& e : el.edges) ++g.offsets[(key_is_dst ? e.dst : e.src) + 1];
    for (VertexId v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];

    std::vector<EdgeIndex> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (EdgeIndex i = 0; i < m; ++i) {
        const Edge& e = el.edges[i];
        const VertexId key = key_is_dst ? e.dst : e.src;
        const VertexId other = key_is_dst ? e.src : e.dst;
        const EdgeIndex slot = cursor[key]++;
        g.targets[slot] = other;
        if (el.weighted) g.weights[slot] = el.weights[i];
    }

    sort_neighbor_lists(g);
    return g;
}

CsrGraph transpose(const CsrGraph& g) {
    const VertexId n = g.num_vertices();
    const EdgeIndex m = g.num_edges();

    CsrGraph t;
    t.direction = g.direction == Direction::in_edges ? Direction::out_edges : Direction::in_edges;
    t.weighted = g.weighted;
    t.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    t.targets.resize(m);
    if (g.weighted) t.weights.resize(m);

    for (EdgeIndex e = 0; e < m; ++e) ++t.offsets[g.targets[e] + 1];
    for (VertexId v = 0; v < n; ++v) t.offsets[v + 1] += t.offsets[v];

    std::vector<EdgeIndex> cursor(t.offsets.begin(), t.offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeIndex e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            const EdgeIndex slot = cursor[g.targets[e]]++;
            t.targets[slot] = v;
            if (g.weighted) t.weights[slot] = g.weights[e];
        }
    }

    sort_neighbor_lists(t);
    return t;
}

DegreeVector degrees(const CsrGraph& g, DegreeKind kind) {
    const VertexId n = g.num_vertices();
    DegreeVector d;
    d.kind = kind;
    d.values.assign(n, 0);

    const bool own_is_in = g.direction == Direction::in_edges;
    const bool want_own = (kind == DegreeKind::in && own_is_in) ||
                          (kind == DegreeKind::out && !own_is_in);

    if (kind == DegreeKind::sum || want_own)
        for (VertexId v = 0; v < n; ++v) d.values[v] += g.degree(v);
    if (kind == DegreeKind::sum || !want_own)
        for (VertexId t : g.targets) ++d.values[t];

    std::uint64_t total = 0;
    for (std::uint64_t v : d.values) total += v;
    d.avg = n == 0 ? Rational{0, 1} : Rational{total, n};
    return d;
}

CsrGraph apply_permutation(const CsrGraph& g, const Permutation& p) {
    const VertexId n = g.num_vertices();
    if (p.size() != n)
        throw InvariantViolation("permutation size does not match vertex count");

    CsrGraph out;
    out.direction = g.direction;
    out.weighted = g.weighted;
    out.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    out.targets.resize(g.targets.size());
    if (g.weighted) out.weights.resize(g.weights.size());

    for (VertexId v = 0; v < n; ++v) out.offsets[p.to_new(v) + 1] = g.degree(v);
    for (VertexId v = 0; v < n; ++v) out.offsets[v + 1] += out.offsets[v];

    for (VertexId new_v = 0; new_v < n; ++new_v) {
        const VertexId old_v = p.to_old(new_v);
        EdgeIndex slot = out.offsets[new_v];
        for (EdgeIndex e = g.offsets[old_v]; e < g.offsets[old_v + 1]; ++e, ++slot) {
            out.targets[slot] = p.to_new(g.targets[e]);
            if (g.weighted) out.weights[slot] = g.weights[e];
        }
    }

    sort_neighbor_lists(out);
    return out;
}

CsrPair CsrPair::from_edge_list(const EdgeList& el) {
    return {build_csr(el, Direction::in_edges), build_csr(el, Direction::out_edges)};
}

CsrPair CsrPair::from_csr(const CsrGraph& g) {
    if (g.direction == Direction::in_edges) return {g, transpose(g)};
    return {transpose(g), g};
}

CsrPair CsrPair::permuted(const Permutation& p) const {
    return {apply_permutation(in_csr, p), apply_permutation(out_csr, p)};
}

void serialize_csr(const CsrGraph& g, std::ostream& out) {
    LeWriter w(out);
    w.raw(kMagic, 8);
    w.u8(static_cast<std::uint8_t>(g.direction));
    w.u8(g.weighted ? 1 : 0);
    w.u64(g.num_vertices());
    w.u64(g.num_edges());
    for (EdgeIndex o : g.offsets) w.u64(o);
    for (VertexId t : g.targets) w.u64(t);
    if (g.weighted)
        for (double wt : g.weights) w.f64(wt);
    w.flush();
    if (!out) throw FormatError("write failure while serializing CSR");
}

CsrGraph deserialize_csr(std::istream& in) {
    LeReader r(in);
    char magic[8];
    for (char& c : magic) c = static_cast<char>(r.u8());
    if (std::memcmp(magic, kMagic, 8) != 0) throw FormatError("bad CSR magic");

    const std::uint8_t dir = r.u8();
    if (dir > 1) throw FormatError("bad CSR direction byte");
    const std::uint8_t weighted = r.u8();
    if (weighted > 1) throw FormatError("bad CSR weighted byte");

    const std::uint64_t v = r.u64();
    const std::uint64_t e = r.u64();
    if (v > 0xffffffffULL) throw FormatError("CSR vertex count out of range");

    CsrGraph g;
    g.direction = static_cast<Direction>(dir);
    g.weighted = weighted == 1;
    g.offsets.resize(v + 1);
    for (std::uint64_t i = 0; i <= v; ++i) g.offsets[i] = r.u64();
    if (g.offsets[0] != 0) throw FormatError("CSR offsets must start at 0");
    for (std::uint64_t i = 0; i < v; ++i)
        if (g.offsets[i] > g.offsets[i + 1]) throw FormatError("CSR offsets must be non-decreasing");
    if (g.offsets[v] != e) throw FormatError("CSR offsets do not end at edge count");

    g.targets.resize(e);
    for (std::uint64_t i = 0; i < e; ++i) {
        const std::uint64_t t = r.u64();
        if (t >= v) throw FormatError("CSR target out of range");
        g.targets[i] = static_cast<VertexId>(t);
    }
    if (g.weighted) {
        g.weights.resize(e);
        for (std::uint64_t i = 0; i < e; ++i) g.weights[i] = r.f64();
    }
    return g;
}

void save_csr(const CsrGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    serialize_csr(g, out);
}

CsrGraph load_csr(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open for reading: " + path);
    return deserialize_csr(in);
}

void save_mapping(const Permutation& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    LeWriter w(out);
    for (VertexId v : p.old_to_new()) w.u64(v);
    w.flush();
    if (!out) throw FormatError("write failure while saving mapping");
}

Permutation load_mapping(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open for reading: " + path);
    std::vector<VertexId> old_to_new;
    for (;;) {
        char buf[8];
        in.read(buf, 8);
        if (in.gcount() == 0) break;
        if (in.gcount() != 8) throw FormatError("truncated mapping file");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[i])) << (8 * i);
        if (v > 0xffffffffULL) throw FormatError("mapping entry out of range");
        old_to_new.push_back(static_cast<VertexId>(v));
    }
    return Permutation::from_old_to_new(std::move(old_to_new));
}

} // namespace graphorder
