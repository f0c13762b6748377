#include "graphorder/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "graphorder/error.hpp"

namespace graphorder {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits off the next whitespace-delimited token; empty when exhausted.
std::string_view next_token(std::string_view& rest) {
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    std::size_t end = 0;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    std::string_view tok = rest.substr(0, end);
    rest.remove_prefix(end);
    return tok;
}

std::uint64_t parse_id(std::string_view tok, std::uint64_t line_no) {
    if (!tok.empty() && tok.front() == '-')
        throw FormatError("line " + std::to_string(line_no) + ": negative vertex id '" +
                          std::string(tok) + "'");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("line " + std::to_string(line_no) + ": malformed vertex id '" +
                          std::string(tok) + "'");
    return value;
}

double parse_weight(std::string_view tok, std::uint64_t line_no) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("line " + std::to_string(line_no) + ": malformed weight '" +
                          std::string(tok) + "'");
    if (!(value > 0))
        throw FormatError("line " + std::to_string(line_no) + ": non-positive weight '" +
                          std::string(tok) + "'");
    return value;
}

// "# vertices: N" pins the vertex count so trailing isolated vertices
// survive ingestion.
std::optional<std::uint64_t> header_vertex_count(std::string_view comment, std::uint64_t line_no) {
    comment.remove_prefix(1);
    comment = trim(comment);
    constexpr std::string_view key = "vertices:";
    if (comment.substr(0, key.size()) != key) return std::nullopt;
    std::string_view tok = trim(comment.substr(key.size()));
    return parse_id(tok, line_no);
}

} // namespace

EdgeList parse_edge_list(std::istream& in, bool weighted) {
    EdgeList el;
    el.weighted = weighted;
    std::optional<std::uint64_t> declared_vertices;
    std::uint64_t max_id_plus_one = 0;

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#' || sv.front() == '%') {
            if (auto v = header_vertex_count(sv, line_no)) declared_vertices = v;
            continue;
        }

        std::string_view rest = sv;
        std::uint64_t src = parse_id(next_token(rest), line_no);
        std::string_view dst_tok = next_token(rest);
        if (dst_tok.empty())
            throw FormatError("line " + std::to_string(line_no) + ": missing destination id");
        std::uint64_t dst = parse_id(dst_tok, line_no);
        if (src > 0xffffffffULL || dst > 0xffffffffULL)
            throw FormatError("line " + std::to_string(line_no) + ": vertex id out of range");

        if (weighted) {
            std::string_view w_tok = next_token(rest);
            if (w_tok.empty())
                throw FormatError("line " + std::to_string(line_no) + ": missing weight");
            el.weights.push_back(parse_weight(w_tok, line_no));
        }
        if (!trim(rest).empty())
            throw FormatError("line " + std::to_string(line_no) + ": trailing tokens");

        el.edges.push_back({static_cast<VertexId>(src), static_cast<VertexId>(dst)});
        max_id_plus_one = std::max(max_id_plus_one, std::max(src, dst) + 1);
    }

    std::uint64_t v = declared_vertices ? std::max(*declared_vertices, max_id_plus_one)
                                        : max_id_plus_one;
    if (v > 0xffffffffULL) throw FormatError("vertex count out of range");
    el.num_vertices = static_cast<VertexId>(v);
    return el;
}

EdgeList parse_edge_list_file(const std::string& path, bool weighted) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open edge list file: " + path);
    return parse_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const EdgeList& el) {
    out << "# vertices: " << el.num_vertices << "\n";
    for (std::size_t i = 0; i < el.edges.size(); ++i) {
        out << el.edges[i].src << ' ' << el.edges[i].dst;
        if (el.weighted) out << ' ' << el.weights[i];
        out << '\n';
    }
}

} // namespace graphorder
