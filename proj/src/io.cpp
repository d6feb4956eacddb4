#include "moorelab/io.hpp"

#include <fstream>
#include <sstream>

#include "moorelab/error.hpp"

namespace moorelab {

namespace {

constexpr std::uint64_t kMaxGraph6Order = 68719476735ull;

void append_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

std::uint64_t sextet(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw Error(ErrorCode::MalformedGraph6, "invalid character at offset " + std::to_string(pos));
    return c - 63u;
}

}  // namespace

std::string encode_graph6(const Graph& g)
{
    const std::uint64_t n = g.order();
    if (n > kMaxGraph6Order)
        throw Error(ErrorCode::TooLarge, "graph too large for graph6");
    std::string out;
    append_size(out, n);
    int filled = 0;
    unsigned bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + bits));
                filled = 0;
                bits = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
    return out;
}

Graph decode_graph6(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorCode::MalformedGraph6, "empty string");
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = sextet(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4)
            throw Error(ErrorCode::MalformedGraph6, "truncated size header");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | sextet(text, i);
        pos = 4;
    } else {
        if (text.size() < 8)
            throw Error(ErrorCode::MalformedGraph6, "truncated size header");
        for (std::size_t i = 2; i <= 7; ++i)
            n = (n << 6) | sextet(text, i);
        pos = 8;
    }
    const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (bit_count + 5) / 6;
    if (text.size() - pos != expected)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(expected) + " data bytes for n=" +
                                                    std::to_string(n) + ", got " + std::to_string(text.size() - pos));
    Graph g(static_cast<std::size_t>(n));
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const std::uint64_t chunk = sextet(text, pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    if (bit % 6 != 0) {
        const std::uint64_t chunk = sextet(text, pos + bit / 6);
        if (chunk & ((1u << (6 - bit % 6)) - 1))
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0)
            line.erase(0, 10);
        if (line.empty())
            continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    for (const auto& g : graphs)
        out << encode_graph6(g) << '\n';
    if (!out)
        throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string export_dot(const Graph& g, std::string_view name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  n" << v << " [label=\"" << g.vertex_name(v) << "\"";
        if (auto side = g.side(v))
            out << ", shape=" << (*side == Side::Point ? "circle" : "box");
        out << "];\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  n" << u << " -- n" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace moorelab
