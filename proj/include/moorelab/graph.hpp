#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace moorelab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Side : std::uint8_t { Point, Line };

/// Structured vertex names used by the plane and record constructions.
/// Field coordinates are stored as element indices.
struct VertexLabel {
    enum class Kind : std::uint8_t {
        InfinityPoint,  // P
        InfinityLine,   // L
        LinePoint,      // P_i
        PointLine,      // L_i
        AffinePoint,    // (i,j)
        AffineLine,     // [m,b]
        HatPoint,       // ^(0,j)
        HatLine,        // ^[0,j]
        Q0,
        M0,
        Anonymous,      // v<k>
    };

    Kind kind = Kind::Anonymous;
    std::int64_t first = -1;
    std::int64_t second = -1;

    static VertexLabel infinity_point() { return {Kind::InfinityPoint}; }
    static VertexLabel infinity_line() { return {Kind::InfinityLine}; }
    static VertexLabel line_point(std::int64_t i) { return {Kind::LinePoint, i}; }
    static VertexLabel point_line(std::int64_t i) { return {Kind::PointLine, i}; }
    static VertexLabel affine_point(std::int64_t x, std::int64_t y) { return {Kind::AffinePoint, x, y}; }
    static VertexLabel affine_line(std::int64_t m, std::int64_t b) { return {Kind::AffineLine, m, b}; }
    static VertexLabel hat_point(std::int64_t j) { return {Kind::HatPoint, 0, j}; }
    static VertexLabel hat_line(std::int64_t j) { return {Kind::HatLine, 0, j}; }
    static VertexLabel q0() { return {Kind::Q0}; }
    static VertexLabel m0() { return {Kind::M0}; }
    static VertexLabel anonymous(std::int64_t k) { return {Kind::Anonymous, k}; }

    std::string str() const;

    auto operator<=>(const VertexLabel&) const = default;
};

/// Undirected simple graph with optional bipartition sides and unique labels.
///
/// Vertices are numbered in insertion order and never reordered. Neighbour
/// lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// n anonymous vertices, no edges.
    explicit Graph(std::size_t n);

    Vertex add_vertex(const VertexLabel& label, std::optional<Side> side = std::nullopt);

    /// Throws SelfLoop, DuplicateEdge, VertexOutOfRange or SideViolation.
    void add_edge(Vertex u, Vertex v);
    /// Throws MissingEdge when absent.
    void remove_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    const VertexLabel& label(Vertex v) const;
    std::optional<Vertex> find(const VertexLabel& label) const;
    /// Like find() but throws VertexOutOfRange when absent.
    Vertex at(const VertexLabel& label) const;
    std::string vertex_name(Vertex v) const { return label(v).str(); }

    bool has_sides() const noexcept { return has_sides_; }
    std::optional<Side> side(Vertex v) const;
    /// Assigns every side at once; throws SideViolation if an edge is monochromatic.
    void set_sides(const std::vector<Side>& sides);

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexLabel> labels_;
    std::map<VertexLabel, Vertex> index_;
    std::vector<std::optional<Side>> sides_;
    bool has_sides_ = false;
    std::size_t edge_count_ = 0;
};

/// Relabels vertices: vertex v of `g` becomes perm[v] in the result. Labels
/// and sides travel with their vertices.
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace moorelab
